#include "sonc/circuit.hpp"

#include <algorithm>

#include "sonc/errors.hpp"
#include "sonc/linalg.hpp"

namespace sonc {

CircuitPoly::CircuitPoly(int dimension, std::vector<CircuitTerm> outer,
                         std::optional<CircuitTerm> inner, std::vector<Rational> lambdas)
    : dimension_(dimension), outer_(std::move(outer)), inner_(std::move(inner)),
      lambdas_(std::move(lambdas)) {
    if (outer_.empty()) {
        throw SoncError("circuit polynomial needs at least one outer term");
    }
    if (inner_.has_value() && lambdas_.size() != outer_.size()) {
        throw SoncError("one barycentric coordinate per outer vertex required");
    }
    // Canonical vertex order keeps rendering and comparisons deterministic.
    std::vector<std::size_t> order(outer_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    GlexLess less;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return less(outer_[a].exponent, outer_[b].exponent);
    });
    std::vector<CircuitTerm> outer_sorted;
    std::vector<Rational> lambdas_sorted;
    outer_sorted.reserve(outer_.size());
    for (std::size_t i : order) {
        outer_sorted.push_back(outer_[i]);
        if (!lambdas_.empty()) lambdas_sorted.push_back(lambdas_[i]);
    }
    outer_ = std::move(outer_sorted);
    lambdas_ = std::move(lambdas_sorted);
}

CircuitPoly CircuitPoly::monomial_square(int dimension, ExponentVector exponent,
                                         const Rational& coefficient) {
    if (!is_even_point(exponent)) {
        throw CircuitError(CircuitDefect::VertexNotEven, "monomial square exponent must be even");
    }
    if (coefficient <= 0) {
        throw CircuitError(CircuitDefect::NegativeOuterCoefficient,
                           "monomial square coefficient must be positive");
    }
    return CircuitPoly(dimension, {CircuitTerm{std::move(exponent), coefficient}}, std::nullopt, {});
}

SparsePoly CircuitPoly::to_poly() const {
    SparsePoly p(dimension_);
    for (const auto& t : outer_) p.add_term(t.exponent, t.coefficient);
    if (inner_) p.add_term(inner_->exponent, inner_->coefficient);
    return p;
}

Rational CircuitPoly::evaluate(const std::vector<Rational>& point) const {
    return to_poly().evaluate(point);
}

int CircuitPoly::degree() const {
    int d = 0;
    for (const auto& t : outer_) d = std::max(d, total_degree(t.exponent));
    if (inner_) d = std::max(d, total_degree(inner_->exponent));
    return d;
}

bool CircuitPoly::operator==(const CircuitPoly& other) const {
    return dimension_ == other.dimension_ && outer_ == other.outer_ && inner_ == other.inner_;
}

namespace {

int compare_exponents(const ExponentVector& a, const ExponentVector& b) {
    GlexLess less;
    if (less(a, b)) return -1;
    if (less(b, a)) return 1;
    return 0;
}

int compare_rationals(const Rational& a, const Rational& b) {
    return cmp(a, b);
}

}  // namespace

int compare(const CircuitPoly& a, const CircuitPoly& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension() ? -1 : 1;
    if (a.outer().size() != b.outer().size()) {
        return a.outer().size() < b.outer().size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < a.outer().size(); ++i) {
        if (int c = compare_exponents(a.outer()[i].exponent, b.outer()[i].exponent)) return c;
        if (int c = compare_rationals(a.outer()[i].coefficient, b.outer()[i].coefficient)) return c;
    }
    if (a.has_inner() != b.has_inner()) return a.has_inner() ? 1 : -1;
    if (a.has_inner()) {
        if (int c = compare_exponents(a.inner()->exponent, b.inner()->exponent)) return c;
        if (int c = compare_rationals(a.inner()->coefficient, b.inner()->coefficient)) return c;
    }
    return 0;
}

namespace {

// Affine independence of the columns {alpha(j)}: rank of the matrix with
// rows (alpha(j), 1) stacked as columns equals the number of points.
bool affinely_independent(const std::vector<ExponentVector>& points, int dimension) {
    Matrix m(dimension + 1, std::vector<Rational>(points.size(), Rational(0)));
    for (std::size_t col = 0; col < points.size(); ++col) {
        for (int row = 0; row < dimension; ++row) m[row][col] = points[col][row];
        m[dimension][col] = 1;
    }
    return rank(std::move(m)) == static_cast<int>(points.size());
}

// Solves [alpha(0)..alpha(r); 1..1] lambda = [beta; 1].
SolveResult barycentric_solve(const std::vector<ExponentVector>& vertices,
                              const ExponentVector& beta, int dimension) {
    Matrix m(dimension + 1, std::vector<Rational>(vertices.size(), Rational(0)));
    std::vector<Rational> rhs(dimension + 1, Rational(0));
    for (std::size_t col = 0; col < vertices.size(); ++col) {
        for (int row = 0; row < dimension; ++row) m[row][col] = vertices[col][row];
        m[dimension][col] = 1;
    }
    for (int row = 0; row < dimension; ++row) rhs[row] = beta[row];
    rhs[dimension] = 1;
    return solve_linear(std::move(m), std::move(rhs));
}

struct Classified {
    std::vector<CircuitTerm> outer;
    CircuitTerm inner;
    std::vector<Rational> lambdas;
};

// Attempts the interpretation "inner exponent = beta"; nullopt when beta is
// not strictly interior to the simplex on the remaining points.
std::optional<Classified> try_inner(const std::vector<CircuitTerm>& terms, std::size_t beta_idx,
                                    int dimension, bool* dependent) {
    std::vector<CircuitTerm> outer;
    std::vector<ExponentVector> vertices;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == beta_idx) continue;
        outer.push_back(terms[i]);
        vertices.push_back(terms[i].exponent);
    }
    if (!affinely_independent(vertices, dimension)) {
        *dependent = true;
        return std::nullopt;
    }
    auto solved = barycentric_solve(vertices, terms[beta_idx].exponent, dimension);
    if (solved.status != SolveStatus::Unique) return std::nullopt;
    for (const auto& l : solved.solution) {
        if (l <= 0) return std::nullopt;
    }
    return Classified{std::move(outer), terms[beta_idx], std::move(solved.solution)};
}

}  // namespace

CircuitPoly validate_circuit(const SparsePoly& candidate) {
    if (candidate.is_zero()) {
        throw SoncError("cannot validate the zero polynomial as a circuit");
    }
    const int n = candidate.dimension();
    std::vector<CircuitTerm> terms;
    terms.reserve(candidate.terms().size());
    for (const auto& [e, c] : candidate.terms()) terms.push_back(CircuitTerm{e, c});

    std::vector<std::size_t> odd_points;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!is_even_point(terms[i].exponent)) odd_points.push_back(i);
    }

    if (terms.size() == 1) {
        const auto& t = terms.front();
        if (!is_even_point(t.exponent)) {
            throw CircuitError(CircuitDefect::VertexNotEven,
                               "single-term support must be an even point");
        }
        if (t.coefficient <= 0) {
            throw CircuitError(CircuitDefect::NegativeOuterCoefficient,
                               "monomial square needs a positive coefficient");
        }
        return CircuitPoly::monomial_square(n, t.exponent, t.coefficient);
    }

    if (odd_points.size() >= 2) {
        throw CircuitError(CircuitDefect::TooManyInnerTerms,
                           "support has " + std::to_string(odd_points.size()) +
                               " non-even points; a circuit admits one inner term");
    }

    if (odd_points.size() == 1) {
        const std::size_t beta_idx = odd_points.front();
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i != beta_idx && terms[i].coefficient <= 0) {
                throw CircuitError(CircuitDefect::NegativeOuterCoefficient,
                                   "outer term " + render_poly(SparsePoly::monomial(
                                                       n, terms[i].exponent, terms[i].coefficient)) +
                                       " must have a positive coefficient");
            }
        }
        bool dependent = false;
        auto classified = try_inner(terms, beta_idx, n, &dependent);
        if (dependent) {
            throw CircuitError(CircuitDefect::NotASimplex,
                               "outer exponents are affinely dependent");
        }
        if (!classified) {
            throw CircuitError(CircuitDefect::InnerNotStrictlyInterior,
                               "inner exponent is not strictly interior to the simplex");
        }
        return CircuitPoly(n, std::move(classified->outer), classified->inner,
                           std::move(classified->lambdas));
    }

    // All support points even: the inner term, if any, sits on an even point.
    std::size_t dependent_trials = 0;
    for (std::size_t beta_idx = 0; beta_idx < terms.size(); ++beta_idx) {
        bool outer_positive = true;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i != beta_idx && terms[i].coefficient <= 0) {
                outer_positive = false;
                break;
            }
        }
        if (!outer_positive) continue;
        bool dependent = false;
        auto classified = try_inner(terms, beta_idx, n, &dependent);
        if (dependent) {
            ++dependent_trials;
            continue;
        }
        if (classified) {
            return CircuitPoly(n, std::move(classified->outer), classified->inner,
                               std::move(classified->lambdas));
        }
    }
    if (dependent_trials == terms.size()) {
        throw CircuitError(CircuitDefect::TooManyInnerTerms,
                           "more than one support point lies inside the Newton polytope");
    }
    throw CircuitError(CircuitDefect::NotASimplex,
                       "support is not a simplex with one strictly interior point");
}

CircuitCmp circuit_number_compare(const CircuitPoly& c) {
    if (!c.has_inner()) {
        throw CircuitError(CircuitDefect::NoInnerTerm,
                           "circuit number comparison needs an inner term");
    }
    Integer d_common = 1;
    for (const auto& l : c.lambdas()) {
        mpz_lcm(d_common.get_mpz_t(), d_common.get_mpz_t(), l.get_den().get_mpz_t());
    }
    if (!d_common.fits_ulong_p()) {
        throw SoncError("lambda denominator lcm exceeds the machine exponent range");
    }
    const unsigned long d = d_common.get_ui();

    // |f_beta|^D vs prod_j (f_alpha(j)/lambda_j)^(lambda_j * D); every
    // exponent lambda_j * D is a nonnegative integer, so both sides are exact.
    const Rational lhs = pow_rational(abs(c.inner()->coefficient), d);
    Rational rhs(1);
    for (std::size_t j = 0; j < c.outer().size(); ++j) {
        const Rational exponent_q = c.lambdas()[j] * Rational(d_common);
        Integer e = exponent_q.get_num();
        if (exponent_q.get_den() != 1 || !e.fits_ulong_p()) {
            throw SoncError("barycentric exponent did not reduce to a machine integer");
        }
        rhs *= pow_rational(c.outer()[j].coefficient / c.lambdas()[j], e.get_ui());
    }
    const int s = cmp(lhs, rhs);
    if (s < 0) return CircuitCmp::Less;
    if (s > 0) return CircuitCmp::Greater;
    return CircuitCmp::Equal;
}

bool is_nonnegative(const CircuitPoly& c) {
    if (!c.has_inner()) return true;
    if (is_even_point(c.inner()->exponent) && c.inner()->coefficient >= 0) return true;
    return circuit_number_compare(c) != CircuitCmp::Greater;
}

}  // namespace sonc
