#include "sonc/certify.hpp"

#include <algorithm>

#include "sonc/errors.hpp"

namespace sonc {

void ConstraintProduct::add(Atom atom) {
    if (atom.kind == AtomKind::One) return;  // neutral factor
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), atom);
    atoms_.insert(it, atom);
}

int ConstraintProduct::degree(const ConstraintSet& constraints) const {
    int d = 0;
    for (const auto& atom : atoms_) {
        switch (atom.kind) {
            case AtomKind::One: break;
            case AtomKind::G:
            case AtomKind::NegG: d += 2; break;
            case AtomKind::BoxPlus:
            case AtomKind::BoxMinus: d += 1; break;
            case AtomKind::P:
                d += constraints.inequalities()
                         .at(static_cast<std::size_t>(atom.index))
                         .degree()
                         .value_or(0);
                break;
        }
    }
    return d;
}

int term_degree(const CertTerm& term, const ConstraintSet& constraints) {
    return term.circuit.degree() + term.product.degree(constraints);
}

namespace {

int even_ceiling(int d) {
    return d % 2 == 0 ? d : d + 1;
}

// Case 2 of the vanishing decomposition: for an exponent beta with odd
// entries at indices I (|I| = k, ascending) the flanking even vertices are
// alpha(1) = beta + sum of e_i over the first ceil(k/2) indices minus the
// rest, and alpha(2) mirrored.
std::pair<ExponentVector, ExponentVector> flanking_even_vertices(const ExponentVector& beta) {
    std::vector<int> odd;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] % 2 != 0) odd.push_back(static_cast<int>(i));
    }
    const std::size_t k = odd.size();
    const std::size_t half = (k + 1) / 2;
    ExponentVector alpha1 = beta;
    ExponentVector alpha2 = beta;
    for (std::size_t t = 0; t < k; ++t) {
        if (t < half) {
            alpha1[odd[t]] += 1;
            alpha2[odd[t]] -= 1;
        } else {
            alpha1[odd[t]] -= 1;
            alpha2[odd[t]] += 1;
        }
    }
    return {std::move(alpha1), std::move(alpha2)};
}

}  // namespace

VanishingDecomposition decompose_vanishing(const SparsePoly& f, const Hypercube& cube) {
    VanishingDecomposition out;
    if (f.is_zero()) return out;

    auto nf = normal_form(f, cube);
    if (!nf.remainder.is_zero()) {
        throw DoesNotVanishError("polynomial does not vanish on the hypercube (remainder " +
                                 render_poly(nf.remainder) + ")");
    }

    const int n = cube.dimension();
    const int degree_budget = even_ceiling(f.degree().value_or(0)) - 2;
    for (int j = 0; j < n; ++j) {
        for (const auto& [beta, a] : nf.quotients[j].terms()) {
            if (is_even_point(beta)) {
                // a m g_j with even exponent: +-(monomial square) times +-g_j.
                const int sign = a > 0 ? 1 : -1;
                out.terms.push_back(VanishingTerm{
                    CircuitPoly::monomial_square(n, beta, abs(a)), sign, j});
                continue;
            }
            auto [alpha1, alpha2] = flanking_even_vertices(beta);
            const Rational mag = abs(a);
            CircuitPoly bridge(n,
                               {CircuitTerm{alpha1, mag}, CircuitTerm{alpha2, mag}},
                               CircuitTerm{beta, a},
                               {Rational(1, 2), Rational(1, 2)});
            // a m g_j = bridge * g_j + (mag x^alpha1 + mag x^alpha2) * (-g_j)
            out.terms.push_back(VanishingTerm{std::move(bridge), 1, j});
            out.terms.push_back(VanishingTerm{CircuitPoly::monomial_square(n, alpha1, mag), -1, j});
            out.terms.push_back(VanishingTerm{CircuitPoly::monomial_square(n, alpha2, mag), -1, j});
        }
    }
    for (const auto& term : out.terms) {
        if (term.circuit.degree() > degree_budget) {
            throw SoncError("vanishing decomposition exceeded its degree budget");
        }
    }
    return out;
}

int tie_break_pv(const std::vector<Rational>& vertex, const ConstraintSet& constraints) {
    for (std::size_t i = 0; i < constraints.inequalities().size(); ++i) {
        if (constraints.inequalities()[i].evaluate(vertex) < 0) {
            return static_cast<int>(i);
        }
    }
    throw NoViolatedConstraintError("no constraint is violated at the given vertex");
}

namespace {

bool cert_term_less(const CertTerm& lhs, const CertTerm& rhs) {
    if (lhs.product != rhs.product) return lhs.product < rhs.product;
    if (int c = compare(lhs.circuit, rhs.circuit)) return c < 0;
    if (int c = cmp(lhs.weight, rhs.weight)) return c < 0;
    return cmp(lhs.scale, rhs.scale) < 0;
}

}  // namespace

Certificate certify_hypercube(const SparsePoly& f, const Hypercube& cube,
                              const ConstraintSet& constraints, int cap) {
    const int n = cube.dimension();
    if (f.dimension() != n) {
        throw DimensionMismatchError("polynomial and hypercube dimensions differ");
    }
    for (const auto& p : constraints.inequalities()) {
        if (p.dimension() != n) {
            throw DimensionMismatchError("constraint dimension does not match the hypercube");
        }
    }
    if (f.degree().value_or(0) > n) {
        throw SoncError("polynomial degree exceeds the dimension; reduce it first");
    }
    check_vertex_cap(cube, cap);
    if (!constraints.empty()) {
        constraints.effective_box_constant(cube);  // validates a stored N
    }

    Certificate cert;
    SparsePoly matched = SparsePoly::zero(n);
    const CircuitPoly one = CircuitPoly::monomial_square(n, ExponentVector(n, 0), Rational(1));

    for_each_vertex(
        cube,
        [&](std::uint64_t mask, const std::vector<Rational>& point) {
            bool feasible = true;
            for (const auto& p : constraints.inequalities()) {
                if (p.evaluate(point) < 0) {
                    feasible = false;
                    break;
                }
            }
            const Rational value = f.evaluate(point);
            if (feasible && value < 0) {
                std::string where = "(";
                for (int j = 0; j < n; ++j) {
                    if (j) where += ", ";
                    where += rational_to_string(point[j]);
                }
                where += ")";
                throw NegativeOnFeasibleVertexError("polynomial is negative (" +
                                                        rational_to_string(value) +
                                                        ") on the feasible vertex " + where,
                                                    mask);
            }
            if (value == 0) return;  // zero-weight terms are dropped

            auto delta = kronecker_delta(cube, mask);
            CertTerm term{Rational(0), delta.factored.scale, one, ConstraintProduct{}};
            for (int j = 0; j < n; ++j) {
                const bool upper = (mask & (std::uint64_t{1} << j)) != 0;
                term.product.add(Atom{upper ? AtomKind::BoxPlus : AtomKind::BoxMinus, j});
            }
            SparsePoly expanded = delta.expanded;
            if (!feasible && value < 0) {
                const int idx = tie_break_pv(point, constraints);
                const SparsePoly& pv = constraints.inequalities()[idx];
                term.weight = value / pv.evaluate(point);
                term.product.add(Atom{AtomKind::P, idx});
                expanded = expanded * pv;
            } else {
                term.weight = value;
            }
            matched = matched + term.weight * expanded;
            cert.terms.push_back(std::move(term));
        },
        cap);

    const SparsePoly residual = f - matched;
    if (!residual.is_zero()) {
        auto decomposition = decompose_vanishing(residual, cube);
        for (auto& vt : decomposition.terms) {
            ConstraintProduct product;
            product.add(Atom{vt.sign > 0 ? AtomKind::G : AtomKind::NegG, vt.j});
            cert.terms.push_back(
                CertTerm{Rational(1), Rational(1), std::move(vt.circuit), std::move(product)});
        }
    }

    int actual = 0;
    for (const auto& term : cert.terms) {
        actual = std::max(actual, term_degree(term, constraints));
    }
    cert.declared_degree = std::max(n + constraints.max_degree(), actual);
    std::sort(cert.terms.begin(), cert.terms.end(), cert_term_less);
    return cert;
}

}  // namespace sonc
