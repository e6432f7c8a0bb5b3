#include "sonc/hypercube.hpp"

#include <algorithm>

namespace sonc {

Hypercube::Hypercube(std::vector<std::pair<Rational, Rational>> roots) : roots_(std::move(roots)) {
    for (std::size_t j = 0; j < roots_.size(); ++j) {
        if (!(roots_[j].first < roots_[j].second)) {
            throw SoncError("hypercube roots must satisfy a_" + std::to_string(j + 1) + " < b_" +
                            std::to_string(j + 1));
        }
    }
    if (roots_.empty()) {
        throw SoncError("hypercube needs at least one coordinate");
    }
}

Hypercube Hypercube::symmetric(int n) {
    std::vector<std::pair<Rational, Rational>> roots(n, {Rational(-1), Rational(1)});
    return Hypercube(std::move(roots));
}

Hypercube Hypercube::unit(int n) {
    std::vector<std::pair<Rational, Rational>> roots(n, {Rational(0), Rational(1)});
    return Hypercube(std::move(roots));
}

SparsePoly Hypercube::g(int j) const {
    const int n = dimension();
    const Rational& a = roots_[j].first;
    const Rational& b = roots_[j].second;
    SparsePoly p(n);
    ExponentVector e(n, 0);
    e[j] = 2;
    p.add_term(e, Rational(1));
    e[j] = 1;
    p.add_term(e, -(a + b));
    e[j] = 0;
    p.add_term(e, a * b);
    return p;
}

std::vector<Rational> Hypercube::vertex_point(std::uint64_t mask) const {
    const int n = dimension();
    std::vector<Rational> point(n);
    for (int j = 0; j < n; ++j) {
        point[j] = (mask & (std::uint64_t{1} << j)) ? roots_[j].second : roots_[j].first;
    }
    return point;
}

std::optional<std::uint64_t> Hypercube::vertex_mask(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != dimension()) return std::nullopt;
    std::uint64_t mask = 0;
    for (int j = 0; j < dimension(); ++j) {
        if (point[j] == roots_[j].second) {
            mask |= std::uint64_t{1} << j;
        } else if (point[j] != roots_[j].first) {
            return std::nullopt;
        }
    }
    return mask;
}

void check_vertex_cap(const Hypercube& cube, int cap) {
    if (cube.dimension() > cap) {
        throw DimensionTooLargeError("vertex enumeration over " +
                                     std::to_string(cube.dimension()) +
                                     " coordinates exceeds the cap of " + std::to_string(cap));
    }
}

SparsePoly DeltaFactored::expand() const {
    if (factors.empty()) {
        throw SoncError("delta product has no factors");
    }
    SparsePoly p = SparsePoly::constant(factors.front().dimension(), scale);
    for (const auto& f : factors) p = p * f;
    return p;
}

Rational DeltaFactored::evaluate(const std::vector<Rational>& point) const {
    Rational v = scale;
    for (const auto& f : factors) v *= f.evaluate(point);
    return v;
}

KroneckerDelta kronecker_delta(const Hypercube& cube, std::uint64_t mask) {
    const int n = cube.dimension();
    DeltaFactored df;
    df.scale = Rational(1);
    df.factors.reserve(n);
    for (int j = 0; j < n; ++j) {
        df.scale /= cube.upper(j) - cube.lower(j);
        SparsePoly factor(n);
        ExponentVector e(n, 0);
        if (mask & (std::uint64_t{1} << j)) {
            // v_j = b_j: factor x_j - a_j
            e[j] = 1;
            factor.add_term(e, Rational(1));
            e[j] = 0;
            factor.add_term(e, -cube.lower(j));
        } else {
            // v_j = a_j: factor -x_j + b_j
            e[j] = 1;
            factor.add_term(e, Rational(-1));
            e[j] = 0;
            factor.add_term(e, cube.upper(j));
        }
        df.factors.push_back(std::move(factor));
    }
    SparsePoly expanded = df.expand();
    return KroneckerDelta{std::move(df), std::move(expanded)};
}

KroneckerDelta kronecker_delta(const Hypercube& cube, const std::vector<Rational>& vertex) {
    auto mask = cube.vertex_mask(vertex);
    if (!mask) {
        throw NotAVertexError("point is not a vertex of the hypercube");
    }
    return kronecker_delta(cube, *mask);
}

NormalFormResult normal_form(const SparsePoly& f, const Hypercube& cube) {
    const int n = cube.dimension();
    if (f.dimension() != n) {
        throw DimensionMismatchError("polynomial and hypercube dimensions differ");
    }
    SparsePoly work = f;
    std::vector<SparsePoly> quotients(n, SparsePoly::zero(n));

    while (true) {
        // glex-leading reducible term: scan from the top of the term map.
        ExponentVector lead;
        Rational lead_coef;
        int var = -1;
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            for (int j = 0; j < n; ++j) {
                if (it->first[j] >= 2) {
                    lead = it->first;
                    lead_coef = it->second;
                    var = j;
                    break;
                }
            }
            if (var >= 0) break;
        }
        if (var < 0) break;

        // c x^alpha = c x^(alpha - 2 e_j) * g_j + c x^(alpha - 2 e_j) * ((a+b) x_j - ab)
        ExponentVector reduced = lead;
        reduced[var] -= 2;
        const Rational& a = cube.lower(var);
        const Rational& b = cube.upper(var);

        quotients[var].add_term(reduced, lead_coef);

        ExponentVector mid = reduced;
        mid[var] += 1;
        work.add_term(lead, -lead_coef);
        work.add_term(mid, lead_coef * (a + b));
        work.add_term(reduced, -lead_coef * a * b);
    }
    return NormalFormResult{std::move(work), std::move(quotients)};
}

SPolyCheckResult s_polynomial_check(const Hypercube& cube) {
    const int n = cube.dimension();
    if (n < 2) {
        throw SoncError("S-polynomial check needs at least two coordinates");
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const Rational& ai = cube.lower(i);
            const Rational& bi = cube.upper(i);
            const Rational& aj = cube.lower(j);
            const Rational& bj = cube.upper(j);
            SparsePoly s(n);
            ExponentVector e(n, 0);
            e[i] = 2;
            e[j] = 1;
            s.add_term(e, aj + bj);
            e[i] = 1;
            e[j] = 2;
            s.add_term(e, -(ai + bi));
            e[i] = 2;
            e[j] = 0;
            s.add_term(e, -(aj * bj));
            e[i] = 0;
            e[j] = 2;
            s.add_term(e, ai * bi);
            auto nf = normal_form(s, cube);
            if (!nf.remainder.is_zero()) {
                return SPolyCheckResult{false, i, j};
            }
        }
    }
    return SPolyCheckResult{};
}

ConstraintSet::ConstraintSet(std::vector<SparsePoly> inequalities,
                             std::optional<Rational> box_constant)
    : inequalities_(std::move(inequalities)), box_constant_(std::move(box_constant)) {}

int ConstraintSet::max_degree() const {
    int d = 0;
    for (const auto& p : inequalities_) {
        d = std::max(d, p.degree().value_or(0));
    }
    return d;
}

Rational ConstraintSet::effective_box_constant(const Hypercube& cube) const {
    Rational bound(0);
    for (int j = 0; j < cube.dimension(); ++j) {
        const Rational la = abs(cube.lower(j));
        const Rational lb = abs(cube.upper(j));
        if (la > bound) bound = la;
        if (lb > bound) bound = lb;
    }
    if (box_constant_) {
        if (*box_constant_ < bound) {
            throw SoncError("box constant N is smaller than max_j max(|a_j|, |b_j|)");
        }
        return *box_constant_;
    }
    return bound + 1;
}

std::vector<std::uint64_t> feasible_vertices(const Hypercube& cube, const ConstraintSet& constraints,
                                             int cap) {
    for (const auto& p : constraints.inequalities()) {
        if (p.dimension() != cube.dimension()) {
            throw DimensionMismatchError("constraint dimension does not match the hypercube");
        }
    }
    std::vector<std::uint64_t> feasible;
    for_each_vertex(
        cube,
        [&](std::uint64_t mask, const std::vector<Rational>& point) {
            for (const auto& p : constraints.inequalities()) {
                if (p.evaluate(point) < 0) return;
            }
            feasible.push_back(mask);
        },
        cap);
    return feasible;
}

}  // namespace sonc
