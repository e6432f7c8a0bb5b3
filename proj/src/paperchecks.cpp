#include "sonc/paperchecks.hpp"

#include <bit>
#include <random>

#include "sonc/errors.hpp"

namespace sonc {

SparsePoly build_fa(int n, const Rational& a) {
    if (n < 1) throw DimensionTooSmallError("f_a needs at least one variable");
    SparsePoly product = SparsePoly::constant(n, Rational(1));
    for (int i = 0; i < n; ++i) {
        SparsePoly half(n);
        ExponentVector e(n, 0);
        e[i] = 1;
        half.add_term(e, Rational(1, 2));
        e[i] = 0;
        half.add_term(e, Rational(1, 2));
        product = product * half;
    }
    return (a - 1) * product + SparsePoly::constant(n, Rational(1));
}

Rational putinar_bound(int n) {
    if (n <= 2) {
        throw DimensionTooSmallError("the bound (2^n - 1)/(2^(n-2) - 1) needs n >= 3");
    }
    return make_rational(pow2(static_cast<unsigned long>(n)) - 1,
                         pow2(static_cast<unsigned long>(n - 2)) - 1);
}

namespace {

// Value of a polynomial at the +-1 vertex encoded by mask (set bit = +1).
// x^alpha is +-1 by the parity of odd-exponent coordinates set to -1.
Rational evaluate_pm1(const std::vector<std::pair<std::uint64_t, Rational>>& parity_terms,
                      std::uint64_t vmask, std::uint64_t full) {
    Rational v(0);
    for (const auto& [odd_mask, coef] : parity_terms) {
        const int flips = std::popcount(odd_mask & ~vmask & full);
        if (flips % 2 == 0) {
            v += coef;
        } else {
            v -= coef;
        }
    }
    return v;
}

std::vector<std::pair<std::uint64_t, Rational>> parity_terms_of(const SparsePoly& p) {
    std::vector<std::pair<std::uint64_t, Rational>> out;
    out.reserve(p.terms().size());
    for (const auto& [exp, coef] : p.terms()) {
        std::uint64_t odd_mask = 0;
        for (std::size_t j = 0; j < exp.size(); ++j) {
            if (exp[j] % 2 != 0) odd_mask |= std::uint64_t{1} << j;
        }
        out.emplace_back(odd_mask, coef);
    }
    return out;
}

SparsePoly embed_circuit(const CircuitPoly& circuit, int n) {
    if (circuit.dimension() > n) {
        throw DimensionMismatchError("circuit uses more variables than the hypercube");
    }
    return embed(circuit.to_poly(), n);
}

}  // namespace

ValueProfile value_profile(const SparsePoly& s, int n, int cap) {
    if (n > cap) {
        throw DimensionTooLargeError("value profile over " + std::to_string(n) +
                                     " variables exceeds the cap of " + std::to_string(cap));
    }
    if (s.dimension() > n) {
        throw DimensionMismatchError("polynomial uses more variables than requested");
    }
    const SparsePoly p = s.dimension() == n ? s : embed(s, n);
    const auto parity = parity_terms_of(p);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    ValueProfile profile;
    for (std::uint64_t vmask = 0; vmask <= full; ++vmask) {
        ++profile.histogram[evaluate_pm1(parity, vmask, full)];
    }
    return profile;
}

bool check_lemma52(const CircuitPoly& circuit, int n) {
    const auto profile = value_profile(embed_circuit(circuit, n), n);
    if (profile.histogram.size() > 2) return false;
    if (profile.histogram.size() == 2) {
        const Integer half = pow2(static_cast<unsigned long>(n)) / 2;
        for (const auto& [value, count] : profile.histogram) {
            if (Integer(static_cast<unsigned long>(count)) != half) return false;
        }
    }
    return true;
}

SparsePoly BoxAtom::to_poly(int n) const {
    if (var < 0 || var >= n) throw DimensionMismatchError("box variable out of range");
    if (c < 0) throw SoncError("box constraint offset must be nonnegative");
    SparsePoly p(n);
    ExponentVector e(n, 0);
    p.add_term(e, Rational(1) + c);
    e[var] = 1;
    p.add_term(e, Rational(plus ? 1 : -1));
    return p;
}

bool check_lemma53(const CircuitPoly& circuit, const BoxAtom& box, int n) {
    const SparsePoly product = embed_circuit(circuit, n) * box.to_poly(n);
    const auto profile = value_profile(product, n);
    if (profile.histogram.size() > 4) return false;
    const Integer total = pow2(static_cast<unsigned long>(n));
    for (const auto& [value, count] : profile.histogram) {
        if (Integer(static_cast<unsigned long>(count)) * 4 < total) return false;
    }
    return true;
}

bool lemma31_regression() {
    const SparsePoly p1 = parse_poly("1 - 2*x1 + x1^2", 2);
    const SparsePoly p2 = parse_poly("1 - 2*x2 + x2^2", 2);

    // Both factors are nonnegative circuits on the boundary: Theta = |f_beta| = 2.
    for (const SparsePoly* p : {&p1, &p2}) {
        const CircuitPoly c = validate_circuit(*p);
        if (!c.has_inner()) return false;
        if (c.lambdas() != std::vector<Rational>{Rational(1, 2), Rational(1, 2)}) return false;
        if (circuit_number_compare(c) != CircuitCmp::Equal) return false;
        if (!is_nonnegative(c)) return false;
    }

    const SparsePoly r = p1 * p2;
    SparsePoly expected(2);
    expected.add_term({0, 0}, Rational(1));
    expected.add_term({1, 0}, Rational(-2));
    expected.add_term({0, 1}, Rational(-2));
    expected.add_term({1, 1}, Rational(4));
    expected.add_term({2, 0}, Rational(1));
    expected.add_term({0, 2}, Rational(1));
    expected.add_term({2, 1}, Rational(-2));
    expected.add_term({1, 2}, Rational(-2));
    expected.add_term({2, 2}, Rational(1));
    if (r != expected || r.terms().size() != 9) return false;
    if (r.coefficient({1, 1}) != 4) return false;

    // Any decomposition must host the inner term -2 x_i inside a circuit on
    // the outer support {1, x_i^2}; the x_i^2 budget in r is 1, so the
    // constant coefficient c_i obeys |-2| <= 2 sqrt(c_i * 1), i.e. c_i >= 1.
    const Rational x1_budget = r.coefficient({2, 0});
    const Rational x2_budget = r.coefficient({0, 2});
    const Rational inner1 = r.coefficient({1, 0});
    const Rational inner2 = r.coefficient({0, 1});
    const Rational constant_budget = r.coefficient({0, 0});
    const Rational c1_min = inner1 * inner1 / (4 * x1_budget);
    const Rational c2_min = inner2 * inner2 / (4 * x2_budget);
    if (c1_min != 1 || c2_min != 1) return false;

    // {c1 >= c1_min, c2 >= c2_min, c1 + c2 <= constant_budget} is infeasible
    // exactly when the minimal demands already exceed the budget.
    return c1_min + c2_min > constant_budget;
}

bool corollary32_regression() {
    const SparsePoly monomial_square = parse_poly("x1^2*x2^2", 2);
    const std::vector<SparsePoly> affine = {parse_poly("1 - x1", 2), parse_poly("1 - x2", 2)};
    const SparsePoly transformed = substitute(monomial_square, affine);
    const SparsePoly r = parse_poly("1 - 2*x1 + x1^2", 2) * parse_poly("1 - 2*x2 + x2^2", 2);
    return transformed == r;
}

bool theorem51_aggregate_check(int n, const Rational& a, const std::vector<AggregateTerm>& terms,
                               int cap) {
    if (n > cap) {
        throw DimensionTooLargeError("aggregate check over " + std::to_string(n) +
                                     " variables exceeds the cap of " + std::to_string(cap));
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    std::vector<std::vector<std::pair<std::uint64_t, Rational>>> term_parities;
    term_parities.reserve(terms.size());
    for (const auto& term : terms) {
        SparsePoly p = embed_circuit(term.circuit, n);
        if (term.box) p = p * term.box->to_poly(n);
        term_parities.push_back(parity_terms_of(p));
    }

    // (i) vertex match against f_a and (iii) the aggregate total, together.
    Rational total(0);
    for (std::uint64_t vmask = 0; vmask <= full; ++vmask) {
        Rational sum(0);
        for (const auto& parity : term_parities) {
            sum += evaluate_pm1(parity, vmask, full);
        }
        const Rational fa_value = (vmask == full) ? a : Rational(1);
        if (sum != fa_value) return false;
        total += sum;
    }

    // (ii) each term attains its all-ones value on at least 2^(n-2) vertices.
    const Rational quarter = Rational(pow2(static_cast<unsigned long>(n))) / 4;
    for (const auto& parity : term_parities) {
        const Rational at_e = evaluate_pm1(parity, full, full);
        Integer count = 0;
        for (std::uint64_t vmask = 0; vmask <= full; ++vmask) {
            if (evaluate_pm1(parity, vmask, full) == at_e) ++count;
        }
        if (Rational(count) < quarter) return false;
    }

    // Necessary condition from the value-counting laws:
    // 2^(n-2) * a <= sum over vertices = 2^n - 1 + a.
    return quarter * a <= total;
}

// ---------------------------------------------------------------------------
// Seeded regression suite
// ---------------------------------------------------------------------------

namespace {

Rational random_positive_rational(std::mt19937_64& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

// Circuit with inner exponent beta (random parity pattern) flanked by the
// two even vertices beta +- the odd-coordinate split; lambda = (1/2, 1/2).
CircuitPoly random_bridge_circuit(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> entry(0, 3);
    ExponentVector beta(n, 0);
    bool any_odd = false;
    for (int j = 0; j < n; ++j) {
        beta[j] = entry(rng);
        any_odd = any_odd || beta[j] % 2 != 0;
    }
    if (!any_odd) beta[std::uniform_int_distribution<int>(0, n - 1)(rng)] += 1;

    ExponentVector alpha1 = beta;
    ExponentVector alpha2 = beta;
    bool first = true;
    for (int j = 0; j < n; ++j) {
        if (beta[j] % 2 == 0) continue;
        const bool up = first ? true : coin(rng) == 1;
        first = false;
        alpha1[j] += up ? 1 : -1;
        alpha2[j] += up ? -1 : 1;
    }

    const Rational t = random_positive_rational(rng, 9, 6);
    // |f_beta| <= min outer coefficient <= Theta keeps the circuit nonnegative.
    Rational inner = random_positive_rational(rng, 9, 6);
    if (inner > t) inner = t;
    if (coin(rng) == 1) inner = -inner;
    return CircuitPoly(n, {CircuitTerm{alpha1, t}, CircuitTerm{alpha2, t}},
                       CircuitTerm{beta, inner}, {Rational(1, 2), Rational(1, 2)});
}

CircuitPoly random_nonneg_circuit(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> kind(0, 2);
    switch (kind(rng)) {
        case 0: {
            // Monomial square.
            std::uniform_int_distribution<int> entry(0, 2);
            ExponentVector e(n, 0);
            for (int j = 0; j < n; ++j) e[j] = 2 * entry(rng);
            return CircuitPoly::monomial_square(n, e, random_positive_rational(rng, 9, 6));
        }
        case 1: {
            // Even inner exponent: 1 + x_i^(2w) with inner x_i^w scaled even.
            std::uniform_int_distribution<int> pick(0, n - 1);
            std::uniform_int_distribution<int> w_dist(1, 3);
            const int i = pick(rng);
            const int w = 2 * w_dist(rng);
            ExponentVector top(n, 0), mid(n, 0), zero(n, 0);
            top[i] = 2 * w;
            mid[i] = w;
            const Rational c0 = random_positive_rational(rng, 9, 6);
            const Rational c1 = random_positive_rational(rng, 9, 6);
            Rational inner = random_positive_rational(rng, 9, 6);
            if (inner > c0) inner = c0;
            if (inner > c1) inner = c1;
            if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) inner = -inner;
            return CircuitPoly(n, {CircuitTerm{zero, c0}, CircuitTerm{top, c1}},
                               CircuitTerm{mid, inner}, {Rational(1, 2), Rational(1, 2)});
        }
        default:
            return random_bridge_circuit(rng, n);
    }
}

std::vector<AggregateTerm> putinar_candidate(int n, const Rational& a) {
    // One bridge circuit per nonempty subset I realizes the character on I;
    // a final even-inner circuit absorbs the constant surplus. All terms obey
    // the per-term value-count laws, so the candidate matches f_a on every
    // vertex while the aggregate inequality alone decides its fate.
    std::vector<AggregateTerm> terms;
    const Rational character_coef = (a - 1) / Rational(pow2(static_cast<unsigned long>(n)));
    Rational constant_sum(0);
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
        const int k = std::popcount(subset);
        std::vector<CircuitTerm> outer;
        std::vector<Rational> lambdas;
        outer.push_back(CircuitTerm{ExponentVector(n, 0), Rational(1)});
        lambdas.push_back(Rational(1, 2));
        ExponentVector beta(n, 0);
        for (int j = 0; j < n; ++j) {
            if (subset & (std::uint64_t{1} << j)) {
                beta[j] = 1;
                ExponentVector axis(n, 0);
                axis[j] = 2 * k;
                outer.push_back(CircuitTerm{axis, Rational(1)});
                lambdas.push_back(make_rational(1, 2 * k));
            }
        }
        constant_sum += Rational(1 + k);
        terms.push_back(
            AggregateTerm{CircuitPoly(n, std::move(outer), CircuitTerm{beta, character_coef},
                                      std::move(lambdas)),
                          std::nullopt});
    }

    // Compensator value c0 + 1 + f_beta must equal 1 - constant_sum + character_coef.
    const Rational c0(1);
    const Rational f_beta = -constant_sum - c0 + character_coef;
    ExponentVector top(n, 0), mid(n, 0);
    top[0] = 4;
    mid[0] = 2;
    terms.push_back(AggregateTerm{
        CircuitPoly(n, {CircuitTerm{ExponentVector(n, 0), c0}, CircuitTerm{top, Rational(1)}},
                    CircuitTerm{mid, f_beta}, {Rational(1, 2), Rational(1, 2)}),
        std::nullopt});
    return terms;
}

}  // namespace

PaperCheckReport run_paperchecks(std::uint64_t seed) {
    PaperCheckReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);

    report.results.emplace_back("lemma31_product_nonclosure", lemma31_regression());
    report.results.emplace_back("corollary32_affine_nonclosure", corollary32_regression());

    report.results.emplace_back("putinar_bound_n3_equals_7", putinar_bound(3) == 7);
    report.results.emplace_back("putinar_bound_n4_equals_5", putinar_bound(4) == 5);
    {
        bool ok = true;
        Rational prev = putinar_bound(3);
        for (int n = 4; n <= 12; ++n) {
            const Rational cur = putinar_bound(n);
            ok = ok && cur < prev && cur > 4;
            prev = cur;
        }
        report.results.emplace_back("putinar_bound_decreasing_above_4", ok);
    }

    {
        bool ok = true;
        std::uniform_int_distribution<int> n_dist(1, 10);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const int n = n_dist(rng);
            ok = check_lemma52(random_nonneg_circuit(rng, n), n);
        }
        report.results.emplace_back("lemma52_two_value_law_random", ok);
    }
    {
        bool ok = true;
        std::uniform_int_distribution<int> n_dist(2, 10);
        std::uniform_int_distribution<int> coin(0, 1);
        std::uniform_int_distribution<int> c_num(0, 5);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const int n = n_dist(rng);
            const CircuitPoly circuit = random_nonneg_circuit(rng, n);
            const BoxAtom box{Rational(c_num(rng)), coin(rng) == 1,
                              std::uniform_int_distribution<int>(0, n - 1)(rng)};
            ok = check_lemma53(circuit, box, n);
        }
        report.results.emplace_back("lemma53_four_value_law_random", ok);
    }

    report.results.emplace_back(
        "theorem51_refutes_a6_candidate",
        !theorem51_aggregate_check(4, Rational(6), putinar_candidate(4, Rational(6))));
    report.results.emplace_back(
        "theorem51_no_refutation_a4_candidate",
        theorem51_aggregate_check(4, Rational(4), putinar_candidate(4, Rational(4))));

    {
        const SparsePoly f8 = build_fa(3, Rational(8));
        const std::vector<Rational> e{Rational(1), Rational(1), Rational(1)};
        const std::vector<Rational> other{Rational(-1), Rational(1), Rational(1)};
        report.results.emplace_back("fa_vertex_values",
                                    f8.evaluate(e) == 8 && f8.evaluate(other) == 1);
    }
    return report;
}

}  // namespace sonc
