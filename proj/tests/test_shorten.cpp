#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sonc/shorten.hpp"
#include "testutil.hpp"

using namespace sonc;

namespace {

SparsePoly weighted_sum(const std::vector<WeightedCircuit>& terms, int n) {
    SparsePoly sum = SparsePoly::zero(n);
    for (const auto& t : terms) sum = sum + t.weight * t.circuit.to_poly();
    return sum;
}

}  // namespace

TEST_CASE("duplicate circuits merge") {
    const CircuitPoly q = validate_circuit(parse_poly("1 + x1^2 - 2*x1", 1));
    const auto pruned = caratheodory_prune({{Rational(1), q}, {Rational(2), q}}, 1, 2);
    REQUIRE(pruned.size() == 1);
    CHECK(pruned[0].weight == 3);
    CHECK(compare(pruned[0].circuit, q) == 0);
}

TEST_CASE("a span-dimension-2 triple stays within the affine bound") {
    // 1, x1^2, and 5*1 span two monomials; the affine bound C(3,2)+1 = 4
    // leaves the triple untouched with its sum intact.
    const CircuitPoly one = CircuitPoly::monomial_square(1, {0}, Rational(1));
    const CircuitPoly sq = CircuitPoly::monomial_square(1, {2}, Rational(1));
    const CircuitPoly five = CircuitPoly::monomial_square(1, {0}, Rational(5));
    std::vector<WeightedCircuit> terms = {
        {Rational(1), one}, {Rational(1), sq}, {Rational(2), five}};
    const SparsePoly before = weighted_sum(terms, 1);
    const auto pruned = caratheodory_prune(terms, 1, 2);
    CHECK(pruned.size() <= 3);
    CHECK(weighted_sum(pruned, 1) == before);
}

TEST_CASE("constant families collapse to two generators") {
    testutil::Rng rng(97);
    std::vector<WeightedCircuit> terms;
    for (int i = 1; i <= 5; ++i) {
        terms.push_back(WeightedCircuit{rng.positive_rational(5, 3),
                                        CircuitPoly::monomial_square(1, {0}, Rational(i))});
    }
    const SparsePoly before = weighted_sum(terms, 1);
    const auto pruned = caratheodory_prune(terms, 1, 0);
    CHECK(pruned.size() <= 2);  // C(1+0,0) + 1
    CHECK(weighted_sum(pruned, 1) == before);
    for (const auto& t : pruned) CHECK(t.weight > 0);
}

TEST_CASE("short lists pass through unchanged") {
    const CircuitPoly one = CircuitPoly::monomial_square(2, {0, 0}, Rational(1));
    const CircuitPoly sq = CircuitPoly::monomial_square(2, {2, 0}, Rational(3));
    std::vector<WeightedCircuit> terms = {{Rational(1), one}, {Rational(5, 2), sq}};
    const auto pruned = caratheodory_prune(terms, 2, 2);
    REQUIRE(pruned.size() == 2);
    CHECK(pruned[0].weight + pruned[1].weight == Rational(7, 2));
}

TEST_CASE("oversized dependent families prune to the dimension bound") {
    // Univariate circuits c0 + c2 x^2 + c1 x live in the 3-dimensional space
    // spanned by {1, x, x^2}; the affine lift allows C(1+2,2) + 1 = 4
    // survivors.
    testutil::Rng rng(83);
    std::vector<WeightedCircuit> terms;
    for (int i = 0; i < 12; ++i) {
        SparsePoly p(1);
        const Rational c0 = rng.positive_rational(9, 4);
        const Rational c2 = rng.positive_rational(9, 4);
        p.add_term({0}, c0);
        p.add_term({2}, c2);
        p.add_term({1}, std::min(c0, c2) * Rational(rng.coin() ? 1 : -1));
        terms.push_back(WeightedCircuit{rng.positive_rational(5, 3), validate_circuit(p)});
    }
    const SparsePoly before = weighted_sum(terms, 1);
    const auto pruned = caratheodory_prune(terms, 1, 2);
    CHECK(pruned.size() <= 4);
    CHECK(weighted_sum(pruned, 1) == before);
    for (const auto& t : pruned) {
        CHECK(t.weight > 0);
        CHECK(is_nonnegative(t.circuit));
    }
}

TEST_CASE("pruning is idempotent in count") {
    testutil::Rng rng(89);
    std::vector<WeightedCircuit> terms;
    for (int i = 0; i < 9; ++i) {
        SparsePoly p(1);
        p.add_term({0}, rng.positive_rational(9, 4));
        p.add_term({2}, rng.positive_rational(9, 4));
        p.add_term({4}, rng.positive_rational(9, 4));
        terms.push_back(WeightedCircuit{rng.positive_rational(5, 3), validate_circuit(p)});
    }
    const auto once = caratheodory_prune(terms, 1, 4);
    const auto twice = caratheodory_prune(once, 1, 4);
    CHECK(twice.size() == once.size());
    CHECK(weighted_sum(once, 1) == weighted_sum(twice, 1));
}

TEST_CASE("certificate shortening preserves the expanded sum groupwise") {
    // Build a certificate by hand with one redundant group.
    const int n = 2;
    Certificate cert;
    cert.declared_degree = 4;
    ConstraintProduct g1;
    g1.add(Atom{AtomKind::G, 0});
    for (int i = 0; i < 8; ++i) {
        SparsePoly p(n);
        p.add_term({0, 0}, Rational(i + 1));
        p.add_term({2, 0}, Rational(9 - i));
        p.add_term({1, 0}, Rational(1));
        cert.terms.push_back(CertTerm{Rational(1), Rational(1), validate_circuit(p), g1});
    }
    ConstraintProduct delta;
    delta.add(Atom{AtomKind::BoxPlus, 0});
    delta.add(Atom{AtomKind::BoxPlus, 1});
    cert.terms.push_back(CertTerm{Rational(3), Rational(1, 4),
                                  CircuitPoly::monomial_square(n, {0, 0}, Rational(1)), delta});

    const Certificate shortened = shorten_certificate(cert, n, 2);

    // Grouped sums are identical before and after.
    auto group_sums = [&](const Certificate& c) {
        std::map<ConstraintProduct, SparsePoly> sums;
        for (const auto& term : c.terms) {
            auto [it, inserted] = sums.emplace(term.product, SparsePoly::zero(n));
            it->second = it->second + (term.weight * term.scale) * term.circuit.to_poly();
        }
        return sums;
    };
    const auto before = group_sums(cert);
    const auto after = group_sums(shortened);
    REQUIRE(before.size() == after.size());
    for (const auto& [product, sum] : before) {
        CHECK(after.at(product) == sum);
    }

    // Pruning runs until the group fits the bound C(2+2,2)+1 = 7.
    std::size_t g1_count = 0;
    for (const auto& term : shortened.terms) {
        if (term.product == g1) ++g1_count;
    }
    CHECK(g1_count <= 7);
    CHECK(shortened.terms.size() < cert.terms.size());

    // Surviving circuits are untouched objects, still nonnegative.
    for (const auto& term : shortened.terms) {
        CHECK(is_nonnegative(term.circuit));
    }

    // Shortening again changes nothing.
    const Certificate again = shorten_certificate(shortened, n, 2);
    CHECK(again.terms.size() == shortened.terms.size());
}

TEST_CASE("empty and single-term certificates") {
    Certificate empty;
    empty.declared_degree = 0;
    CHECK(shorten_certificate(empty, 1, 0).terms.empty());

    Certificate single;
    single.declared_degree = 2;
    ConstraintProduct product;
    product.add(Atom{AtomKind::NegG, 0});
    single.terms.push_back(CertTerm{Rational(2), Rational(1),
                                    CircuitPoly::monomial_square(1, {0}, Rational(1)), product});
    const auto out = shorten_certificate(single, 1, 0);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms[0].weight == 2);
}
