#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sonc/certify.hpp"
#include "sonc/errors.hpp"
#include "sonc/verify.hpp"
#include "testutil.hpp"

using namespace sonc;

namespace {

SparsePoly atom_poly_oracle(const Atom& atom, const Hypercube& cube, const ConstraintSet& cs) {
    const int n = cube.dimension();
    switch (atom.kind) {
        case AtomKind::One: return SparsePoly::constant(n, Rational(1));
        case AtomKind::G: return cube.g(atom.index);
        case AtomKind::NegG: return -cube.g(atom.index);
        case AtomKind::BoxPlus:
            return SparsePoly::variable(n, atom.index) -
                   SparsePoly::constant(n, cube.lower(atom.index));
        case AtomKind::BoxMinus:
            return SparsePoly::constant(n, cube.upper(atom.index)) -
                   SparsePoly::variable(n, atom.index);
        case AtomKind::P: return cs.inequalities().at(atom.index);
    }
    throw SoncError("unreachable");
}

SparsePoly expand_certificate(const Certificate& cert, const Hypercube& cube,
                              const ConstraintSet& cs) {
    SparsePoly sum = SparsePoly::zero(cube.dimension());
    for (const auto& term : cert.terms) {
        SparsePoly t = term.circuit.to_poly() * (term.weight * term.scale);
        for (const auto& atom : term.product.atoms()) {
            t = t * atom_poly_oracle(atom, cube, cs);
        }
        sum = sum + t;
    }
    return sum;
}

SparsePoly expand_decomposition(const VanishingDecomposition& dec, const Hypercube& cube) {
    SparsePoly sum = SparsePoly::zero(cube.dimension());
    for (const auto& term : dec.terms) {
        sum = sum + term.circuit.to_poly() * (Rational(term.sign) * cube.g(term.j));
    }
    return sum;
}

}  // namespace

TEST_CASE("decompose x1^2 - 1 over the symmetric cube") {
    const Hypercube h = Hypercube::symmetric(1);
    const auto dec = decompose_vanishing(parse_poly("x1^2 - 1", 1), h);
    REQUIRE(dec.terms.size() == 1);
    CHECK(dec.terms[0].sign == 1);
    CHECK(dec.terms[0].j == 0);
    CHECK(dec.terms[0].circuit.to_poly() == SparsePoly::constant(1, Rational(1)));
    CHECK(expand_decomposition(dec, h) == parse_poly("x1^2 - 1", 1));
}

TEST_CASE("decompose x1 x2 (x1^2 - 1): odd pair splits into a bridge circuit") {
    const Hypercube h = Hypercube::symmetric(2);
    const SparsePoly f = parse_poly("x1^3*x2 - x1*x2", 2);
    const auto dec = decompose_vanishing(f, h);
    REQUIRE(dec.terms.size() == 3);

    // Bridge circuit x1^2 + x2^2 + x1 x2 attached to +g_1.
    const auto& bridge = dec.terms[0];
    CHECK(bridge.sign == 1);
    CHECK(bridge.j == 0);
    CHECK(bridge.circuit.to_poly() == parse_poly("x1^2 + x2^2 + x1*x2", 2));
    CHECK(is_nonnegative(bridge.circuit));
    CHECK(circuit_number_compare(bridge.circuit) == CircuitCmp::Less);

    // Flanking squares x1^2, x2^2 attached to -g_1.
    for (int i : {1, 2}) {
        CHECK(dec.terms[i].sign == -1);
        CHECK(dec.terms[i].j == 0);
        CHECK_FALSE(dec.terms[i].circuit.has_inner());
    }
    CHECK(expand_decomposition(dec, h) == f);
}

TEST_CASE("decompose x1^3 - x1: odd singleton bumps one degree") {
    const Hypercube h = Hypercube::symmetric(1);
    const SparsePoly f = parse_poly("x1^3 - x1", 1);
    const auto dec = decompose_vanishing(f, h);
    CHECK(expand_decomposition(dec, h) == f);
    int max_degree = 0;
    for (const auto& term : dec.terms) {
        CHECK(is_nonnegative(term.circuit));
        max_degree = std::max(max_degree, term.circuit.degree());
    }
    // deg f = 3 is odd: the flanking vertices reach deg(beta) + 1 = 2.
    CHECK(max_degree == 2);
}

TEST_CASE("decomposition errors") {
    const Hypercube h = Hypercube::symmetric(1);
    CHECK_THROWS_AS(decompose_vanishing(parse_poly("x1^2", 1), h), DoesNotVanishError);
    CHECK(decompose_vanishing(SparsePoly::zero(1), h).terms.empty());
}

TEST_CASE("decomposition identity and degree budget on random ideal members") {
    testutil::Rng rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform(1, 5);
        const Hypercube h = testutil::random_cube(rng, n);
        SparsePoly f = SparsePoly::zero(n);
        for (int j = 0; j < n; ++j) {
            f = f + testutil::random_poly(rng, n, 3, 4) * h.g(j);
        }
        if (f.is_zero()) continue;
        const auto dec = decompose_vanishing(f, h);
        CHECK(expand_decomposition(dec, h) == f);
        const int budget = (*f.degree() % 2 == 0 ? *f.degree() : *f.degree() + 1) - 2;
        for (const auto& term : dec.terms) {
            CHECK(is_nonnegative(term.circuit));
            CHECK(term.circuit.degree() <= budget);
        }
    }
}

TEST_CASE("tie break picks the smallest violated constraint") {
    const ConstraintSet cs({parse_poly("0 - x1", 1), parse_poly("0 - 2*x1", 1)});
    CHECK(tie_break_pv({Rational(1)}, cs) == 0);

    const ConstraintSet cs2({parse_poly("0*x1", 1), parse_poly("0 - x1", 1)});
    CHECK(tie_break_pv({Rational(1)}, cs2) == 1);

    const ConstraintSet cs3({parse_poly("1 + 0*x1", 1)});
    CHECK_THROWS_AS(tie_break_pv({Rational(1)}, cs3), NoViolatedConstraintError);
}

TEST_CASE("certify a constant via the partition of unity") {
    const Hypercube h = Hypercube::symmetric(3);
    const SparsePoly one = SparsePoly::constant(3, Rational(1));
    const Certificate cert = certify_hypercube(one, h, ConstraintSet{});
    CHECK(cert.terms.size() == 8);  // one delta per vertex, no residual
    for (const auto& term : cert.terms) {
        CHECK(term.weight == 1);
        CHECK(term.product.atoms().size() == 3);
    }
    CHECK(expand_certificate(cert, h, ConstraintSet{}) == one);
}

TEST_CASE("certify x1 + 1 over the line") {
    const Hypercube h = Hypercube::symmetric(1);
    const SparsePoly f = parse_poly("x1 + 1", 1);
    const Certificate cert = certify_hypercube(f, h, ConstraintSet{});
    REQUIRE(cert.terms.size() == 1);  // c_{-1} = 0 is dropped
    CHECK(cert.terms[0].weight == 2);
    CHECK(cert.terms[0].scale == Rational(1, 2));
    CHECK(expand_certificate(cert, h, ConstraintSet{}) == f);
}

TEST_CASE("certify x1 with the constraint x1 >= 0") {
    const Hypercube h = Hypercube::symmetric(2);
    const ConstraintSet cs({parse_poly("x1", 2)});
    const SparsePoly f = parse_poly("x1", 2);
    const Certificate cert = certify_hypercube(f, h, cs);
    CHECK(expand_certificate(cert, h, cs) == f);

    int with_constraint = 0;
    for (const auto& term : cert.terms) {
        for (const auto& atom : term.product.atoms()) {
            if (atom.kind == AtomKind::P) {
                ++with_constraint;
                CHECK(term.weight == 1);  // c_v = (-1)/(-1)
            }
        }
    }
    CHECK(with_constraint == 2);  // both x1 = -1 vertices
    CHECK(cert.declared_degree <= 3);
}

TEST_CASE("certify rejects a negative feasible vertex with a witness") {
    const Hypercube h = Hypercube::symmetric(2);
    try {
        certify_hypercube(parse_poly("x1", 2), h, ConstraintSet{});
        FAIL("expected NegativeOnFeasibleVertexError");
    } catch (const NegativeOnFeasibleVertexError& e) {
        const auto point = h.vertex_point(e.vertex_mask());
        CHECK(parse_poly("x1", 2).evaluate(point) < 0);
    }
}

TEST_CASE("certify requires reduced input") {
    const Hypercube h = Hypercube::symmetric(1);
    CHECK_THROWS_AS(certify_hypercube(parse_poly("x1^2", 1), h, ConstraintSet{}), SoncError);
}

TEST_CASE("random end-to-end certificates are exact, nonnegative, and degree bounded") {
    testutil::Rng rng(61);
    int built = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const int n = rng.uniform(1, 5);
        const Hypercube h = testutil::random_cube(rng, n);

        std::vector<SparsePoly> ineqs;
        const int m = rng.uniform(0, 2);
        for (int i = 0; i < m; ++i) {
            // Degree parity matched to n so n + d stays even (see verify).
            ineqs.push_back(n % 2 == 0 ? testutil::random_poly(rng, n, 2, 4)
                                       : testutil::random_multilinear_poly(rng, n, 3));
        }
        const ConstraintSet cs(std::move(ineqs));

        SparsePoly f = testutil::random_multilinear_poly(rng, n, 6);
        const auto feasible = feasible_vertices(h, cs);
        Rational min_value(0);
        bool first = true;
        for (std::uint64_t mask : feasible) {
            const Rational v = f.evaluate(h.vertex_point(mask));
            if (first || v < min_value) min_value = v;
            first = false;
        }
        if (!first && min_value < 0) {
            f = f - SparsePoly::constant(n, min_value);
        }

        const Certificate cert = certify_hypercube(f, h, cs);
        ++built;
        CHECK(expand_certificate(cert, h, cs) == f);
        const int d = cs.max_degree();
        const int bound = n + d;
        CHECK(cert.declared_degree <= bound + (bound % 2 == 0 ? 0 : 1));
        for (const auto& term : cert.terms) {
            CHECK(term.weight > 0);
            CHECK(is_nonnegative(term.circuit));
            CHECK(term_degree(term, cs) <= cert.declared_degree);
        }

        // Soundness on feasible vertices, term by term.
        for (std::uint64_t mask : feasible) {
            const auto point = h.vertex_point(mask);
            for (const auto& term : cert.terms) {
                Rational v = term.weight * term.scale * term.circuit.evaluate(point);
                for (const auto& atom : term.product.atoms()) {
                    v *= atom_poly_oracle(atom, h, cs).evaluate(point);
                }
                CHECK(v >= 0);
            }
        }
    }
    CHECK(built == 80);
}

TEST_CASE("odd n + d instances may exceed the bound by exactly one") {
    // f = x1 + x2 over {-1,1}^2 with the single constraint x1 + x2 >= 0:
    // the residual has degree 3 and its quotients carry odd top monomials,
    // so the flanking construction emits degree-2 circuits against g_j and
    // the certificate tops out at n + d + 1 = 4. It still verifies.
    const Hypercube h = Hypercube::symmetric(2);
    const SparsePoly f = parse_poly("x1 + x2", 2);
    const ConstraintSet cs({parse_poly("x1 + x2", 2)});
    const Certificate cert = certify_hypercube(f, h, cs);
    CHECK(expand_certificate(cert, h, cs) == f);
    CHECK(cert.declared_degree == 4);

    int max_term_degree = 0;
    for (const auto& term : cert.terms) {
        max_term_degree = std::max(max_term_degree, term_degree(term, cs));
        CHECK(is_nonnegative(term.circuit));
    }
    CHECK(max_term_degree == 4);

    const VerifyReport report = verify_certificate(f, cert, h, cs);
    CHECK(report.degree_ok);
    CHECK(report.overall);
}

TEST_CASE("vertex soundness holds exhaustively at n = 10") {
    const int n = 10;
    const Hypercube h = Hypercube::symmetric(n);
    SparsePoly f = SparsePoly::constant(n, Rational(2));
    f.add_term(ExponentVector(n, 1), Rational(1));  // 2 + x1*...*x10
    const Certificate cert = certify_hypercube(f, h, ConstraintSet{});
    CHECK(cert.terms.size() == h.vertex_count());
    CHECK(cert.declared_degree == n);

    // The verifier's spot check walks every term on every vertex.
    const VerifyReport report = verify_certificate(f, cert, h, ConstraintSet{});
    CHECK(report.vertex_spotcheck_ok);
    CHECK(report.overall);
}

TEST_CASE("certificates are deterministic") {
    testutil::Rng rng(71);
    const Hypercube h = testutil::random_cube(rng, 3);
    const ConstraintSet cs({testutil::random_multilinear_poly(rng, 3, 3)});
    SparsePoly f = testutil::random_multilinear_poly(rng, 3, 5);
    Rational min_value(0);
    for (std::uint64_t mask : feasible_vertices(h, cs)) {
        const Rational v = f.evaluate(h.vertex_point(mask));
        if (v < min_value) min_value = v;
    }
    f = f - SparsePoly::constant(3, min_value);

    const Certificate c1 = certify_hypercube(f, h, cs);
    const Certificate c2 = certify_hypercube(f, h, cs);
    REQUIRE(c1.terms.size() == c2.terms.size());
    CHECK(c1.declared_degree == c2.declared_degree);
    for (std::size_t i = 0; i < c1.terms.size(); ++i) {
        CHECK(c1.terms[i].weight == c2.terms[i].weight);
        CHECK(c1.terms[i].scale == c2.terms[i].scale);
        CHECK(compare(c1.terms[i].circuit, c2.terms[i].circuit) == 0);
        CHECK(c1.terms[i].product == c2.terms[i].product);
    }
}
