#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sonc/errors.hpp"
#include "sonc/hypercube.hpp"
#include "testutil.hpp"

using namespace sonc;

TEST_CASE("vertex enumeration") {
    const Hypercube h1 = Hypercube::symmetric(1);
    std::vector<std::vector<Rational>> points;
    for_each_vertex(h1, [&](std::uint64_t, const std::vector<Rational>& p) {
        points.push_back(p);
    });
    CHECK(points == std::vector<std::vector<Rational>>{{Rational(-1)}, {Rational(1)}});

    const Hypercube h2 = Hypercube::unit(2);
    CHECK(h2.vertex_count() == 4);

    const Hypercube h3 = Hypercube::symmetric(3);
    int count = 0;
    for_each_vertex(h3, [&](std::uint64_t, const std::vector<Rational>& p) {
        ++count;
        for (int j = 0; j < 3; ++j) {
            CHECK(h3.g(j).evaluate(p) == 0);
        }
    });
    CHECK(count == 8);

    CHECK_THROWS_AS(check_vertex_cap(Hypercube::symmetric(21), kDefaultVertexCap),
                    DimensionTooLargeError);
    CHECK_THROWS_AS(Hypercube({{Rational(1), Rational(1)}}), SoncError);
}

TEST_CASE("kronecker delta forms agree and obey the delta law") {
    const Hypercube h = Hypercube::symmetric(2);
    const auto delta = kronecker_delta(h, std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(delta.factored.scale == Rational(1, 4));
    CHECK(delta.expanded ==
          Rational(1, 4) * (parse_poly("x1 + 1", 2) * parse_poly("x2 + 1", 2)));
    CHECK(delta.expanded.evaluate({Rational(1), Rational(1)}) == 1);
    CHECK(delta.expanded.evaluate({Rational(-1), Rational(1)}) == 0);

    const Hypercube u = Hypercube::unit(1);
    const auto delta0 = kronecker_delta(u, std::vector<Rational>{Rational(0)});
    CHECK(delta0.expanded == parse_poly("1 - x1", 1));
    CHECK(delta0.expanded.evaluate({Rational(0)}) == 1);
    CHECK(delta0.expanded.evaluate({Rational(1)}) == 0);

    CHECK_THROWS_AS(kronecker_delta(h, std::vector<Rational>{Rational(0), Rational(1)}),
                    NotAVertexError);
}

TEST_CASE("deltas form a partition of unity") {
    testutil::Rng rng(7);
    for (int n = 1; n <= 6; ++n) {
        const Hypercube h = testutil::random_cube(rng, n);
        SparsePoly sum = SparsePoly::zero(n);
        for (std::uint64_t mask = 0; mask < h.vertex_count(); ++mask) {
            sum = sum + kronecker_delta(h, mask).expanded;
        }
        CHECK(sum == SparsePoly::constant(n, Rational(1)));
    }
}

TEST_CASE("delta law holds exhaustively on random cubes") {
    testutil::Rng rng(19);
    for (int n = 1; n <= 6; ++n) {
        const Hypercube h = testutil::random_cube(rng, n);
        for (std::uint64_t vmask = 0; vmask < h.vertex_count(); ++vmask) {
            const auto delta = kronecker_delta(h, vmask);
            for_each_vertex(h, [&](std::uint64_t wmask, const std::vector<Rational>& w) {
                const Rational expected(vmask == wmask ? 1 : 0);
                CHECK(delta.factored.evaluate(w) == expected);
            });
        }
    }
}

TEST_CASE("normal form on fixed small cases") {
    {
        const Hypercube h = Hypercube::symmetric(1);
        const auto nf = normal_form(parse_poly("x1^2", 1), h);
        CHECK(nf.remainder == SparsePoly::constant(1, Rational(1)));
        CHECK(nf.quotients[0] == SparsePoly::constant(1, Rational(1)));
    }
    {
        const Hypercube h = Hypercube::unit(1);
        const auto nf = normal_form(parse_poly("x1^2", 1), h);
        CHECK(nf.remainder == parse_poly("x1", 1));
        CHECK(nf.quotients[0] == SparsePoly::constant(1, Rational(1)));
    }
    {
        const Hypercube h = Hypercube::symmetric(2);
        const SparsePoly r =
            parse_poly("1 - 2*x1 + x1^2", 2) * parse_poly("1 - 2*x2 + x2^2", 2);
        const auto nf = normal_form(r, h);
        CHECK(nf.remainder.degree().value_or(0) <= 2);
        for_each_vertex(h, [&](std::uint64_t, const std::vector<Rational>& v) {
            CHECK(nf.remainder.evaluate(v) == r.evaluate(v));
        });
    }
}

TEST_CASE("normal form identity, multilinearity, idempotence") {
    testutil::Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform(1, 5);
        const Hypercube h = testutil::random_cube(rng, n);
        const SparsePoly f = testutil::random_poly(rng, n, 6, 10);
        const auto nf = normal_form(f, h);

        // Exactness: f - sum q_j g_j - remainder is the empty term map.
        SparsePoly reconstructed = nf.remainder;
        for (int j = 0; j < n; ++j) {
            reconstructed = reconstructed + nf.quotients[j] * h.g(j);
        }
        CHECK(reconstructed == f);

        for (const auto& [exp, coef] : nf.remainder.terms()) {
            for (int e : exp) CHECK(e <= 1);
        }
        if (!f.is_zero()) {
            for (int j = 0; j < n; ++j) {
                CHECK(nf.quotients[j].degree().value_or(-1000) <= *f.degree() - 2);
            }
        }

        const auto again = normal_form(nf.remainder, h);
        CHECK(again.remainder == nf.remainder);
        for (int j = 0; j < n; ++j) CHECK(again.quotients[j].is_zero());

        // Remainder interpolates f on every vertex.
        for_each_vertex(h, [&](std::uint64_t, const std::vector<Rational>& v) {
            CHECK(nf.remainder.evaluate(v) == f.evaluate(v));
        });
    }
}

TEST_CASE("vanishing on all vertices iff zero remainder") {
    testutil::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform(1, 8);
        const Hypercube h = testutil::random_cube(rng, n);

        // Ideal members vanish and reduce to zero.
        SparsePoly ideal = SparsePoly::zero(n);
        for (int j = 0; j < n; ++j) {
            ideal = ideal + testutil::random_poly(rng, n, 2, 3) * h.g(j);
        }
        CHECK(normal_form(ideal, h).remainder.is_zero());
        for_each_vertex(h, [&](std::uint64_t, const std::vector<Rational>& v) {
            CHECK(ideal.evaluate(v) == 0);
        });

        // A nonzero remainder leaves some vertex where f does not vanish.
        const SparsePoly f = testutil::random_poly(rng, n, 4, 6);
        const auto nf = normal_form(f, h);
        if (!nf.remainder.is_zero()) {
            bool nonzero_somewhere = false;
            for_each_vertex(h, [&](std::uint64_t, const std::vector<Rational>& v) {
                if (f.evaluate(v) != 0) nonzero_somewhere = true;
            });
            CHECK(nonzero_somewhere);
        }
    }
}

TEST_CASE("S-polynomials reduce to zero") {
    CHECK(s_polynomial_check(Hypercube::symmetric(2)).ok);
    CHECK(s_polynomial_check(Hypercube::unit(3)).ok);

    const Hypercube mixed({{Rational(0), Rational(2)}, {Rational(-1), Rational(3)}});
    CHECK(s_polynomial_check(mixed).ok);

    testutil::Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform(2, 6);
        CHECK(s_polynomial_check(testutil::random_cube(rng, n)).ok);
    }
}

TEST_CASE("feasible vertices") {
    const Hypercube h2 = Hypercube::symmetric(2);
    CHECK(feasible_vertices(h2, ConstraintSet{}).size() == 4);

    const ConstraintSet only_x1({parse_poly("x1", 2)});
    const auto masks = feasible_vertices(h2, only_x1);
    CHECK(masks.size() == 2);
    for (std::uint64_t mask : masks) {
        CHECK(h2.vertex_point(mask)[0] == 1);
    }

    const Hypercube h3 = Hypercube::symmetric(3);
    const ConstraintSet sum({parse_poly("x1 + x2 + x3", 3)});
    CHECK(feasible_vertices(h3, sum).size() == 4);
}

TEST_CASE("box constant validation") {
    const Hypercube h = Hypercube::symmetric(2);
    const ConstraintSet defaulted({parse_poly("x1", 2)});
    CHECK(defaulted.effective_box_constant(h) == 2);

    const ConstraintSet given({parse_poly("x1", 2)}, Rational(5));
    CHECK(given.effective_box_constant(h) == 5);

    const ConstraintSet too_small({parse_poly("x1", 2)}, Rational(1, 2));
    CHECK_THROWS_AS(too_small.effective_box_constant(h), SoncError);
}
