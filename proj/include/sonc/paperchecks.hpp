#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sonc/circuit.hpp"
#include "sonc/hypercube.hpp"
#include "sonc/poly.hpp"

namespace sonc {

// f_a(x) = (a - 1) prod_i (x_i + 1)/2 + 1: value a at the all-ones vertex of
// {-1,1}^n and 1 at every other vertex.
SparsePoly build_fa(int n, const Rational& a);

// (2^n - 1) / (2^(n-2) - 1); the threshold above which f_a admits no
// single-multiplier decomposition. Requires n >= 3.
Rational putinar_bound(int n);

// Exact histogram of a polynomial over the vertices of {-1,1}^n.
struct ValueProfile {
    std::map<Rational, std::uint64_t> histogram;
};

ValueProfile value_profile(const SparsePoly& s, int n, int cap = kDefaultVertexCap);

// Value-count law for a single circuit on {-1,1}^n: at most two values, and
// when there are two, each is attained on exactly half of the vertices.
bool check_lemma52(const CircuitPoly& circuit, int n);

// Box constraint 1 + c +- x_{var+1} with c >= 0.
struct BoxAtom {
    Rational c;
    bool plus = true;
    int var = 0;

    SparsePoly to_poly(int n) const;
};

// Value-count law for circuit * box on {-1,1}^n: at most four values, each
// attained on at least a quarter of the vertices.
bool check_lemma53(const CircuitPoly& circuit, const BoxAtom& box, int n);

// Full chain of the product non-closure argument: (1-x1)^2 and (1-x2)^2 are
// nonnegative circuits with boundary circuit number, their product r expands
// to the expected nine terms, and the coefficient-budget system
// {c1 >= 1, c2 >= 1, c1 + c2 <= 1} extracted from the inner terms of r is
// infeasible.
bool lemma31_regression();

// The affine substitution x_i -> 1 - x_i maps the monomial square x1^2 x2^2
// to the product polynomial of lemma31_regression.
bool corollary32_regression();

// A claimed single-multiplier decomposition term: circuit or circuit * box.
struct AggregateTerm {
    CircuitPoly circuit;
    std::optional<BoxAtom> box;
};

// Checks a candidate decomposition f_a = sum of terms on all vertices of
// {-1,1}^n: (i) vertex match, (ii) each term attains its value at the
// all-ones vertex on at least 2^(n-2) vertices, (iii) the aggregate
// inequality 2^(n-2) a <= 2^n - 1 + a. Returns false when any part fails;
// any vertex-matching candidate is refuted whenever a exceeds putinar_bound.
bool theorem51_aggregate_check(int n, const Rational& a, const std::vector<AggregateTerm>& terms,
                               int cap = kDefaultVertexCap);

// Named pass/fail results for the CLI regression table.
struct PaperCheckReport {
    std::vector<std::pair<std::string, bool>> results;
    std::uint64_t seed = 0;

    bool all_passed() const {
        for (const auto& [name, ok] : results) {
            if (!ok) return false;
        }
        return !results.empty();
    }
};

PaperCheckReport run_paperchecks(std::uint64_t seed);

}  // namespace sonc
