#pragma once

#include <optional>
#include <vector>

#include "sonc/poly.hpp"

namespace sonc {

struct CircuitTerm {
    ExponentVector exponent;
    Rational coefficient;

    bool operator==(const CircuitTerm& other) const = default;
};

// A validated circuit polynomial: outer terms sit on the even vertices of a
// simplex Newton polytope, the optional inner term sits strictly inside it.
// A monomial square (single even term, positive coefficient) is the
// degenerate no-inner case.
class CircuitPoly {
public:
    CircuitPoly(int dimension, std::vector<CircuitTerm> outer, std::optional<CircuitTerm> inner,
                std::vector<Rational> lambdas);

    static CircuitPoly monomial_square(int dimension, ExponentVector exponent,
                                       const Rational& coefficient);

    int dimension() const { return dimension_; }
    const std::vector<CircuitTerm>& outer() const { return outer_; }
    const std::optional<CircuitTerm>& inner() const { return inner_; }
    // Barycentric coordinates of the inner exponent, aligned with outer().
    const std::vector<Rational>& lambdas() const { return lambdas_; }
    bool has_inner() const { return inner_.has_value(); }

    SparsePoly to_poly() const;
    Rational evaluate(const std::vector<Rational>& point) const;
    int degree() const;

    bool operator==(const CircuitPoly& other) const;

private:
    int dimension_;
    std::vector<CircuitTerm> outer_;      // sorted by glex on exponents
    std::optional<CircuitTerm> inner_;
    std::vector<Rational> lambdas_;
};

// Total order used for deterministic certificate output.
int compare(const CircuitPoly& a, const CircuitPoly& b);

// Checks conditions (C1) and (C2) and computes the barycentric coordinates
// exactly. Throws CircuitError on any defect.
CircuitPoly validate_circuit(const SparsePoly& candidate);

enum class CircuitCmp { Less, Equal, Greater };

// Exact comparison of |f_beta| against the circuit number
// Theta = prod_j (f_alpha(j) / lambda_j)^lambda_j, via the common-denominator
// power trick: with D = lcm of the lambda denominators, both |f_beta|^D and
// Theta^D are rationals and compare exactly.
CircuitCmp circuit_number_compare(const CircuitPoly& c);

// Decides nonnegativity exactly: true iff there is no inner term, or the
// inner exponent has an odd entry and |f_beta| <= Theta, or the inner
// exponent is even and f_beta >= -Theta.
bool is_nonnegative(const CircuitPoly& c);

}  // namespace sonc
