#pragma once

#include <vector>

#include "sonc/certify.hpp"

namespace sonc {

struct WeightedCircuit {
    Rational weight;
    CircuitPoly circuit;
};

// Conic Caratheodory reduction: returns a sublist (weights adjusted, circuits
// untouched) with the identical weighted polynomial sum and at most dim + 1
// entries, dim = C(n + degree_cap, degree_cap). Duplicate circuits merge
// first; afterwards, while the count exceeds dim + 1, an exact kernel vector
// of the affinely lifted coefficient matrix shifts the weights until one hits
// zero.
std::vector<WeightedCircuit> caratheodory_prune(std::vector<WeightedCircuit> terms,
                                                int dimension, int degree_cap);

// Prunes every constraint-product group of the certificate independently.
// The exact polynomial sum is preserved; per group at most
// C(n + degree_cap, degree_cap) + 1 terms survive. Scales are folded into
// weights, so output terms carry scale 1.
Certificate shorten_certificate(const Certificate& cert, int dimension, int degree_cap);

}  // namespace sonc
