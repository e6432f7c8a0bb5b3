#pragma once

#include <optional>
#include <vector>

#include "sonc/rational.hpp"

namespace sonc {

// Dense matrix of exact rationals, row major.
using Matrix = std::vector<std::vector<Rational>>;

int rank(Matrix m);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution;  // valid only when status == Unique
};

// Solves A x = b by exact Gaussian elimination. A may have more rows than
// columns; consistency of the extra rows is checked.
SolveResult solve_linear(Matrix a, std::vector<Rational> b);

// Returns a deterministic nonzero kernel vector of A (columns = unknowns),
// or nullopt when the kernel is trivial. The free variable with the smallest
// column index is set to 1.
std::optional<std::vector<Rational>> kernel_vector(Matrix a);

}  // namespace sonc
