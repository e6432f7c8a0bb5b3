#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "sonc/circuit.hpp"
#include "sonc/hypercube.hpp"
#include "sonc/poly.hpp"

namespace sonc {

// Constraint-product atoms. Indices are zero-based: G/NegG/BoxPlus/BoxMinus
// refer to coordinate j, P to the position of a constraint in the set.
// Semantics over a hypercube with roots (a_j, b_j):
//   One      -> 1
//   G        -> g_j = (x_j - a_j)(x_j - b_j)
//   NegG     -> -g_j
//   BoxPlus  -> x_j - a_j
//   BoxMinus -> b_j - x_j
//   P        -> p_i
enum class AtomKind { One, G, NegG, BoxPlus, BoxMinus, P };

struct Atom {
    AtomKind kind = AtomKind::One;
    int index = 0;

    auto operator<=>(const Atom&) const = default;
};

// Multiset of atoms kept in sorted order so equal multisets compare equal.
class ConstraintProduct {
public:
    ConstraintProduct() = default;

    void add(Atom atom);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    int degree(const ConstraintSet& constraints) const;

    auto operator<=>(const ConstraintProduct&) const = default;

private:
    std::vector<Atom> atoms_;
};

// One summand weight * scale * circuit * product of Eq-style certificates.
// weight carries the vertex coefficient c_v, scale the delta normalization
// prod_j 1/(b_j - a_j); both stay nonnegative.
struct CertTerm {
    Rational weight;
    Rational scale;
    CircuitPoly circuit;
    ConstraintProduct product;
};

struct Certificate {
    int declared_degree = 0;
    std::vector<CertTerm> terms;
};

int term_degree(const CertTerm& term, const ConstraintSet& constraints);

// Representation f = sum_t circuit_t * (sign_t * g_{j_t}) with every circuit
// nonnegative; sign is +1 or -1, j is a zero-based coordinate.
struct VanishingTerm {
    CircuitPoly circuit;
    int sign;
    int j;
};

struct VanishingDecomposition {
    std::vector<VanishingTerm> terms;
};

// Decomposes a polynomial vanishing on all vertices. Every emitted circuit
// has degree at most E - 2 where E is deg(f) rounded up to an even number
// (equal to deg(f) - 2 for even-degree input). Throws DoesNotVanishError when
// the normal-form remainder is nonzero.
VanishingDecomposition decompose_vanishing(const SparsePoly& f, const Hypercube& cube);

// Smallest index i with p_i(v) < 0; throws NoViolatedConstraintError.
int tie_break_pv(const std::vector<Rational>& vertex, const ConstraintSet& constraints);

// Builds the full certificate for f over the constrained hypercube:
// vertex terms c_v * delta_v (* p_v on infeasible vertices with f(v) < 0)
// plus the vanishing decomposition of the residual. Requires deg f <= n and
// f >= 0 on every feasible vertex.
Certificate certify_hypercube(const SparsePoly& f, const Hypercube& cube,
                              const ConstraintSet& constraints, int cap = kDefaultVertexCap);

}  // namespace sonc
