#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sonc/errors.hpp"
#include "sonc/poly.hpp"

namespace sonc {

inline constexpr int kDefaultVertexCap = 20;
inline constexpr int kMaxVertexCap = 24;

// The product domain prod_j {a_j, b_j} together with the vanishing quadratics
// g_j(x) = (x_j - a_j)(x_j - b_j).
class Hypercube {
public:
    explicit Hypercube(std::vector<std::pair<Rational, Rational>> roots);

    static Hypercube symmetric(int n);  // {-1, 1}^n
    static Hypercube unit(int n);       // {0, 1}^n

    int dimension() const { return static_cast<int>(roots_.size()); }
    const Rational& lower(int j) const { return roots_[j].first; }
    const Rational& upper(int j) const { return roots_[j].second; }
    const std::vector<std::pair<Rational, Rational>>& roots() const { return roots_; }

    SparsePoly g(int j) const;

    std::uint64_t vertex_count() const { return std::uint64_t{1} << dimension(); }

    // Bit j of mask selects b_j, a cleared bit selects a_j.
    std::vector<Rational> vertex_point(std::uint64_t mask) const;

    // Mask of the given point, or nullopt when it is not a vertex.
    std::optional<std::uint64_t> vertex_mask(const std::vector<Rational>& point) const;

private:
    std::vector<std::pair<Rational, Rational>> roots_;
};

void check_vertex_cap(const Hypercube& cube, int cap);

// Streams all 2^n vertices in mask order; f(mask, point). Memory stays at one
// point; coordinates are updated incrementally between masks.
template <typename F>
void for_each_vertex(const Hypercube& cube, F&& f, int cap = kDefaultVertexCap) {
    check_vertex_cap(cube, cap);
    const int n = cube.dimension();
    std::vector<Rational> point(n);
    for (int j = 0; j < n; ++j) point[j] = cube.lower(j);
    const std::uint64_t count = cube.vertex_count();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (mask != 0) {
            const std::uint64_t changed = mask ^ (mask - 1);
            for (int j = 0; j < n; ++j) {
                if (changed & (std::uint64_t{1} << j)) {
                    point[j] = (mask & (std::uint64_t{1} << j)) ? cube.upper(j) : cube.lower(j);
                }
            }
        }
        f(mask, point);
    }
}

// Kronecker delta of a vertex in product form: scale * prod_j factor_j with
// factor_j = (-x_j + b_j) or (x_j - a_j) and scale = prod_j 1/(b_j - a_j).
struct DeltaFactored {
    Rational scale;
    std::vector<SparsePoly> factors;

    SparsePoly expand() const;
    Rational evaluate(const std::vector<Rational>& point) const;
};

struct KroneckerDelta {
    DeltaFactored factored;
    SparsePoly expanded;
};

KroneckerDelta kronecker_delta(const Hypercube& cube, const std::vector<Rational>& vertex);
KroneckerDelta kronecker_delta(const Hypercube& cube, std::uint64_t mask);

// f = sum_j quotients[j] * g_j + remainder, with a multilinear remainder.
struct NormalFormResult {
    SparsePoly remainder;
    std::vector<SparsePoly> quotients;
};

// Division by the basis {g_1..g_n}: the glex-leading reducible term is
// rewritten via x_j^2 -> (a_j + b_j) x_j - a_j b_j until none remains,
// accumulating exact quotients. deg(quotients[j]) <= deg(f) - 2.
NormalFormResult normal_form(const SparsePoly& f, const Hypercube& cube);

struct SPolyCheckResult {
    bool ok = true;
    int i = -1;  // offending pair when !ok (zero-based, i > j)
    int j = -1;
};

// Buchberger criterion for {g_1..g_n}: every S-polynomial
// S(g_i,g_j) = (a_j+b_j) x_i^2 x_j - (a_i+b_i) x_i x_j^2 - a_j b_j x_i^2
//            + a_i b_i x_j^2 must divide to zero.
SPolyCheckResult s_polynomial_check(const Hypercube& cube);

// Inequality constraints p_i >= 0 plus the box constant N >= max_j max(|a_j|, |b_j|)
// behind the derived box constraints N +- x_j.
class ConstraintSet {
public:
    ConstraintSet() = default;
    explicit ConstraintSet(std::vector<SparsePoly> inequalities,
                           std::optional<Rational> box_constant = std::nullopt);

    const std::vector<SparsePoly>& inequalities() const { return inequalities_; }
    bool empty() const { return inequalities_.empty(); }
    std::size_t size() const { return inequalities_.size(); }

    // d = max_i deg(p_i); 0 when the set is empty or all constraints are constant.
    int max_degree() const;

    const std::optional<Rational>& box_constant() const { return box_constant_; }
    // Stored N (validated against the cube) or the default 1 + max |root|.
    Rational effective_box_constant(const Hypercube& cube) const;

private:
    std::vector<SparsePoly> inequalities_;
    std::optional<Rational> box_constant_;
};

// Vertex masks with p_i(v) >= 0 for every constraint.
std::vector<std::uint64_t> feasible_vertices(const Hypercube& cube, const ConstraintSet& constraints,
                                             int cap = kDefaultVertexCap);

}  // namespace sonc
