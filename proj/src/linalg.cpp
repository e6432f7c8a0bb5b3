#include "sonc/linalg.hpp"

#include <cstddef>

namespace sonc {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> echelon(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m) {
    return static_cast<int>(echelon(m).size());
}

SolveResult solve_linear(Matrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
    Matrix aug = std::move(a);
    const auto pivots = echelon(aug);

    // A pivot in the augmented column means the system is inconsistent.
    for (std::size_t p : pivots) {
        if (p == cols) return {SolveStatus::Inconsistent, {}};
    }
    if (pivots.size() < cols) return {SolveStatus::Underdetermined, {}};

    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = aug[r][cols];
    }
    return {SolveStatus::Unique, std::move(x)};
}

std::optional<std::vector<Rational>> kernel_vector(Matrix a) {
    if (a.empty()) return std::nullopt;
    const std::size_t cols = a.front().size();
    const auto pivots = echelon(a);
    if (pivots.size() >= cols) return std::nullopt;

    // Smallest non-pivot column becomes the free variable.
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    std::vector<Rational> gamma(cols, Rational(0));
    gamma[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        gamma[pivots[r]] = -a[r][free_col];
    }
    return gamma;
}

}  // namespace sonc
