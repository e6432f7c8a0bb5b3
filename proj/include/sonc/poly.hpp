#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sonc/rational.hpp"

namespace sonc {

// Exponent vector alpha of a monomial x^alpha; entries are nonnegative.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& alpha);

// A lattice point is even iff every entry is even.
bool is_even_point(const ExponentVector& alpha);

// Graded lexicographic order: total degree first, then lexicographic.
struct GlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Sparse multivariate polynomial over exact rationals. Term maps never hold
// zero coefficients and every exponent vector has length dimension().
class SparsePoly {
public:
    using TermMap = std::map<ExponentVector, Rational, GlexLess>;

    explicit SparsePoly(int dimension);

    static SparsePoly zero(int dimension);
    static SparsePoly constant(int dimension, const Rational& value);
    static SparsePoly monomial(int dimension, ExponentVector exponent, const Rational& coefficient);
    // x_{index+1}, i.e. index is zero-based.
    static SparsePoly variable(int dimension, int index);

    int dimension() const { return dimension_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Zero polynomial has no degree ("minus infinity"); reported as nullopt.
    std::optional<int> degree() const;

    Rational coefficient(const ExponentVector& exponent) const;

    // Adds coefficient * x^exponent, merging and dropping zeros.
    void add_term(const ExponentVector& exponent, const Rational& coefficient);

    std::vector<ExponentVector> support() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    bool operator==(const SparsePoly& other) const;
    bool operator!=(const SparsePoly& other) const { return !(*this == other); }

private:
    int dimension_;
    TermMap terms_;
};

SparsePoly operator+(const SparsePoly& p, const SparsePoly& q);
SparsePoly operator-(const SparsePoly& p, const SparsePoly& q);
SparsePoly operator-(const SparsePoly& p);
SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);
SparsePoly operator*(const Rational& c, const SparsePoly& p);
SparsePoly operator*(const SparsePoly& p, const Rational& c);

// Substitutes replacement[i] for x_{i+1}. All replacements must share one
// dimension, which becomes the dimension of the result.
SparsePoly substitute(const SparsePoly& p, const std::vector<SparsePoly>& replacement);

// Re-embeds p into a space with more variables (trailing exponents zero).
SparsePoly embed(const SparsePoly& p, int dimension);

// Text grammar: terms joined by +/-, term = [rational]["*" var["^" exp] ...],
// rational = int or int/int, variables x1..xn. When dimension is not given it
// is inferred from the largest variable index used.
SparsePoly parse_poly(std::string_view text, std::optional<int> dimension = std::nullopt);

// Deterministic rendering, terms in descending graded lex order.
std::string render_poly(const SparsePoly& p);

}  // namespace sonc
