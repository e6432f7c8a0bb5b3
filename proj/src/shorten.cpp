#include "sonc/shorten.hpp"

#include <algorithm>
#include <map>

#include "sonc/errors.hpp"
#include "sonc/linalg.hpp"

namespace sonc {

namespace {

struct CircuitLess {
    bool operator()(const CircuitPoly& a, const CircuitPoly& b) const {
        return compare(a, b) < 0;
    }
};

Integer monomial_space_dimension(int n, int degree_cap) {
    // Monomials of degree <= d in n variables.
    return binomial(static_cast<unsigned long>(n + degree_cap),
                    static_cast<unsigned long>(degree_cap));
}

}  // namespace

std::vector<WeightedCircuit> caratheodory_prune(std::vector<WeightedCircuit> terms, int dimension,
                                                int degree_cap) {
    for (const auto& t : terms) {
        if (t.weight <= 0) throw SoncError("caratheodory_prune expects positive weights");
        if (t.circuit.degree() > degree_cap) {
            throw SoncError("circuit degree exceeds the pruning cap");
        }
    }

    // Duplicate circuits are the one-point case: merge their weights.
    std::map<CircuitPoly, Rational, CircuitLess> merged;
    for (auto& t : terms) {
        auto [it, inserted] = merged.emplace(std::move(t.circuit), t.weight);
        if (!inserted) it->second += t.weight;
    }
    std::vector<WeightedCircuit> work;
    work.reserve(merged.size());
    for (auto& [circuit, weight] : merged) {
        work.push_back(WeightedCircuit{weight, circuit});
    }

    const Integer dim = monomial_space_dimension(dimension, degree_cap);

    while (Integer(static_cast<unsigned long>(work.size())) > dim + 1) {
        // Columns of the kernel system are the terms; rows are the union of
        // the circuit supports plus the affine-lift row of ones.
        std::map<ExponentVector, std::size_t, GlexLess> row_of;
        for (const auto& t : work) {
            for (const auto& term : t.circuit.outer()) row_of.emplace(term.exponent, 0);
            if (t.circuit.has_inner()) row_of.emplace(t.circuit.inner()->exponent, 0);
        }
        std::size_t next = 0;
        for (auto& [exp, row] : row_of) row = next++;

        Matrix a(row_of.size() + 1, std::vector<Rational>(work.size(), Rational(0)));
        for (std::size_t col = 0; col < work.size(); ++col) {
            const auto& c = work[col].circuit;
            for (const auto& term : c.outer()) {
                a[row_of[term.exponent]][col] += term.coefficient;
            }
            if (c.has_inner()) {
                a[row_of[c.inner()->exponent]][col] += c.inner()->coefficient;
            }
            a[row_of.size()][col] = 1;  // affine lift
        }

        auto gamma_opt = kernel_vector(std::move(a));
        if (!gamma_opt) {
            // Independent columns: nothing left to eliminate.
            break;
        }
        auto gamma = *gamma_opt;

        // The lift row forces sum(gamma) = 0, so a positive entry exists
        // after an optional global sign flip.
        bool has_positive = std::any_of(gamma.begin(), gamma.end(),
                                        [](const Rational& g) { return g > 0; });
        if (!has_positive) {
            for (auto& g : gamma) g = -g;
        }

        std::size_t blocking = work.size();
        Rational t_step;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (gamma[i] <= 0) continue;
            const Rational candidate = work[i].weight / gamma[i];
            if (blocking == work.size() || candidate < t_step) {
                blocking = i;
                t_step = candidate;
            }
        }

        std::vector<WeightedCircuit> reduced;
        reduced.reserve(work.size() - 1);
        for (std::size_t i = 0; i < work.size(); ++i) {
            Rational w = work[i].weight - t_step * gamma[i];
            if (w == 0) continue;
            reduced.push_back(WeightedCircuit{std::move(w), std::move(work[i].circuit)});
        }
        work = std::move(reduced);
    }
    return work;
}

Certificate shorten_certificate(const Certificate& cert, int dimension, int degree_cap) {
    std::map<ConstraintProduct, std::vector<WeightedCircuit>> groups;
    for (const auto& term : cert.terms) {
        if (term.weight == 0 || term.scale == 0) continue;
        groups[term.product].push_back(
            WeightedCircuit{term.weight * term.scale, term.circuit});
    }

    Certificate shortened;
    shortened.declared_degree = cert.declared_degree;
    for (auto& [product, members] : groups) {
        auto pruned = caratheodory_prune(std::move(members), dimension, degree_cap);
        for (auto& wc : pruned) {
            shortened.terms.push_back(
                CertTerm{std::move(wc.weight), Rational(1), std::move(wc.circuit), product});
        }
    }

    std::sort(shortened.terms.begin(), shortened.terms.end(),
              [](const CertTerm& lhs, const CertTerm& rhs) {
                  if (lhs.product != rhs.product) return lhs.product < rhs.product;
                  if (int c = compare(lhs.circuit, rhs.circuit)) return c < 0;
                  return cmp(lhs.weight, rhs.weight) < 0;
              });
    return shortened;
}

}  // namespace sonc
