#include "sonc/verify.hpp"

#include <algorithm>
#include <map>

#include "sonc/errors.hpp"

namespace sonc {

namespace {

// Atom semantics, written out here on purpose: the checker must not reuse the
// constructor's expansion path.
SparsePoly atom_poly(const Atom& atom, const Hypercube& cube, const ConstraintSet& constraints) {
    const int n = cube.dimension();
    SparsePoly p(n);
    ExponentVector e(n, 0);
    switch (atom.kind) {
        case AtomKind::One:
            return SparsePoly::constant(n, Rational(1));
        case AtomKind::G:
        case AtomKind::NegG: {
            if (atom.index < 0 || atom.index >= n) throw JsonFormatError("atom index out of range");
            const Rational& a = cube.lower(atom.index);
            const Rational& b = cube.upper(atom.index);
            const Rational sign(atom.kind == AtomKind::G ? 1 : -1);
            e[atom.index] = 2;
            p.add_term(e, sign);
            e[atom.index] = 1;
            p.add_term(e, -sign * (a + b));
            e[atom.index] = 0;
            p.add_term(e, sign * a * b);
            return p;
        }
        case AtomKind::BoxPlus: {
            if (atom.index < 0 || atom.index >= n) throw JsonFormatError("atom index out of range");
            e[atom.index] = 1;
            p.add_term(e, Rational(1));
            e[atom.index] = 0;
            p.add_term(e, -cube.lower(atom.index));
            return p;
        }
        case AtomKind::BoxMinus: {
            if (atom.index < 0 || atom.index >= n) throw JsonFormatError("atom index out of range");
            e[atom.index] = 1;
            p.add_term(e, Rational(-1));
            e[atom.index] = 0;
            p.add_term(e, cube.upper(atom.index));
            return p;
        }
        case AtomKind::P: {
            if (atom.index < 0 ||
                atom.index >= static_cast<int>(constraints.inequalities().size())) {
                throw JsonFormatError("constraint atom index out of range");
            }
            return constraints.inequalities()[atom.index];
        }
    }
    throw JsonFormatError("unknown atom kind");
}

SparsePoly circuit_raw_poly(const CircuitPoly& c) {
    SparsePoly p(c.dimension());
    for (const auto& t : c.outer()) p.add_term(t.exponent, t.coefficient);
    if (c.has_inner()) p.add_term(c.inner()->exponent, c.inner()->coefficient);
    return p;
}

}  // namespace

VerifyReport verify_certificate(const SparsePoly& f, const Certificate& cert,
                                const Hypercube& cube, const ConstraintSet& constraints,
                                const VerifyOptions& options) {
    VerifyReport report;
    const int n = cube.dimension();

    if (f.dimension() != n) {
        report.note = "polynomial dimension does not match the hypercube";
        return report;
    }
    for (const auto& p : constraints.inequalities()) {
        if (p.dimension() != n) {
            report.note = "constraint dimension does not match the hypercube";
            return report;
        }
    }

    // (a) exact identity: expand sum(weight * scale * circuit * product).
    try {
        SparsePoly sum = SparsePoly::zero(n);
        for (const auto& term : cert.terms) {
            if (term.circuit.dimension() != n) {
                throw JsonFormatError("circuit dimension does not match the hypercube");
            }
            SparsePoly expanded =
                circuit_raw_poly(term.circuit) * (term.weight * term.scale);
            for (const auto& atom : term.product.atoms()) {
                expanded = expanded * atom_poly(atom, cube, constraints);
                if (expanded.terms().size() > options.term_cap) {
                    throw SoncError("expansion exceeded the term cap");
                }
            }
            sum = sum + expanded;
            if (sum.terms().size() > options.term_cap) {
                throw SoncError("expansion exceeded the term cap");
            }
        }
        report.identity_ok = (sum == f);
        if (!report.identity_ok && report.note.empty()) {
            report.note = "expanded certificate does not reproduce the polynomial";
        }
    } catch (const SoncError& e) {
        report.identity_ok = false;
        report.note = e.what();
    }

    // (b) every circuit re-validated from raw coefficients; weights and the
    // delta scales must be nonnegative for soundness.
    report.circuits_ok = true;
    for (std::size_t i = 0; i < cert.terms.size(); ++i) {
        const auto& term = cert.terms[i];
        bool ok = term.weight >= 0 && term.scale >= 0;
        if (ok) {
            try {
                const CircuitPoly revalidated = validate_circuit(circuit_raw_poly(term.circuit));
                ok = is_nonnegative(revalidated);
            } catch (const SoncError&) {
                ok = false;
            }
        }
        if (!ok) {
            report.circuits_ok = false;
            report.first_failing_circuit = static_cast<int>(i);
            break;
        }
    }

    // (c) declared degree covers every term and respects the n + d bound.
    // The construction guarantees n + d for even n + d; an odd bound can be
    // exceeded by one by the flanking vertices of odd inner exponents.
    const int bound = n + constraints.max_degree();
    const int allowed = bound + (bound % 2 == 0 ? 0 : 1);
    try {
        int actual = 0;
        for (const auto& term : cert.terms) {
            actual = std::max(actual, term_degree(term, constraints));
        }
        report.degree_ok = actual <= cert.declared_degree && cert.declared_degree <= allowed;
    } catch (const std::exception&) {
        report.degree_ok = false;  // out-of-range atom index
    }

    // (d) spot check: every term is nonnegative on every feasible vertex,
    // evaluated from the raw factored data.
    report.vertex_spotcheck_ok = true;
    if (n <= options.vertex_cap) {
        try {
            std::vector<SparsePoly> circuit_polys;
            circuit_polys.reserve(cert.terms.size());
            for (const auto& term : cert.terms) {
                circuit_polys.push_back(circuit_raw_poly(term.circuit));
            }
            std::map<Atom, SparsePoly> distinct_atoms;
            for (const auto& term : cert.terms) {
                for (const auto& atom : term.product.atoms()) {
                    distinct_atoms.emplace(atom, atom_poly(atom, cube, constraints));
                }
            }

            const auto feasible = feasible_vertices(cube, constraints, options.vertex_cap);
            for (std::uint64_t mask : feasible) {
                const auto point = cube.vertex_point(mask);
                std::map<Atom, Rational> atom_values;
                for (const auto& [atom, poly] : distinct_atoms) {
                    atom_values.emplace(atom, poly.evaluate(point));
                }
                for (std::size_t i = 0; i < cert.terms.size(); ++i) {
                    const auto& term = cert.terms[i];
                    Rational value = term.weight * term.scale * circuit_polys[i].evaluate(point);
                    for (const auto& atom : term.product.atoms()) {
                        if (value == 0) break;
                        value *= atom_values.at(atom);
                    }
                    if (value < 0) {
                        report.vertex_spotcheck_ok = false;
                        break;
                    }
                }
                if (!report.vertex_spotcheck_ok) break;
            }
        } catch (const SoncError& e) {
            report.vertex_spotcheck_ok = false;
            report.note = e.what();
        }
    }

    report.overall = report.identity_ok && report.circuits_ok && report.degree_ok &&
                     report.vertex_spotcheck_ok;
    return report;
}

}  // namespace sonc
