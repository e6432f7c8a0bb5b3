#pragma once

#include <string>

#include "sonc/certify.hpp"

namespace sonc {

struct VerifyOptions {
    int vertex_cap = kDefaultVertexCap;
    // Hard bound on intermediate term counts while expanding products;
    // exceeding it fails the identity check instead of truncating.
    std::size_t term_cap = 4'000'000;
};

struct VerifyReport {
    bool identity_ok = false;
    bool circuits_ok = false;
    int first_failing_circuit = -1;  // term index when circuits_ok is false
    bool degree_ok = false;
    bool vertex_spotcheck_ok = false;
    bool overall = false;
    std::string note;
};

// Independent certificate checker. Expands every term from raw data (no code
// shared with the constructor beyond polynomial arithmetic), re-validates all
// circuits from their coefficients ignoring cached barycentric data, checks
// the degree declaration against n + d, and, when the dimension is within the
// cap, evaluates every term on every feasible vertex. Failures are report
// fields, never exceptions.
VerifyReport verify_certificate(const SparsePoly& f, const Certificate& cert,
                                const Hypercube& cube, const ConstraintSet& constraints,
                                const VerifyOptions& options = {});

}  // namespace sonc
