#pragma once

#include <json.hpp>

#include "sonc/certify.hpp"
#include "sonc/verify.hpp"

namespace sonc {

// Field order is fixed so equal inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// {"n": 2, "terms": [{"exp": [1, 0], "num": "-2", "den": "1"}, ...]}
Json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

// {"roots": [["-1", "1"], ...]}
Json hypercube_to_json(const Hypercube& cube);
Hypercube hypercube_from_json(const Json& j);

// {"polys": [...], "N": "2"} (N optional)
Json constraints_to_json(const ConstraintSet& constraints);
ConstraintSet constraints_from_json(const Json& j);

// {"outer": [{"exp": [...], "coef": "1"}, ...], "inner": {...}|null, "lambda": ["1/2", ...]}
Json circuit_to_json(const CircuitPoly& c);
CircuitPoly circuit_from_json(const Json& j);

// {"kind": "G", "j": 1} / {"kind": "BOXPLUS", "j": 2} / {"kind": "P", "i": 0} / {"kind": "ONE"}
// Coordinates j are one-based in files, constraint indices i zero-based.
Json atom_to_json(const Atom& atom);
Atom atom_from_json(const Json& j);

// {"degree": d, "seed": s, "terms": [{"weight": "3/2", "circuit": {...},
//  "product": [...], "scale": "1/4"}, ...]}
Json certificate_to_json(const Certificate& cert, std::uint64_t seed = 0);
Certificate certificate_from_json(const Json& j);

Json report_to_json(const VerifyReport& report);

}  // namespace sonc
