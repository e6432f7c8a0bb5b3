#include "sonc/json_io.hpp"

#include "sonc/errors.hpp"

namespace sonc {

namespace {

Rational rational_from_json(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw JsonFormatError(std::string(what) + " must be a rational string");
    }
    return parse_rational(j.get<std::string>());
}

ExponentVector exponents_from_json(const Json& j) {
    if (!j.is_array()) throw JsonFormatError("\"exp\" must be an array of integers");
    ExponentVector e;
    e.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_number_integer() || entry.get<long long>() < 0) {
            throw JsonFormatError("exponents must be nonnegative integers");
        }
        e.push_back(entry.get<int>());
    }
    return e;
}

}  // namespace

Json poly_to_json(const SparsePoly& p) {
    Json j;
    j["n"] = p.dimension();
    Json terms = Json::array();
    for (const auto& [exp, coef] : p.terms()) {
        Json t;
        t["exp"] = exp;
        t["num"] = coef.get_num().get_str();
        t["den"] = coef.get_den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

SparsePoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
        throw JsonFormatError("polynomial JSON needs \"n\" and \"terms\"");
    }
    SparsePoly p(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        const ExponentVector e = exponents_from_json(t.at("exp"));
        Integer num{t.at("num").get<std::string>()};
        Integer den{t.at("den").get<std::string>()};
        p.add_term(e, make_rational(num, den));
    }
    return p;
}

Json hypercube_to_json(const Hypercube& cube) {
    Json roots = Json::array();
    for (const auto& [a, b] : cube.roots()) {
        roots.push_back(Json::array({rational_to_string(a), rational_to_string(b)}));
    }
    Json j;
    j["roots"] = std::move(roots);
    return j;
}

Hypercube hypercube_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("roots")) {
        throw JsonFormatError("hypercube JSON needs \"roots\"");
    }
    std::vector<std::pair<Rational, Rational>> roots;
    for (const auto& pair : j.at("roots")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw JsonFormatError("each root entry must be a pair [a, b]");
        }
        roots.emplace_back(rational_from_json(pair.at(0), "root"),
                           rational_from_json(pair.at(1), "root"));
    }
    return Hypercube(std::move(roots));
}

Json constraints_to_json(const ConstraintSet& constraints) {
    Json j;
    Json polys = Json::array();
    for (const auto& p : constraints.inequalities()) polys.push_back(poly_to_json(p));
    j["polys"] = std::move(polys);
    if (constraints.box_constant()) {
        j["N"] = rational_to_string(*constraints.box_constant());
    }
    return j;
}

ConstraintSet constraints_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("polys")) {
        throw JsonFormatError("constraint JSON needs \"polys\"");
    }
    std::vector<SparsePoly> polys;
    for (const auto& p : j.at("polys")) polys.push_back(poly_from_json(p));
    std::optional<Rational> box;
    if (j.contains("N")) box = rational_from_json(j.at("N"), "N");
    return ConstraintSet(std::move(polys), std::move(box));
}

Json circuit_to_json(const CircuitPoly& c) {
    Json j;
    Json outer = Json::array();
    for (const auto& t : c.outer()) {
        Json entry;
        entry["exp"] = t.exponent;
        entry["coef"] = rational_to_string(t.coefficient);
        outer.push_back(std::move(entry));
    }
    j["outer"] = std::move(outer);
    if (c.has_inner()) {
        Json inner;
        inner["exp"] = c.inner()->exponent;
        inner["coef"] = rational_to_string(c.inner()->coefficient);
        j["inner"] = std::move(inner);
    } else {
        j["inner"] = nullptr;
    }
    Json lambdas = Json::array();
    for (const auto& l : c.lambdas()) lambdas.push_back(rational_to_string(l));
    j["lambda"] = std::move(lambdas);
    return j;
}

CircuitPoly circuit_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("outer") || j.at("outer").empty()) {
        throw JsonFormatError("circuit JSON needs a nonempty \"outer\" array");
    }
    std::vector<CircuitTerm> outer;
    for (const auto& t : j.at("outer")) {
        outer.push_back(CircuitTerm{exponents_from_json(t.at("exp")),
                                    rational_from_json(t.at("coef"), "coef")});
    }
    const int n = static_cast<int>(outer.front().exponent.size());
    for (const auto& t : outer) {
        if (static_cast<int>(t.exponent.size()) != n) {
            throw JsonFormatError("circuit exponent vectors must share one length");
        }
    }
    std::optional<CircuitTerm> inner;
    if (j.contains("inner") && !j.at("inner").is_null()) {
        inner = CircuitTerm{exponents_from_json(j.at("inner").at("exp")),
                            rational_from_json(j.at("inner").at("coef"), "coef")};
    }
    std::vector<Rational> lambdas;
    if (j.contains("lambda")) {
        for (const auto& l : j.at("lambda")) lambdas.push_back(rational_from_json(l, "lambda"));
    }
    return CircuitPoly(n, std::move(outer), std::move(inner), std::move(lambdas));
}

namespace {

const char* atom_kind_name(AtomKind kind) {
    switch (kind) {
        case AtomKind::One: return "ONE";
        case AtomKind::G: return "G";
        case AtomKind::NegG: return "NEG_G";
        case AtomKind::BoxPlus: return "BOXPLUS";
        case AtomKind::BoxMinus: return "BOXMINUS";
        case AtomKind::P: return "P";
    }
    return "ONE";
}

}  // namespace

Json atom_to_json(const Atom& atom) {
    Json j;
    j["kind"] = atom_kind_name(atom.kind);
    switch (atom.kind) {
        case AtomKind::One: break;
        case AtomKind::P: j["i"] = atom.index; break;
        default: j["j"] = atom.index + 1; break;  // coordinates are one-based in files
    }
    return j;
}

Atom atom_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ONE") return Atom{AtomKind::One, 0};
    if (kind == "P") return Atom{AtomKind::P, j.at("i").get<int>()};
    const int coord = j.at("j").get<int>() - 1;
    if (coord < 0) throw JsonFormatError("coordinate atom index must be >= 1");
    if (kind == "G") return Atom{AtomKind::G, coord};
    if (kind == "NEG_G") return Atom{AtomKind::NegG, coord};
    if (kind == "BOXPLUS") return Atom{AtomKind::BoxPlus, coord};
    if (kind == "BOXMINUS") return Atom{AtomKind::BoxMinus, coord};
    throw JsonFormatError("unknown atom kind '" + kind + "'");
}

Json certificate_to_json(const Certificate& cert, std::uint64_t seed) {
    Json j;
    j["degree"] = cert.declared_degree;
    j["seed"] = seed;
    Json terms = Json::array();
    for (const auto& term : cert.terms) {
        Json t;
        t["weight"] = rational_to_string(term.weight);
        t["circuit"] = circuit_to_json(term.circuit);
        Json product = Json::array();
        for (const auto& atom : term.product.atoms()) product.push_back(atom_to_json(atom));
        t["product"] = std::move(product);
        t["scale"] = rational_to_string(term.scale);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms")) {
        throw JsonFormatError("certificate JSON needs \"degree\" and \"terms\"");
    }
    Certificate cert;
    cert.declared_degree = j.at("degree").get<int>();
    for (const auto& t : j.at("terms")) {
        ConstraintProduct product;
        for (const auto& atom : t.at("product")) product.add(atom_from_json(atom));
        cert.terms.push_back(CertTerm{rational_from_json(t.at("weight"), "weight"),
                                      rational_from_json(t.at("scale"), "scale"),
                                      circuit_from_json(t.at("circuit")), std::move(product)});
    }
    return cert;
}

Json report_to_json(const VerifyReport& report) {
    Json j;
    j["identity_ok"] = report.identity_ok;
    j["circuits_ok"] = report.circuits_ok;
    if (!report.circuits_ok) j["first_failing_circuit"] = report.first_failing_circuit;
    j["degree_ok"] = report.degree_ok;
    j["vertex_spotcheck_ok"] = report.vertex_spotcheck_ok;
    j["overall"] = report.overall;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

}  // namespace sonc
