// Command line front end: parse -> reduce -> certify -> shorten -> verify,
// plus the regression table. Exit codes: 0 success/verified, 1 verification
// failure, 2 usage or parse error, 3 vertex capacity exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sonc/json_io.hpp"
#include "sonc/paperchecks.hpp"
#include "sonc/shorten.hpp"

namespace {

using sonc::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sonc::SoncError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
    if (path) {
        std::ofstream out(*path, std::ios::binary);
        if (!out) throw sonc::SoncError("cannot write file: " + *path);
        out << content;
    } else {
        std::cout << content;
    }
}

// "pm1:n", "01:n", or a path to a JSON file with {"roots": [...]}.
sonc::Hypercube load_cube(const std::string& spec) {
    if (spec.rfind("pm1:", 0) == 0) {
        return sonc::Hypercube::symmetric(std::stoi(spec.substr(4)));
    }
    if (spec.rfind("01:", 0) == 0) {
        return sonc::Hypercube::unit(std::stoi(spec.substr(3)));
    }
    return sonc::hypercube_from_json(Json::parse(read_file(spec)));
}

// A file path (JSON or text grammar by content) or an inline polynomial.
sonc::SparsePoly load_poly(const std::string& arg, std::optional<int> dimension) {
    std::string text = arg;
    if (std::filesystem::exists(arg)) text = read_file(arg);
    std::string_view view = text;
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) {
        view.remove_prefix(1);
    }
    if (!view.empty() && view.front() == '{') {
        auto p = sonc::poly_from_json(Json::parse(view));
        if (dimension && p.dimension() != *dimension) {
            if (p.dimension() < *dimension) return sonc::embed(p, *dimension);
            throw sonc::DimensionMismatchError("polynomial dimension exceeds the hypercube");
        }
        return p;
    }
    return sonc::parse_poly(view, dimension);
}

sonc::ConstraintSet load_constraints(const std::optional<std::string>& path) {
    if (!path) return sonc::ConstraintSet{};
    return sonc::constraints_from_json(Json::parse(read_file(*path)));
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

struct Options {
    std::string poly;
    std::string cube;
    std::optional<std::string> constraints;
    std::optional<std::string> out;
    std::string cert_in;
    std::string point;
    int cap = sonc::kDefaultVertexCap;
    std::uint64_t seed = 0;
    int bound_n = 4;
};

int run(CLI::App& app, Options& opt, int argc, char** argv) {
    argv = app.ensure_utf8(argv);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (auto* cmd = app.get_subcommand("reduce"); cmd->parsed()) {
            const auto cube = load_cube(opt.cube);
            const auto f = load_poly(opt.poly, cube.dimension());
            const auto nf = sonc::normal_form(f, cube);
            Json j;
            j["remainder"] = sonc::poly_to_json(nf.remainder);
            Json quotients = Json::array();
            for (const auto& q : nf.quotients) quotients.push_back(sonc::poly_to_json(q));
            j["quotients"] = std::move(quotients);
            write_output(opt.out, dump(j));
            return kExitOk;
        }
        if (auto* cmd = app.get_subcommand("certify"); cmd->parsed()) {
            const auto cube = load_cube(opt.cube);
            const auto f = load_poly(opt.poly, cube.dimension());
            const auto constraints = load_constraints(opt.constraints);
            const auto cert = sonc::certify_hypercube(f, cube, constraints, opt.cap);
            write_output(opt.out, dump(sonc::certificate_to_json(cert, opt.seed)));
            return kExitOk;
        }
        if (auto* cmd = app.get_subcommand("verify"); cmd->parsed()) {
            const auto cube = load_cube(opt.cube);
            const auto f = load_poly(opt.poly, cube.dimension());
            const auto constraints = load_constraints(opt.constraints);
            const auto cert = sonc::certificate_from_json(Json::parse(read_file(opt.cert_in)));
            sonc::VerifyOptions options;
            options.vertex_cap = opt.cap;
            const auto report = sonc::verify_certificate(f, cert, cube, constraints, options);
            write_output(opt.out, dump(sonc::report_to_json(report)));
            return report.overall ? kExitOk : kExitVerifyFailed;
        }
        if (auto* cmd = app.get_subcommand("shorten"); cmd->parsed()) {
            const auto cert = sonc::certificate_from_json(Json::parse(read_file(opt.cert_in)));
            int dimension = 1;
            int degree_cap = 0;
            for (const auto& term : cert.terms) {
                dimension = std::max(dimension, term.circuit.dimension());
                degree_cap = std::max(degree_cap, term.circuit.degree());
            }
            const auto shortened = sonc::shorten_certificate(cert, dimension, degree_cap);
            write_output(opt.out, dump(sonc::certificate_to_json(shortened, opt.seed)));
            std::cerr << "terms: " << cert.terms.size() << " -> " << shortened.terms.size()
                      << "\n";
            return kExitOk;
        }
        if (auto* cmd = app.get_subcommand("paperchecks"); cmd->parsed()) {
            if (auto* bound = cmd->get_subcommand("bound"); bound->parsed()) {
                std::cout << sonc::rational_to_string(sonc::putinar_bound(opt.bound_n)) << "\n";
                return kExitOk;
            }
            const auto report = sonc::run_paperchecks(opt.seed);
            Json j;
            j["seed"] = report.seed;
            Json results = Json::array();
            for (const auto& [name, ok] : report.results) {
                std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
                Json entry;
                entry["name"] = name;
                entry["pass"] = ok;
                results.push_back(std::move(entry));
            }
            j["results"] = std::move(results);
            if (opt.out) write_output(opt.out, dump(j));
            return report.all_passed() ? kExitOk : kExitVerifyFailed;
        }
        if (auto* cmd = app.get_subcommand("eval"); cmd->parsed()) {
            std::vector<sonc::Rational> point;
            std::stringstream ss(opt.point);
            std::string coord;
            while (std::getline(ss, coord, ',')) point.push_back(sonc::parse_rational(coord));
            const auto f = load_poly(opt.poly, static_cast<int>(point.size()));
            std::cout << sonc::rational_to_string(f.evaluate(point)) << "\n";
            return kExitOk;
        }
        std::cerr << app.help() << "\n";
        return kExitUsage;
    } catch (const sonc::DimensionTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const sonc::SoncError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SONC nonnegativity certificates over constrained hypercubes"};
    app.require_subcommand(0, 1);
    Options opt;

    auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", opt.cap, "vertex enumeration cap")
            ->check(CLI::Range(1, sonc::kMaxVertexCap));
    };

    auto* reduce = app.add_subcommand("reduce", "normal form modulo the hypercube ideal");
    reduce->add_option("--poly", opt.poly, "polynomial (file or inline)")->required();
    reduce->add_option("--cube", opt.cube, "pm1:n | 01:n | JSON file")->required();
    reduce->add_option("--out", opt.out, "output file (default stdout)");

    auto* certify = app.add_subcommand("certify", "construct a certificate");
    certify->add_option("--poly", opt.poly, "polynomial (file or inline)")->required();
    certify->add_option("--cube", opt.cube, "pm1:n | 01:n | JSON file")->required();
    certify->add_option("--constraints", opt.constraints, "constraint set JSON file");
    certify->add_option("--out", opt.out, "output file (default stdout)");
    certify->add_option("--seed", opt.seed, "seed recorded in the output");
    add_cap(certify);

    auto* verify = app.add_subcommand("verify", "check a certificate independently");
    verify->add_option("--poly", opt.poly, "polynomial (file or inline)")->required();
    verify->add_option("--cert", opt.cert_in, "certificate JSON file")->required();
    verify->add_option("--cube", opt.cube, "pm1:n | 01:n | JSON file")->required();
    verify->add_option("--constraints", opt.constraints, "constraint set JSON file");
    verify->add_option("--out", opt.out, "report file (default stdout)");
    add_cap(verify);

    auto* shorten = app.add_subcommand("shorten", "Caratheodory-prune a certificate");
    shorten->add_option("--in", opt.cert_in, "certificate JSON file")->required();
    shorten->add_option("--out", opt.out, "output file (default stdout)");
    shorten->add_option("--seed", opt.seed, "seed recorded in the output");

    auto* paperchecks = app.add_subcommand("paperchecks", "structural regression table");
    auto* pc_run = paperchecks->add_subcommand("run", "run all regressions");
    pc_run->add_option("--seed", opt.seed, "seed for the randomized suites");
    pc_run->add_option("--out", opt.out, "report JSON file");
    auto* pc_bound = paperchecks->add_subcommand("bound", "print the exact threshold");
    pc_bound->add_option("--n", opt.bound_n, "dimension")->required();
    paperchecks->require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate a polynomial exactly");
    eval->add_option("--poly", opt.poly, "polynomial (file or inline)")->required();
    eval->add_option("--point", opt.point, "comma separated rational coordinates")->required();

    return run(app, opt, argc, argv);
}
