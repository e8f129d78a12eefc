// steiner4: compares the weighted two-node tree and the full Steiner tree on
// isosceles trapezia and the symmetric tetrahedra that reduce to them.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 tetrahedron without the midpoint-perpendicular symmetry.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steiner4/errors.hpp"
#include "steiner4/reporting.hpp"
#include "steiner4/verification.hpp"

namespace {

std::vector<double> parse_numbers(const std::string& text, std::size_t expected,
                                  const std::string& what) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        double value = 0.0;
        const char* begin = token.data();
        const char* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end || token.empty()) {
            throw steiner4::InvalidInputError(what + ": cannot parse '" + token + "' as a number");
        }
        values.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.size() != expected) {
        throw steiner4::InvalidInputError(what + ": expected " + std::to_string(expected) +
                                          " comma-separated numbers, got " +
                                          std::to_string(values.size()));
    }
    return values;
}

int run_compute_command(const std::string& trap, const std::string& tetra,
                        const std::string& vertices, const std::string& format) {
    const int given = (!trap.empty()) + (!tetra.empty()) + (!vertices.empty());
    if (given != 1) {
        throw steiner4::InvalidInputError(
            "compute requires exactly one of --trap, --tetra, --vertices");
    }
    if (format != "json" && format != "csv") {
        throw steiner4::InvalidInputError("--format must be json or csv");
    }

    steiner4::ComputeResult result;
    if (!trap.empty()) {
        const auto v = parse_numbers(trap, 3, "--trap a12,a34,d");
        result = steiner4::run_compute(steiner4::IsoscelesTrapezium(v[0], v[1], v[2]));
    } else if (!tetra.empty()) {
        const auto v = parse_numbers(tetra, 4, "--tetra x1,y1,z1,x4");
        result = steiner4::run_compute(
            steiner4::SymmetricTetrahedron::from_parameters(v[0], v[1], v[2], v[3]));
    } else {
        const auto v = parse_numbers(vertices, 12, "--vertices (four x,y,z triples)");
        result = steiner4::run_compute(steiner4::SymmetricTetrahedron::from_general_vertices(
            {v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}, {v[9], v[10], v[11]}));
    }

    std::cout << (format == "json" ? steiner4::render_compute_json(result)
                                   : steiner4::render_compute_csv(result));
    return 0;
}

int run_verify_command(int cases, std::uint64_t seed, double tol) {
    if (cases < 1) throw steiner4::InvalidInputError("--cases must be at least 1");
    if (!(tol > 0.0)) throw steiner4::InvalidInputError("--tol must be positive");

    steiner4::VerifyOptions options;
    options.cases = cases;
    options.seed = seed;
    options.oracle_rel_tol = tol;

    const auto results = steiner4::run_verification(options);
    int failures = 0;
    for (const auto& check : results) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
                  << "\n";
        if (!check.passed) ++failures;
    }
    std::cout << (results.size() - failures) << "/" << results.size() << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-network comparison for isosceles trapezia and symmetric tetrahedra"};
    app.require_subcommand(1);

    std::string trap_arg;
    std::string tetra_arg;
    std::string vertices_arg;
    std::string format_arg = "json";
    auto* compute = app.add_subcommand("compute", "report both networks for one configuration");
    compute->add_option("--trap", trap_arg, "trapezium as a12,a34,d");
    compute->add_option("--tetra", tetra_arg, "canonical tetrahedron as x1,y1,z1,x4");
    compute->add_option("--vertices", vertices_arg,
                        "general tetrahedron as twelve numbers x1,y1,z1,...,x4,y4,z4");
    compute->add_option("--format", format_arg, "output format: json or csv");

    double a12 = 1.0;
    double a34 = 1.0;
    double theta_min = 1.0;
    double theta_max = 89.0;
    int steps = 89;
    auto* sweep = app.add_subcommand("sweep", "CSV of the gap curve over a range of angles");
    sweep->add_option("--a12", a12, "top side length")->required();
    sweep->add_option("--a34", a34, "bottom side length")->required();
    sweep->add_option("--theta-min", theta_min, "first diagonal angle, degrees")->required();
    sweep->add_option("--theta-max", theta_max, "last diagonal angle, degrees")->required();
    sweep->add_option("--steps", steps, "number of rows (>= 2)")->required();

    int cases = 200;
    std::uint64_t seed = 42;
    double tol = 1e-6;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--cases", cases, "random cases per statistical check");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--tol", tol, "relative tolerance for oracle equivalence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            return run_compute_command(trap_arg, tetra_arg, vertices_arg, format_arg);
        }
        if (sweep->parsed()) {
            std::cout << steiner4::render_sweep_csv(a12, a34, theta_min, theta_max, steps);
            return 0;
        }
        return run_verify_command(cases, seed, tol);
    } catch (const steiner4::NotBoundarySymmetricError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const steiner4::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
