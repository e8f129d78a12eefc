#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "steiner4/reporting.hpp"

using namespace steiner4;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string("\"") + STEINER4_CLI_PATH + "\" " + args +
                                " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

TEST_CASE("format_number: 12 significant digits, deterministic") {
    CHECK(format_number(3.5777087639996635) == "3.577708764");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(-0.0963763171773128) == "-0.0963763171773");
}

TEST_CASE("run_compute: trapezium values") {
    const ComputeResult r = run_compute(IsoscelesTrapezium(1, 1, 2));
    CHECK(r.construction.total == doctest::Approx(3.5777087639996635).epsilon(1e-13));
    CHECK(r.steiner.total == doctest::Approx(3.7320508075688773).epsilon(1e-13));
    CHECK(r.report.classification == Classification::ConstructionShorter);
    CHECK(r.oracle_construction.converged);
    CHECK(r.oracle_construction.rel_error <= 1e-9);
    CHECK(r.oracle_steiner.converged);
    CHECK(r.oracle_steiner.rel_error <= 1e-9);
    CHECK(r.warnings.empty());
}

TEST_CASE("run_compute: tetrahedron input agrees with its reduction") {
    const ComputeResult via_tetra =
        run_compute(SymmetricTetrahedron::from_parameters(0.3, 0.4, 2.0, 0.5));
    const ComputeResult via_trap = run_compute(IsoscelesTrapezium(1, 1, 2));

    CHECK(via_tetra.from_tetrahedron);
    CHECK(via_tetra.phi == doctest::Approx(0.9272952180016122).epsilon(1e-14));
    CHECK(std::abs(via_tetra.theta - via_trap.theta) <= 1e-10);
    CHECK(std::abs(via_tetra.weight - via_trap.weight) <= 1e-10);
    CHECK(std::abs(via_tetra.construction.total - via_trap.construction.total) <= 1e-10);
    CHECK(std::abs(via_tetra.steiner.total - via_trap.steiner.total) <= 1e-10);
    CHECK(std::abs(via_tetra.report.gap - via_trap.report.gap) <= 1e-10);
    CHECK(std::abs(via_tetra.oracle_construction.value - via_trap.oracle_construction.value) <=
          1e-10);
    CHECK(std::abs(via_tetra.oracle_steiner.value - via_trap.oracle_steiner.value) <= 1e-10);
}

TEST_CASE("run_compute: warning for shapes outside the length assumption") {
    // a12 = 1, a34 = 3, d = 2.5: d <= max side but theta stays below 90 deg
    const ComputeResult r = run_compute(SymmetricTetrahedron::from_parameters(0.5, 0.0, 2.5, 1.5));
    REQUIRE(r.warnings.size() == 1);
}

TEST_CASE("render_compute_json: deterministic and complete") {
    const ComputeResult r = run_compute(IsoscelesTrapezium(1, 1, 2));
    const std::string a = render_compute_json(r);
    const std::string b = render_compute_json(run_compute(IsoscelesTrapezium(1, 1, 2)));
    CHECK(a == b);
    CHECK(a.find("\"l_construction\": 3.577708764") != std::string::npos);
    CHECK(a.find("\"l_steiner\": 3.73205080757") != std::string::npos);
    CHECK(a.find("\"classification\": \"ConstructionShorter\"") != std::string::npos);
    CHECK(a.find("\"w\": 0.894427191") != std::string::npos);
    CHECK(a.find("\"theta_deg\": 53.1301023542") != std::string::npos);
    CHECK(a.find("phi_deg") == std::string::npos);  // trapezium input has no twist angle

    const std::string t = render_compute_json(
        run_compute(SymmetricTetrahedron::from_parameters(0.3, 0.4, 2.0, 0.5)));
    CHECK(t.find("\"phi_deg\": 53.1301023542") != std::string::npos);
    CHECK(t.find("\"form\": \"tetrahedron\"") != std::string::npos);
}

TEST_CASE("render_sweep_csv: header, rows, sign change, grid minimum") {
    const std::string csv = render_sweep_csv(1.0, 1.0, 1.0, 89.0, 89);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 90);
    CHECK(lines[0] == "theta_deg,d,w,l_construction,l_steiner,gap,classification");

    double previous_theta = 0.0;
    int sign_changes = 0;
    int previous_sign = 0;
    double min_gap = 1e300;
    double min_gap_theta = 0.0;
    double gap_at_60 = 1e300;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_csv(lines[i]);
        REQUIRE(fields.size() == 7);
        const double theta = std::stod(fields[0]);
        const double gap = std::stod(fields[5]);
        CHECK(theta > previous_theta);
        previous_theta = theta;
        if (theta == 60.0) gap_at_60 = gap;
        if (gap < min_gap) {
            min_gap = gap;
            min_gap_theta = theta;
        }
        if (std::abs(gap) > 1e-9) {
            const int sign = gap > 0 ? 1 : -1;
            if (previous_sign != 0 && sign != previous_sign) {
                ++sign_changes;
                CHECK(previous_theta >= 59.0);
                CHECK(previous_theta <= 61.0);
            }
            previous_sign = sign;
        }
    }
    CHECK(sign_changes == 1);
    CHECK(std::abs(gap_at_60) <= 1e-9);
    CHECK(min_gap_theta == 78.0);  // the grid point nearest the stationary angle

    CHECK_THROWS_AS(render_sweep_csv(1.0, 1.0, 50.0, 10.0, 10), InvalidInputError);
    CHECK_THROWS_AS(render_sweep_csv(1.0, 1.0, 10.0, 95.0, 10), InvalidInputError);
    CHECK_THROWS_AS(render_sweep_csv(1.0, 1.0, 10.0, 50.0, 1), InvalidInputError);
    CHECK_THROWS_AS(render_sweep_csv(-1.0, 1.0, 10.0, 50.0, 10), InvalidInputError);
}

TEST_CASE("cli binary: compute is byte-identical across runs") {
    const CommandResult first = run_cli("compute --trap 1,1,2");
    const CommandResult second = run_cli("compute --trap 1,1,2");
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("\"classification\": \"ConstructionShorter\"") != std::string::npos);

    const CommandResult csv = run_cli("compute --trap 1,1,1 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("SteinerShorter") != std::string::npos);
}

TEST_CASE("cli binary: tetra and vertices inputs") {
    const CommandResult tetra = run_cli("compute --tetra 0.3,0.4,2,0.5");
    CHECK(tetra.exit_code == 0);
    CHECK(tetra.output.find("\"phi_deg\": 53.1301023542") != std::string::npos);

    const CommandResult vertices =
        run_cli("compute --vertices -0.3,-0.4,2,0.3,0.4,2,0.5,0,0,-0.5,0,0");
    CHECK(vertices.exit_code == 0);
    CHECK(vertices.output.find("\"form\": \"tetrahedron\"") != std::string::npos);
}

TEST_CASE("cli binary: exit codes") {
    CHECK(run_cli("compute --trap 1,1").exit_code == 2);         // wrong arity
    CHECK(run_cli("compute --trap 1,1,-2").exit_code == 2);      // invalid value
    CHECK(run_cli("compute --trap 1,1,abc").exit_code == 2);     // parse failure
    CHECK(run_cli("compute --trap 1,1,2 --tetra 1,1,2,1").exit_code == 2);
    CHECK(run_cli("compute --trap 1,1,2 --format xml").exit_code == 2);
    CHECK(run_cli("sweep --a12 1 --a34 1 --theta-min 50 --theta-max 10 --steps 5").exit_code == 2);
    CHECK(run_cli("compute --vertices 0,0,0,1,0.1,0.2,0.3,1.2,0.1,0.9,0.4,1.3").exit_code == 3);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli binary: sweep and quick verify") {
    const CommandResult sweep =
        run_cli("sweep --a12 1 --a34 1 --theta-min 59 --theta-max 61 --steps 3");
    CHECK(sweep.exit_code == 0);
    const auto lines = split_lines(sweep.output);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "theta_deg,d,w,l_construction,l_steiner,gap,classification");
    CHECK(split_csv(lines[2])[0] == "60");
    CHECK(split_csv(lines[2])[6] == "Equal");

    const CommandResult verify = run_cli("verify --cases 5 --seed 42");
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("9/9 checks passed") != std::string::npos);

    // seeded case sets are deterministic down to the printed residuals
    const CommandResult again = run_cli("verify --cases 5 --seed 42");
    CHECK(verify.output == again.output);
}
