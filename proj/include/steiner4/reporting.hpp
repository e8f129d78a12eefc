#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner4/comparison.hpp"
#include "steiner4/oracle.hpp"
#include "steiner4/tetrahedron.hpp"
#include "steiner4/trapezium.hpp"

namespace steiner4 {

/// Number formatting used for every value the CLI emits: 12 significant
/// digits, '.' decimal separator. Identical inputs therefore render to
/// byte-identical output.
std::string format_number(double value);

/// Free minimization run next to a closed form, for cross-checking.
struct OracleCrossCheck {
    double value = 0.0;
    double rel_error = 0.0;  // |value - closed form| / closed form
    double gradient_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Everything a compute invocation reports.
struct ComputeResult {
    bool from_tetrahedron = false;
    std::optional<SymmetricTetrahedron> tetra;  // set for tetrahedron inputs
    std::optional<IsoscelesTrapezium> trapezium;
    double theta = 0.0;  // radians
    double phi = 0.0;    // radians; meaningful for tetrahedron inputs
    double weight = 0.0;
    TwoNodeTree construction;
    TwoNodeTree steiner;
    ComparisonReport report;
    OracleCrossCheck oracle_construction;
    OracleCrossCheck oracle_steiner;
    std::vector<std::string> warnings;
};

/// Closed forms plus oracle cross-checks for a trapezium input.
ComputeResult run_compute(const IsoscelesTrapezium& trap);

/// Same through the trapezium reduction; adds the twist angle and a warning
/// when the shape violates d > max{a12, a34}.
ComputeResult run_compute(const SymmetricTetrahedron& tetra);

std::string render_compute_json(const ComputeResult& result);
std::string render_compute_csv(const ComputeResult& result);

/// CSV sweep over uniform diagonal angles at fixed side lengths, the height
/// back-solved per row. Header:
///   theta_deg,d,w,l_construction,l_steiner,gap,classification
/// Requires 0 < theta_min < theta_max <= 90 (degrees) and steps >= 2.
std::string render_sweep_csv(double a12, double a34, double theta_min_deg, double theta_max_deg,
                             int steps);

}  // namespace steiner4
