#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace steiner4 {

/// Outcome of one verification check. `observed` is the worst measured
/// residual (or margin, for checks that must exceed a bound) and `threshold`
/// the bound it was compared against.
struct CheckResult {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double threshold = 0.0;
    std::string detail;
};

/// Square and rectangle closed forms against their frozen values and against
/// the general trapezium formulas.
CheckResult check_square_rectangle_goldens();

/// The crossover quartic: root inventory, the admissible root against
/// 2 - sqrt(3) and its printed reference value, and the 60-degree crossover.
CheckResult check_crossover_quartic();

/// The stationary angle: defining equation, window, vanishing derivative and
/// grid monotonicity of the gap around it.
CheckResult check_stationary_angle();

/// Closed-form gap against the difference of the two tree totals on random
/// trapezia; tolerance 1e-10 relative to a12 + a34.
CheckResult check_gap_identity(int cases, std::uint64_t seed);

/// Free 3D minimization against the closed forms on random trapezia: values
/// within rel_tol, construction nodes within 1e-6 of the closed-form
/// positions, Steiner node angles within 1e-6 rad of 120 degrees.
CheckResult check_oracle_equivalence(int cases, std::uint64_t seed, double rel_tol);

/// Free 3D minimization on random symmetric tetrahedra against the reduced
/// trapezium's closed form; nodes must come back to the axis.
CheckResult check_reduction_certification(int cases, std::uint64_t seed, double rel_tol);

/// Weighted force balance at the nodes of both closed-form trees on random
/// trapezia; residual below 1e-10.
CheckResult check_first_order_balance(int cases, std::uint64_t seed);

/// Gap sign over the 1-degree grid: positive strictly below 60 degrees,
/// negative strictly above, single sign change.
CheckResult check_sign_pattern();

/// Negative control: scaling the bridge weight by 1.01 must break the force
/// balance (residual above 1e-4 on every random case).
CheckResult check_negative_control(int cases, std::uint64_t seed);

struct VerifyOptions {
    int cases = 200;
    std::uint64_t seed = 42;
    double oracle_rel_tol = 1e-6;
};

/// Runs the full verification suite in a fixed order. Case counts for the
/// cheap statistical checks scale with options.cases.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace steiner4
