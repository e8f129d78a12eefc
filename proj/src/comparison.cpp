#include "steiner4/comparison.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace steiner4 {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Coefficients of -u^4 + (2 sqrt3 + 8) u^3 + (2 sqrt3 - 8) u + 1, low to high.
std::array<double, 5> quartic_coefficients() {
    const double s3 = std::sqrt(3.0);
    return {1.0, 2.0 * s3 - 8.0, 0.0, 2.0 * s3 + 8.0, -1.0};
}

template <typename T>
T evaluate_poly(const std::array<double, 5>& c, T u) {
    T acc = static_cast<T>(c[4]);
    for (int i = 3; i >= 0; --i) acc = acc * u + static_cast<T>(c[i]);
    return acc;
}

template <typename T>
T evaluate_poly_derivative(const std::array<double, 5>& c, T u) {
    T acc = static_cast<T>(4.0 * c[4]);
    for (int i = 3; i >= 1; --i) acc = acc * u + static_cast<T>(i * c[i]);
    return acc;
}

// Bisection on a bracketing interval, then Newton steps in long double so the
// returned double is the correctly rounded simple root.
double refine_root(const std::array<double, 5>& c, double lo, double hi) {
    double flo = evaluate_poly(c, lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fmid = evaluate_poly(c, mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) != (fmid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    long double u = 0.5L * (static_cast<long double>(lo) + static_cast<long double>(hi));
    for (int it = 0; it < 6; ++it) {
        const long double f = evaluate_poly(c, u);
        const long double df = evaluate_poly_derivative(c, u);
        if (df == 0.0L) break;
        u -= f / df;
    }
    // Pick the neighboring double with the smallest long-double residual.
    double best = static_cast<double>(u);
    long double best_abs = std::abs(evaluate_poly(c, static_cast<long double>(best)));
    for (double cand : {std::nextafter(best, -1e30), std::nextafter(best, 1e30)}) {
        const long double r = std::abs(evaluate_poly(c, static_cast<long double>(cand)));
        if (r < best_abs) {
            best_abs = r;
            best = cand;
        }
    }
    return best;
}

}  // namespace

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::ConstructionShorter: return "ConstructionShorter";
        case Classification::Equal: return "Equal";
        case Classification::SteinerShorter: return "SteinerShorter";
    }
    return "Unknown";
}

double gap_formula(double theta, double a12, double a34) {
    if (!(theta > 0.0) || !(theta < kPi)) {
        throw InvalidInputError("gap_formula requires theta in (0, pi)");
    }
    const double h = 0.5 * theta;
    return (a12 + a34) * (0.5 * std::sqrt(3.0) + 0.5 * std::cos(h) / std::sin(h) -
                          2.0 * std::cos(h));
}

ComparisonReport compare(const IsoscelesTrapezium& trap) {
    ComparisonReport report;
    report.theta = trap.diagonal_angle();
    report.l_construction = construction_tree(trap).total;
    report.l_steiner = steiner_tree(trap).total;
    report.gap = gap_formula(report.theta, trap.a12(), trap.a34());

    const double tol = 1e-9 * (trap.a12() + trap.a34());
    if (report.gap > tol) {
        report.classification = Classification::ConstructionShorter;
    } else if (report.gap < -tol) {
        report.classification = Classification::SteinerShorter;
    } else {
        report.classification = Classification::Equal;
    }
    return report;
}

Classification classify(double theta) {
    constexpr double tol = 1e-9;
    if (!(theta > 0.0) || theta > 0.5 * kPi + tol) {
        throw InvalidInputError("classify requires theta in (0, pi/2]");
    }
    const double boundary = kPi / 3.0;
    if (std::abs(theta - boundary) <= tol) return Classification::Equal;
    return theta < boundary ? Classification::ConstructionShorter : Classification::SteinerShorter;
}

namespace {

CrossoverAnalysis solve_crossover_quartic() {
    const auto c = quartic_coefficients();

    // Cauchy bound: every root has |u| < 1 + max |c_i / c_4|.
    double bound = 0.0;
    for (int i = 0; i < 4; ++i) bound = std::max(bound, std::abs(c[i] / c[4]));
    bound += 1.0;

    CrossoverAnalysis analysis;
    const int cells = 200000;
    double prev_u = -bound;
    double prev_f = evaluate_poly(c, prev_u);
    for (int i = 1; i <= cells; ++i) {
        const double u = -bound + 2.0 * bound * static_cast<double>(i) / cells;
        const double f = evaluate_poly(c, u);
        if (f == 0.0) {
            analysis.real_roots.push_back(u);
        } else if ((prev_f < 0.0) != (f < 0.0)) {
            analysis.real_roots.push_back(refine_root(c, prev_u, u));
        }
        prev_u = u;
        prev_f = f;
    }
    std::sort(analysis.real_roots.begin(), analysis.real_roots.end());

    // theta = 4 atan(u) lands in (0, 90] degrees exactly for u in (0, tan(pi/8)].
    const double u_max = std::tan(kPi / 8.0);
    int admissible = 0;
    for (double u : analysis.real_roots) {
        if (u > 0.0 && u < u_max) {
            analysis.unit_root = u;
            ++admissible;
        }
    }
    if (admissible != 1) {
        throw Error("crossover quartic: expected exactly one admissible root, found " +
                    std::to_string(admissible));
    }
    analysis.crossover_theta = 4.0 * std::atan(analysis.unit_root);
    return analysis;
}

}  // namespace

CrossoverAnalysis crossover_quartic_roots() {
    static const CrossoverAnalysis cached = solve_crossover_quartic();
    return cached;
}

double stationary_angle() { return 2.0 * std::asin(std::cbrt(0.25)); }

RectangleLengths rectangle_lengths(double a12, double d) {
    if (!(a12 > 0.0) || !(d > 0.0) || !std::isfinite(a12) || !std::isfinite(d)) {
        throw InvalidInputError("rectangle_lengths requires positive finite a12, d");
    }
    RectangleLengths lengths;
    lengths.l_construction = 4.0 * a12 * d / std::hypot(d, a12);
    // a12 (sqrt(3) + cot(theta/2)) with tan(theta/2) = a12 / d.
    lengths.l_steiner = a12 * std::sqrt(3.0) + d;
    return lengths;
}

SquareLengths square_lengths(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw InvalidInputError("square_lengths requires positive finite a");
    }
    return {2.0 * std::sqrt(2.0) * a, (std::sqrt(3.0) + 1.0) * a, Classification::SteinerShorter};
}

}  // namespace steiner4
