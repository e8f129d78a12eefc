#pragma once

#include <string_view>
#include <vector>

#include "steiner4/trapezium.hpp"

namespace steiner4 {

enum class Classification { ConstructionShorter, Equal, SteinerShorter };

std::string_view to_string(Classification c);

struct ComparisonReport {
    double theta = 0.0;  // radians
    double l_construction = 0.0;
    double l_steiner = 0.0;
    double gap = 0.0;  // l_steiner - l_construction
    Classification classification = Classification::Equal;
};

/// Closed form for the gap between the two totals:
/// (a12 + a34) (sqrt(3)/2 + cot(theta/2)/2 - 2 cos(theta/2)).
double gap_formula(double theta, double a12, double a34);

/// Builds both trees and reports their totals, the gap and its sign
/// classification. |gap| <= 1e-9 (a12 + a34) counts as Equal (the gap is
/// homogeneous of degree 1 in the lengths).
ComparisonReport compare(const IsoscelesTrapezium& trap);

/// Angle-only classification on (0, 90] degrees: the construction tree is
/// shorter below 60 degrees, the Steiner tree above; boundary tolerance
/// 1e-9 rad. Throws InvalidInputError outside the range.
Classification classify(double theta);

struct CrossoverAnalysis {
    /// All real roots of -u^4 + (2 sqrt3 + 8) u^3 + (2 sqrt3 - 8) u + 1,
    /// ascending. Substituting u = tan(theta/4) turns gap(theta) = 0 into
    /// this quartic.
    std::vector<double> real_roots;
    /// The unique root in (0, tan(pi/8)), i.e. the only one whose angle
    /// theta = 4 atan(u) falls in the analyzed range. Equals 2 - sqrt(3).
    double unit_root = 0.0;
    /// 4 atan(unit_root): the crossover angle, 60 degrees.
    double crossover_theta = 0.0;
};

/// Solves the crossover quartic by a sign-change scan over the Cauchy root
/// bound followed by bisection and a long-double Newton polish.
CrossoverAnalysis crossover_quartic_roots();

/// The angle where the gap is stationary: sin^3(theta/2) = 1/4, i.e.
/// 2 asin(4^(-1/3)), about 78.094 degrees. The gap decreases before it and
/// increases after it on (0, 90] degrees.
double stationary_angle();

struct RectangleLengths {
    double l_construction = 0.0;
    double l_steiner = 0.0;
};

/// Closed forms for the rectangle a12 = a34 with height d:
/// construction 4 a12 d / sqrt(d^2 + a12^2), Steiner a12 sqrt(3) + d
/// (that is a12 (sqrt(3) + cot(theta/2)) with tan(theta/2) = a12 / d).
RectangleLengths rectangle_lengths(double a12, double d);

struct SquareLengths {
    double l_construction = 0.0;
    double l_steiner = 0.0;
    Classification classification = Classification::SteinerShorter;
};

/// Square of side a: the construction tree degenerates to the two diagonals
/// through the center, length 2 sqrt(2) a; the Steiner tree has length
/// (sqrt(3) + 1) a and is strictly shorter.
SquareLengths square_lengths(double a);

}  // namespace steiner4
