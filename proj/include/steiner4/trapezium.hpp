#pragma once

#include <array>

#include "steiner4/geometry.hpp"

namespace steiner4 {

/// Isosceles trapezium in the y = 0 plane with both parallel sides centered
/// on the z axis:
///
///   A1' = (-a12/2, 0, d)    A2' = (a12/2, 0, d)
///   A4  = (-a34/2, 0, 0)    A3  = (a34/2, 0, 0)
///
/// The diagonals A1'A3 and A2'A4 are equal and meet on the axis.
class IsoscelesTrapezium {
public:
    IsoscelesTrapezium(double a12, double a34, double d);

    double a12() const { return a12_; }
    double a34() const { return a34_; }
    double d() const { return d_; }

    /// Terminals in the order A1', A2', A3, A4.
    std::array<Point3, 4> vertices() const;

    /// Angle theta between the diagonals at their intersection, defined by
    /// tan(theta/2) = (a12 + a34) / (2 d). Lies in (0, pi).
    double diagonal_angle() const;

    /// Intersection point F of the two diagonals (on the z axis).
    Point3 diagonal_intersection() const;

    /// Distance from F to the top midpoint M12 = (0, 0, d):
    /// d * a12 / (a12 + a34).
    double fm12() const;

private:
    double a12_;
    double a34_;
    double d_;
};

/// Interior-node weight w(theta) = 2 sin(theta/2). Defined for theta in
/// (0, pi); the result lies in (0, 2), which is exactly the admissible range
/// for a bridge weight between unit terminal weights.
double node_weight(double theta);

/// A network with two interior nodes on the axis: node_top joins A1' and A2',
/// node_bottom joins A3 and A4, and the bridge between the nodes enters the
/// total with the given weight.
struct TwoNodeTree {
    Point3 node_top;
    Point3 node_bottom;
    double weight = 1.0;
    /// |A1' node_top|, |A2' node_top|, |A3 node_bottom|, |A4 node_bottom|.
    std::array<double, 4> edge_lengths{};
    double bridge = 0.0;
    /// Sum of the four edges plus weight * bridge.
    double total = 0.0;
};

/// The weighted two-node tree whose nodes sit at offsets (a/2) tan(theta/2)
/// from the side midpoints, with bridge weight 2 sin(theta/2). The node
/// angles toward the adjacent side are 180 - theta degrees and the total
/// length is 2 (a12 + a34) cos(theta/2).
///
/// At theta = 90 deg the nodes coincide (bridge 0); beyond that they would
/// cross and DegenerateBridgeError is thrown.
TwoNodeTree construction_tree(const IsoscelesTrapezium& trap);

/// The full Steiner tree: both nodes on the axis at offsets (a/2) tan(30 deg)
/// with unit bridge weight and 120-degree incidences. Total length is
/// (a12 + a34) (sqrt(3)/2 + cot(theta/2)/2). Throws TopologyCollapseError
/// when the nodes would cross (theta > 120 deg).
TwoNodeTree steiner_tree(const IsoscelesTrapezium& trap);

/// Network objective for nodes (0,0,z_top), (0,0,z_bottom) with bridge
/// weight w: the four terminal-node distances plus w * |z_top - z_bottom|.
double evaluate_axis_objective(const IsoscelesTrapezium& trap, double z_top, double z_bottom,
                               double w);

}  // namespace steiner4
