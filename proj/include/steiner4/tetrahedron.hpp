#pragma once

#include <array>

#include "steiner4/geometry.hpp"
#include "steiner4/trapezium.hpp"

namespace steiner4 {

/// A tetrahedron whose opposite edges A1A2 and A4A3 have a common
/// perpendicular through both midpoints, held in the canonical frame
///
///   A1 = (-x1, -y1, z1)   A2 = (x1, y1, z1)
///   A4 = (-x4,   0,  0)   A3 = (x4,  0,  0)
///
/// so M34 is the origin and M12 = (0, 0, z1) sits on the z axis. Derived
/// lengths: a12 = 2 sqrt(x1^2 + y1^2), a34 = 2 x4, d = z1.
class SymmetricTetrahedron {
public:
    /// Builds from canonical parameters. Requires x4 > 0, z1 > 0 and
    /// (x1, y1) != (0, 0); the sign pair (x1, y1) is normalized to y1 >= 0
    /// (and x1 > 0 when y1 = 0), which names the same four-point set.
    static SymmetricTetrahedron from_parameters(double x1, double y1, double z1, double x4);

    /// Finds the opposite-edge pair whose common perpendicular passes through
    /// both midpoints (residual relative to the diameter at most tol) and
    /// rigid-motions the tetrahedron into the canonical frame. When several
    /// pairs qualify the one with the smallest residual wins, ties broken by
    /// lexicographic vertex index. Throws NotBoundarySymmetricError when no
    /// pair qualifies.
    static SymmetricTetrahedron from_general_vertices(const Point3& a1, const Point3& a2,
                                                      const Point3& a3, const Point3& a4,
                                                      double tol = 1e-9);

    double x1() const { return x1_; }
    double y1() const { return y1_; }
    double z1() const { return z1_; }
    double x4() const { return x4_; }

    double a12() const { return 2.0 * std::hypot(x1_, y1_); }
    double a34() const { return 2.0 * x4_; }
    double d() const { return z1_; }

    /// False when d <= max{a12, a34}. Such shapes are still accepted and
    /// computable (the square needs theta = 90 deg), but callers may want to
    /// surface a warning.
    bool satisfies_length_assumption() const;

    /// Canonical vertices in the order A1, A2, A3, A4.
    std::array<Point3, 4> vertices() const;

    /// Twist angle between the directed edges A2 - A1 and A3 - A4:
    /// arccos(x1 / sqrt(x1^2 + y1^2)), in [0, pi). Zero exactly when the four
    /// vertices are coplanar.
    double twist_angle() const;

    /// Rotating A1A2 about the axis by the twist angle flattens the
    /// configuration; the result is determined by the lengths alone:
    /// (a12, a34, d). Distances from the axis and hence every axis-node
    /// objective value are preserved.
    IsoscelesTrapezium reduce_to_trapezium() const;

private:
    SymmetricTetrahedron(double x1, double y1, double z1, double x4);

    double x1_;
    double y1_;
    double z1_;
    double x4_;
};

}  // namespace steiner4
