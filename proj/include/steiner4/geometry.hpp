#pragma once

#include <algorithm>
#include <cmath>

#include "steiner4/errors.hpp"

namespace steiner4 {

/// A point (or displacement) in 3D Euclidean space.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator*(double s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Point3 operator*(const Point3& a, double s) { return s * a; }
inline Point3 operator/(const Point3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Point3 operator-(const Point3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

inline bool is_finite(const Point3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Euclidean distance between two points.
inline double distance(const Point3& p, const Point3& q) { return norm(p - q); }

/// Unit vector along a; throws InvalidInputError on a zero or non-finite input.
inline Point3 normalized(const Point3& a) {
    const double n = norm(a);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidInputError("cannot normalize a zero or non-finite vector");
    }
    return a / n;
}

/// Angle between two nonzero vectors, in [0, pi]. The cosine argument is
/// clamped to [-1, 1] so nearly parallel or antiparallel inputs cannot
/// produce NaN from round-off.
inline double angle_between(const Point3& u, const Point3& v) {
    const double nu = norm(u);
    const double nv = norm(v);
    if (!(nu > 0.0) || !(nv > 0.0)) {
        throw InvalidInputError("angle_between requires nonzero vectors");
    }
    const double c = std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
    return std::acos(c);
}

/// An oriented line: a point on it plus a unit direction.
class Axis {
public:
    Axis(const Point3& origin, const Point3& direction)
        : origin_(origin), direction_(normalized(direction)) {
        if (!is_finite(origin)) throw InvalidInputError("axis origin must be finite");
    }

    static Axis z_axis() { return Axis({0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}); }

    const Point3& origin() const { return origin_; }
    const Point3& direction() const { return direction_; }

private:
    Point3 origin_;
    Point3 direction_;
};

/// Rotates p about the axis by angle radians, right-handed about the axis
/// direction (Rodrigues). Points on the axis are fixed; distances to the
/// axis are preserved.
inline Point3 rotate_about_axis(const Point3& p, const Axis& axis, double angle) {
    const Point3& k = axis.direction();
    const Point3 v = p - axis.origin();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point3 rotated = c * v + s * cross(k, v) + ((1.0 - c) * dot(k, v)) * k;
    return axis.origin() + rotated;
}

}  // namespace steiner4
