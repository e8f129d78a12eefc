#include "steiner4/tetrahedron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace steiner4 {

namespace {

struct EdgePair {
    std::array<int, 2> top;
    std::array<int, 2> bottom;
};

// The three ways to split four vertices into two opposite edges, in
// lexicographic vertex order.
constexpr std::array<EdgePair, 3> kOppositeEdgePairs = {
    EdgePair{{0, 1}, {2, 3}},
    EdgePair{{0, 2}, {1, 3}},
    EdgePair{{0, 3}, {1, 2}},
};

}  // namespace

SymmetricTetrahedron::SymmetricTetrahedron(double x1, double y1, double z1, double x4)
    : x1_(x1), y1_(y1), z1_(z1), x4_(x4) {}

SymmetricTetrahedron SymmetricTetrahedron::from_parameters(double x1, double y1, double z1,
                                                           double x4) {
    if (!std::isfinite(x1) || !std::isfinite(y1) || !std::isfinite(z1) || !std::isfinite(x4)) {
        throw InvalidInputError("tetrahedron parameters must be finite");
    }
    if (!(x4 > 0.0)) throw InvalidInputError("tetrahedron requires x4 > 0");
    if (!(z1 > 0.0)) throw InvalidInputError("tetrahedron requires z1 > 0");
    if (!(std::hypot(x1, y1) > 0.0)) {
        throw InvalidInputError("tetrahedron requires (x1, y1) != (0, 0)");
    }
    // (x1, y1) and (-x1, -y1) describe the same vertex set {A1, A2}.
    if (y1 < 0.0 || (y1 == 0.0 && x1 < 0.0)) {
        x1 = -x1;
        y1 = -y1;
    }
    return SymmetricTetrahedron(x1, y1, z1, x4);
}

SymmetricTetrahedron SymmetricTetrahedron::from_general_vertices(const Point3& a1, const Point3& a2,
                                                                 const Point3& a3, const Point3& a4,
                                                                 double tol) {
    const std::array<Point3, 4> pts = {a1, a2, a3, a4};
    for (const Point3& p : pts) {
        if (!is_finite(p)) throw InvalidInputError("vertices must be finite");
    }

    double diameter = 0.0;
    double min_separation = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double dist = distance(pts[i], pts[j]);
            diameter = std::max(diameter, dist);
            min_separation = std::min(min_separation, dist);
        }
    }
    if (!(min_separation > 0.0)) throw InvalidInputError("vertices must be pairwise distinct");

    // For a qualifying pair the segment joining the midpoints is
    // perpendicular to both edges; the residual is the worst midpoint-segment
    // component along either edge, relative to the diameter. Highly symmetric
    // shapes (a12 = a34) qualify on every pair with residuals at round-off
    // level whose ordering is noise, so selection goes by lexicographic pair
    // index among the qualifying ones, which is isometry-stable.
    int best_pair = -1;
    double best_residual = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
        const EdgePair& pair = kOppositeEdgePairs[k];
        const Point3 u = pts[pair.top[1]] - pts[pair.top[0]];
        const Point3 v = pts[pair.bottom[1]] - pts[pair.bottom[0]];
        const Point3 m = 0.5 * (pts[pair.top[0]] + pts[pair.top[1]]) -
                         0.5 * (pts[pair.bottom[0]] + pts[pair.bottom[1]]);
        if (!(norm(m) > tol * diameter)) continue;  // midpoints coincide: no perpendicular segment
        const double residual =
            std::max(std::abs(dot(m, normalized(u))), std::abs(dot(m, normalized(v)))) / diameter;
        best_residual = std::min(best_residual, residual);
        if (residual <= tol && best_pair < 0) best_pair = k;
    }

    if (best_pair < 0) {
        throw NotBoundarySymmetricError(
            "no opposite-edge pair has its common perpendicular through both midpoints "
            "(best residual " +
            std::to_string(best_residual) + ", tolerance " + std::to_string(tol) + ")");
    }

    const EdgePair& pair = kOppositeEdgePairs[best_pair];
    const Point3 u = pts[pair.top[1]] - pts[pair.top[0]];
    const Point3 v = pts[pair.bottom[1]] - pts[pair.bottom[0]];
    const Point3 m = 0.5 * (pts[pair.top[0]] + pts[pair.top[1]]) -
                     0.5 * (pts[pair.bottom[0]] + pts[pair.bottom[1]]);

    const double edge_top = norm(u);
    const double edge_bottom = norm(v);
    const double dist = norm(m);
    // Unsigned angle between the two edge lines, in [0, pi/2]; isometry- and
    // labeling-invariant, so mirror images canonicalize identically.
    const double c = std::clamp(std::abs(dot(u, v)) / (edge_top * edge_bottom), 0.0, 1.0);
    const double x1 = 0.5 * edge_top * c;
    const double y1 = 0.5 * edge_top * std::sqrt(std::max(0.0, 1.0 - c * c));
    return from_parameters(x1, y1, dist, 0.5 * edge_bottom);
}

bool SymmetricTetrahedron::satisfies_length_assumption() const {
    return d() > std::max(a12(), a34());
}

std::array<Point3, 4> SymmetricTetrahedron::vertices() const {
    return {Point3{-x1_, -y1_, z1_}, Point3{x1_, y1_, z1_}, Point3{x4_, 0.0, 0.0},
            Point3{-x4_, 0.0, 0.0}};
}

double SymmetricTetrahedron::twist_angle() const {
    const double r = std::hypot(x1_, y1_);
    return std::acos(std::clamp(x1_ / r, -1.0, 1.0));
}

IsoscelesTrapezium SymmetricTetrahedron::reduce_to_trapezium() const {
    return IsoscelesTrapezium(a12(), a34(), d());
}

}  // namespace steiner4
