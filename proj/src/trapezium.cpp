#include "steiner4/trapezium.hpp"

#include <cmath>
#include <string>

namespace steiner4 {

namespace {

constexpr double kPi = 3.14159265358979323846;

enum class TreeKind { Construction, Steiner };

TwoNodeTree make_axis_tree(const IsoscelesTrapezium& trap, double half_angle_tangent,
                           double weight, TreeKind kind) {
    const double z_top = trap.d() - 0.5 * trap.a12() * half_angle_tangent;
    const double z_bottom = 0.5 * trap.a34() * half_angle_tangent;
    double bridge = z_top - z_bottom;

    const double scale = trap.a12() + trap.a34() + trap.d();
    if (bridge < -1e-12 * scale) {
        const std::string msg = "nodes would cross (bridge " + std::to_string(bridge) + ")";
        if (kind == TreeKind::Construction) throw DegenerateBridgeError("construction tree: " + msg);
        throw TopologyCollapseError("steiner tree: " + msg);
    }
    bridge = std::max(bridge, 0.0);

    TwoNodeTree tree;
    tree.node_top = {0.0, 0.0, z_top};
    tree.node_bottom = {0.0, 0.0, z_bottom};
    tree.weight = weight;
    tree.bridge = bridge;

    const auto v = trap.vertices();
    tree.edge_lengths = {distance(v[0], tree.node_top), distance(v[1], tree.node_top),
                         distance(v[2], tree.node_bottom), distance(v[3], tree.node_bottom)};
    tree.total = tree.edge_lengths[0] + tree.edge_lengths[1] + tree.edge_lengths[2] +
                 tree.edge_lengths[3] + weight * bridge;
    return tree;
}

}  // namespace

IsoscelesTrapezium::IsoscelesTrapezium(double a12, double a34, double d)
    : a12_(a12), a34_(a34), d_(d) {
    if (!std::isfinite(a12) || !std::isfinite(a34) || !std::isfinite(d)) {
        throw InvalidInputError("trapezium parameters must be finite");
    }
    if (!(a12 > 0.0) || !(a34 > 0.0) || !(d > 0.0)) {
        throw InvalidInputError("trapezium parameters must be positive");
    }
}

std::array<Point3, 4> IsoscelesTrapezium::vertices() const {
    return {Point3{-0.5 * a12_, 0.0, d_}, Point3{0.5 * a12_, 0.0, d_},
            Point3{0.5 * a34_, 0.0, 0.0}, Point3{-0.5 * a34_, 0.0, 0.0}};
}

double IsoscelesTrapezium::diagonal_angle() const {
    return 2.0 * std::atan((a12_ + a34_) / (2.0 * d_));
}

double IsoscelesTrapezium::fm12() const { return d_ * a12_ / (a12_ + a34_); }

Point3 IsoscelesTrapezium::diagonal_intersection() const { return {0.0, 0.0, d_ - fm12()}; }

double node_weight(double theta) {
    if (!(theta > 0.0) || !(theta < kPi)) {
        throw InvalidInputError("node_weight requires theta in (0, pi)");
    }
    return 2.0 * std::sin(0.5 * theta);
}

TwoNodeTree construction_tree(const IsoscelesTrapezium& trap) {
    // tan(theta/2) straight from the side lengths; avoids a trig round trip.
    const double t = (trap.a12() + trap.a34()) / (2.0 * trap.d());
    return make_axis_tree(trap, t, node_weight(trap.diagonal_angle()), TreeKind::Construction);
}

TwoNodeTree steiner_tree(const IsoscelesTrapezium& trap) {
    const double tan30 = 1.0 / std::sqrt(3.0);
    return make_axis_tree(trap, tan30, 1.0, TreeKind::Steiner);
}

double evaluate_axis_objective(const IsoscelesTrapezium& trap, double z_top, double z_bottom,
                               double w) {
    const Point3 top{0.0, 0.0, z_top};
    const Point3 bottom{0.0, 0.0, z_bottom};
    const auto v = trap.vertices();
    return distance(v[0], top) + distance(v[1], top) + distance(v[2], bottom) +
           distance(v[3], bottom) + w * std::abs(z_top - z_bottom);
}

}  // namespace steiner4
