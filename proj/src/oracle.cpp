#include "steiner4/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steiner4 {

namespace {

double point_set_diameter(std::span<const Point3> points) {
    double diameter = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            diameter = std::max(diameter, distance(points[i], points[j]));
        }
    }
    return diameter;
}

bool triple_admissible(double a, double b, double c) {
    return std::abs(a - b) < c && c < a + b && std::abs(a - c) < b && b < a + c &&
           std::abs(b - c) < a && a < b + c;
}

// Solves min_s  w0 |t0 - X(s)| + w1 |t1 - X(s)| + wb |other - X(s)| for
// X(s) = origin + s * dir, s in [0, length], by bisection on the monotone
// subgradient of the convex section.
Point3 solve_on_segment(const Point3& t0, const Point3& t1, const Point3& other, double w0,
                        double w1, double wb, const Point3& origin, const Point3& dir,
                        double length) {
    const auto slope = [&](double s) {
        const Point3 x = origin + s * dir;
        double g = 0.0;
        const std::array<const Point3*, 3> pts = {&t0, &t1, &other};
        const std::array<double, 3> w = {w0, w1, wb};
        for (int i = 0; i < 3; ++i) {
            const Point3 diff = x - *pts[i];
            const double dist = norm(diff);
            if (dist > 0.0) g += w[i] * dot(diff, dir) / dist;
        }
        return g;
    };

    double lo = 0.0;
    double hi = length;
    if (slope(lo) >= 0.0) return origin;
    if (slope(hi) <= 0.0) return origin + length * dir;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (slope(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return origin + (0.5 * (lo + hi)) * dir;
}

}  // namespace

bool weights_admissible(const NetworkProblem& prob) {
    const auto& w = prob.terminal_weights;
    for (double v : w) {
        if (!(v > 0.0) || !std::isfinite(v)) return false;
    }
    if (!(prob.bridge_weight > 0.0) || !std::isfinite(prob.bridge_weight)) return false;
    return triple_admissible(w[0], w[3], prob.bridge_weight) &&
           triple_admissible(w[1], w[2], prob.bridge_weight);
}

double network_objective(const NetworkProblem& prob, const Point3& node_top,
                         const Point3& node_bottom) {
    const auto& t = prob.terminals;
    const auto& w = prob.terminal_weights;
    return w[0] * distance(t[0], node_top) + w[1] * distance(t[1], node_top) +
           w[2] * distance(t[2], node_bottom) + w[3] * distance(t[3], node_bottom) +
           prob.bridge_weight * distance(node_top, node_bottom);
}

Point3 geometric_median(std::span<const Point3> points, std::span<const double> weights,
                        const FtOptions& options) {
    const std::size_t n = points.size();
    if (n == 0 || weights.size() != n) {
        throw InvalidInputError("geometric_median: need one positive weight per point");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_finite(points[i])) throw InvalidInputError("geometric_median: non-finite point");
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
            throw InvalidInputError("geometric_median: weights must be positive");
        }
    }

    const double diameter = point_set_diameter(points);
    if (diameter == 0.0) return points[0];
    const double scale = std::max(1.0, diameter);

    // Vertex absorption: the minimizer is p_i when the pull of the others
    // does not exceed w_i. Coincident points fold their weight into w_i.
    for (std::size_t i = 0; i < n; ++i) {
        Point3 pull{};
        double anchor_weight = weights[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Point3 diff = points[j] - points[i];
            const double dist = norm(diff);
            if (dist == 0.0) {
                anchor_weight += weights[j];
            } else {
                pull = pull + (weights[j] / dist) * diff;
            }
        }
        if (norm(pull) <= anchor_weight * (1.0 + 1e-12) + 1e-15) return points[i];
    }

    // Fixed-point reweighting from the weighted centroid.
    double weight_sum = 0.0;
    Point3 x{};
    for (std::size_t i = 0; i < n; ++i) {
        x = x + weights[i] * points[i];
        weight_sum += weights[i];
    }
    x = x / weight_sum;

    Point3 last_step{1.0, 0.0, 0.0};
    for (int it = 1; it <= options.max_iterations; ++it) {
        Point3 numerator{};
        double denominator = 0.0;
        Point3 imbalance{};
        bool on_point = false;
        for (std::size_t i = 0; i < n; ++i) {
            const Point3 diff = points[i] - x;
            const double dist = norm(diff);
            if (dist == 0.0) {
                on_point = true;
                break;
            }
            numerator = numerator + (weights[i] / dist) * points[i];
            denominator += weights[i] / dist;
            imbalance = imbalance + (weights[i] / dist) * diff;
        }
        if (on_point) {
            x = x + (1e-12 * scale) * normalized(last_step);
            continue;
        }
        if (norm(imbalance) < options.residual_tol) return x;
        const Point3 next = numerator / denominator;
        last_step = next - x;
        // Step at the double-precision floor: a fixed point for this format.
        if (norm(last_step) < 1e-16 * scale) return next;
        x = next;
    }
    throw NonConvergenceError("geometric_median: no convergence within " +
                              std::to_string(options.max_iterations) + " iterations");
}

Point3 weighted_ft_point(const Point3& p1, const Point3& p2, const Point3& p3, double w1,
                         double w2, double w3, const FtOptions& options) {
    const std::array<Point3, 3> pts = {p1, p2, p3};
    const std::array<double, 3> w = {w1, w2, w3};
    return geometric_median(pts, w, options);
}

OracleResult minimize_two_node_network(const NetworkProblem& prob, bool constrain_to_axis,
                                       const MinimizeOptions& options) {
    if (!weights_admissible(prob)) {
        throw InvalidInputError(
            "minimize_two_node_network: weights violate the strict triangle inequalities");
    }
    for (const Point3& t : prob.terminals) {
        if (!is_finite(t)) throw InvalidInputError("minimize_two_node_network: non-finite terminal");
    }

    const auto& t = prob.terminals;
    const auto& w = prob.terminal_weights;
    const Point3 m12 = 0.5 * (t[0] + t[1]);
    const Point3 m34 = 0.5 * (t[2] + t[3]);
    const double diameter = point_set_diameter(t);
    const double scale = std::max(1.0, diameter);

    const double axis_length = distance(m12, m34);
    Point3 axis_dir{0.0, 0.0, 1.0};
    if (constrain_to_axis) {
        if (!(axis_length > 0.0)) {
            throw InvalidInputError("constrain_to_axis: the edge midpoints coincide");
        }
        axis_dir = (m12 - m34) / axis_length;
    }

    Point3 top = m34 + (2.0 / 3.0) * (m12 - m34);
    Point3 bottom = m34 + (1.0 / 3.0) * (m12 - m34);
    if (options.initial_nodes) {
        top = options.initial_nodes->first;
        bottom = options.initial_nodes->second;
    }

    double value = network_objective(prob, top, bottom);
    OracleResult result;
    for (int it = 1; it <= options.max_iterations; ++it) {
        Point3 new_top;
        Point3 new_bottom;
        if (constrain_to_axis) {
            new_top = solve_on_segment(t[0], t[1], bottom, w[0], w[1], prob.bridge_weight, m34,
                                       axis_dir, axis_length);
            new_bottom = solve_on_segment(t[2], t[3], new_top, w[2], w[3], prob.bridge_weight, m34,
                                          axis_dir, axis_length);
        } else {
            new_top = weighted_ft_point(t[0], t[1], bottom, w[0], w[1], prob.bridge_weight,
                                        options.inner);
            new_bottom = weighted_ft_point(t[2], t[3], new_top, w[2], w[3], prob.bridge_weight,
                                           options.inner);
        }
        const double new_value = network_objective(prob, new_top, new_bottom);
        const double step = std::max(distance(new_top, top), distance(new_bottom, bottom));
        const double decrease = value - new_value;
        top = new_top;
        bottom = new_bottom;
        value = new_value;
        result.iterations = it;
        if (decrease < options.relative_decrease_tol * std::max(1.0, std::abs(new_value)) &&
            step < options.step_tol * scale) {
            result.converged = true;
            break;
        }
    }
    if (!result.converged) {
        throw NonConvergenceError("minimize_two_node_network: no convergence within " +
                                  std::to_string(options.max_iterations) + " iterations");
    }

    result.node_top = top;
    result.node_bottom = bottom;
    result.value = value;
    result.gradient_residual =
        objective_gradient_residual(prob, top, bottom, options.fd_step);
    result.converged = result.gradient_residual < 1e-6;
    return result;
}

std::string_view to_string(PlanarTopology t) {
    switch (t) {
        case PlanarTopology::PairTopBottom: return "PairTopBottom";
        case PlanarTopology::PairLeftRight: return "PairLeftRight";
        case PlanarTopology::SingleNode: return "SingleNode";
    }
    return "Unknown";
}

PlanarSteinerResult full_steiner_4pt_planar(const std::array<Point3, 4>& quad) {
    const double diameter = point_set_diameter(quad);
    if (!(diameter > 0.0)) throw InvalidInputError("full_steiner_4pt_planar: degenerate terminals");
    const Point3 n = cross(quad[1] - quad[0], quad[2] - quad[0]);
    if (norm(n) > 0.0 &&
        std::abs(dot(quad[3] - quad[0], normalized(n))) > 1e-9 * diameter) {
        throw InvalidInputError("full_steiner_4pt_planar: terminals are not coplanar");
    }

    NetworkProblem vertical;
    vertical.terminals = quad;
    NetworkProblem horizontal;
    horizontal.terminals = {quad[0], quad[3], quad[1], quad[2]};

    const OracleResult res_vertical = minimize_two_node_network(vertical);
    const OracleResult res_horizontal = minimize_two_node_network(horizontal);

    const std::array<double, 4> unit_weights = {1.0, 1.0, 1.0, 1.0};
    const Point3 hub = geometric_median(quad, unit_weights);
    double star_length = 0.0;
    for (const Point3& q : quad) star_length += distance(q, hub);

    PlanarSteinerResult result;
    result.lengths = {res_vertical.value, res_horizontal.value, star_length};
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (result.lengths[i] < result.lengths[best]) best = i;
    }
    result.topology = static_cast<PlanarTopology>(best);
    result.length = result.lengths[best];
    switch (result.topology) {
        case PlanarTopology::PairTopBottom: result.best = res_vertical; break;
        case PlanarTopology::PairLeftRight: result.best = res_horizontal; break;
        case PlanarTopology::SingleNode: {
            OracleResult star;
            star.node_top = hub;
            star.node_bottom = hub;
            star.value = star_length;
            star.converged = true;
            result.best = star;
            break;
        }
    }
    return result;
}

double first_order_residual(const TwoNodeTree& tree, const std::array<Point3, 4>& terminals) {
    const auto unit_toward = [](const Point3& target, const Point3& from) {
        const Point3 diff = target - from;
        const double dist = norm(diff);
        if (!(dist > 0.0)) {
            throw InvalidInputError("first_order_residual: node coincides with a terminal");
        }
        return diff / dist;
    };

    if (tree.bridge > 0.0) {
        const Point3 bridge_dir = (tree.node_bottom - tree.node_top) / tree.bridge;
        const Point3 top_balance = unit_toward(terminals[0], tree.node_top) +
                                   unit_toward(terminals[1], tree.node_top) +
                                   tree.weight * bridge_dir;
        const Point3 bottom_balance = unit_toward(terminals[2], tree.node_bottom) +
                                      unit_toward(terminals[3], tree.node_bottom) -
                                      tree.weight * bridge_dir;
        return std::max(norm(top_balance), norm(bottom_balance));
    }

    // Coincident nodes act as a single junction of all four terminals.
    Point3 balance{};
    for (const Point3& t : terminals) balance = balance + unit_toward(t, tree.node_top);
    return norm(balance);
}

double objective_gradient_residual(const NetworkProblem& prob, const Point3& node_top,
                                   const Point3& node_bottom, double fd_step) {
    const double h = fd_step * std::max(1.0, point_set_diameter(prob.terminals));
    std::array<double, 6> coords = {node_top.x,    node_top.y,    node_top.z,
                                    node_bottom.x, node_bottom.y, node_bottom.z};
    const auto eval = [&](const std::array<double, 6>& c) {
        return network_objective(prob, {c[0], c[1], c[2]}, {c[3], c[4], c[5]});
    };
    double sum_sq = 0.0;
    for (int i = 0; i < 6; ++i) {
        std::array<double, 6> plus = coords;
        std::array<double, 6> minus = coords;
        plus[i] += h;
        minus[i] -= h;
        const double g = (eval(plus) - eval(minus)) / (2.0 * h);
        sum_sq += g * g;
    }
    return std::sqrt(sum_sq);
}

}  // namespace steiner4
