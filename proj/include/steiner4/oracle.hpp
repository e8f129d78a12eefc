#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "steiner4/geometry.hpp"
#include "steiner4/trapezium.hpp"

namespace steiner4 {

/// Four weighted terminals plus a node-to-node bridge weight. Terminals 0
/// and 1 attach to the top node, terminals 2 and 3 to the bottom node, and
/// the objective is
///
///   sum_i w_i |T_i - node(i)| + bridge_weight |node_top - node_bottom|.
struct NetworkProblem {
    std::array<Point3, 4> terminals{};
    std::array<double, 4> terminal_weights{1.0, 1.0, 1.0, 1.0};
    double bridge_weight = 1.0;
};

/// Strict triangle inequalities |Bi - Bj| < Bk < Bi + Bj over the weight
/// triples {B1, B4, bridge} and {B2, B3, bridge}. Interior two-node
/// minimizers exist exactly under these; with unit terminal weights they
/// reduce to bridge_weight in (0, 2).
bool weights_admissible(const NetworkProblem& prob);

/// Objective value for the given node pair.
double network_objective(const NetworkProblem& prob, const Point3& node_top,
                         const Point3& node_bottom);

struct OracleResult {
    Point3 node_top;
    Point3 node_bottom;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    double gradient_residual = 0.0;
};

struct FtOptions {
    /// Stop when the weighted unit-vector imbalance drops below this.
    double residual_tol = 1e-12;
    int max_iterations = 100000;
};

/// Weighted geometric median: minimizes sum_i w_i |x - p_i| by fixed-point
/// reweighting. A vertex i absorbs the minimizer when the pull of the other
/// points, |sum_{j != i} w_j u_j|, does not exceed w_i; that vertex is then
/// returned directly. An iterate landing on a point is displaced by 1e-12
/// (of the point-set diameter) along the previous step direction. Throws
/// NonConvergenceError when the iteration budget runs out.
Point3 geometric_median(std::span<const Point3> points, std::span<const double> weights,
                        const FtOptions& options = {});

/// Weighted Fermat-Torricelli point of a triangle; three-point front end of
/// geometric_median.
Point3 weighted_ft_point(const Point3& p1, const Point3& p2, const Point3& p3, double w1,
                         double w2, double w3, const FtOptions& options = {});

struct MinimizeOptions {
    /// Converged once the objective decrease falls below this (relative to
    /// the objective) AND the node step falls below step_tol; both scaled by
    /// max(1, terminal diameter) where dimensional.
    double relative_decrease_tol = 1e-13;
    double step_tol = 1e-12;
    int max_iterations = 100000;
    /// Central-difference step for the reported gradient residual, scaled by
    /// max(1, terminal diameter).
    double fd_step = 1e-7;
    /// Override for the default start (the one-third and two-third points of
    /// the segment joining the two edge midpoints).
    std::optional<std::pair<Point3, Point3>> initial_nodes;
    FtOptions inner;
};

/// Minimizes the two-node objective directly by alternating exact single-node
/// solves (each node is the weighted Fermat-Torricelli point of its two
/// terminals and the other node). With constrain_to_axis the nodes are
/// restricted to the segment between the edge midpoints M12 and M34.
/// Deterministic given the initialization; the objective never increases
/// between iterations. Throws NonConvergenceError when the budget runs out.
OracleResult minimize_two_node_network(const NetworkProblem& prob, bool constrain_to_axis = false,
                                       const MinimizeOptions& options = {});

enum class PlanarTopology { PairTopBottom = 0, PairLeftRight = 1, SingleNode = 2 };

std::string_view to_string(PlanarTopology t);

struct PlanarSteinerResult {
    double length = 0.0;
    PlanarTopology topology = PlanarTopology::PairTopBottom;
    /// Candidate lengths indexed by PlanarTopology.
    std::array<double, 3> lengths{};
    OracleResult best;
};

/// Best unweighted network for four coplanar terminals (given in the order
/// A1, A2, A3, A4) among the two full two-node topologies, pairing (A1 A2)
/// with (A3 A4) or (A1 A4) with (A2 A3), and the degenerate single-node
/// star.
PlanarSteinerResult full_steiner_4pt_planar(const std::array<Point3, 4>& quad);

/// Largest weighted unit-vector imbalance over the two nodes of a tree whose
/// terminals are given in the order A1', A2', A3, A4; the bridge direction
/// enters with the tree's weight. With a zero bridge the coincident nodes are
/// treated as one junction of all four terminals. Nodes must not coincide
/// with terminals.
double first_order_residual(const TwoNodeTree& tree, const std::array<Point3, 4>& terminals);

/// Norm of the central finite-difference gradient of the objective at the
/// given nodes; step fd_step * max(1, terminal diameter).
double objective_gradient_residual(const NetworkProblem& prob, const Point3& node_top,
                                   const Point3& node_bottom, double fd_step = 1e-7);

}  // namespace steiner4
