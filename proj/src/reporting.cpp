#include "steiner4/reporting.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace steiner4 {

namespace {

constexpr double kPi = 3.14159265358979323846;

double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

std::string json_point(const Point3& p) {
    return "[" + format_number(p.x) + ", " + format_number(p.y) + ", " + format_number(p.z) + "]";
}

OracleCrossCheck cross_check(const IsoscelesTrapezium& trap, double bridge_weight,
                             double closed_form_total) {
    NetworkProblem prob;
    prob.terminals = trap.vertices();
    prob.bridge_weight = bridge_weight;
    const OracleResult res = minimize_two_node_network(prob);

    OracleCrossCheck out;
    out.value = res.value;
    out.rel_error = std::abs(res.value - closed_form_total) / closed_form_total;
    out.gradient_residual = res.gradient_residual;
    out.iterations = res.iterations;
    out.converged = res.converged;
    return out;
}

void append_tree_json(std::ostringstream& os, const char* key, const TwoNodeTree& tree,
                      const char* indent) {
    os << indent << "\"" << key << "\": {\n";
    os << indent << "  \"node_top\": " << json_point(tree.node_top) << ",\n";
    os << indent << "  \"node_bottom\": " << json_point(tree.node_bottom) << ",\n";
    os << indent << "  \"edge_lengths\": [" << format_number(tree.edge_lengths[0]) << ", "
       << format_number(tree.edge_lengths[1]) << ", " << format_number(tree.edge_lengths[2])
       << ", " << format_number(tree.edge_lengths[3]) << "],\n";
    os << indent << "  \"bridge\": " << format_number(tree.bridge) << ",\n";
    os << indent << "  \"weight\": " << format_number(tree.weight) << ",\n";
    os << indent << "  \"total\": " << format_number(tree.total) << "\n";
    os << indent << "}";
}

void append_oracle_json(std::ostringstream& os, const char* key, const OracleCrossCheck& oracle,
                        const char* indent) {
    os << indent << "\"" << key << "\": {\n";
    os << indent << "  \"value\": " << format_number(oracle.value) << ",\n";
    os << indent << "  \"rel_error\": " << format_number(oracle.rel_error) << ",\n";
    os << indent << "  \"gradient_residual\": " << format_number(oracle.gradient_residual)
       << ",\n";
    os << indent << "  \"iterations\": " << oracle.iterations << ",\n";
    os << indent << "  \"converged\": " << (oracle.converged ? "true" : "false") << "\n";
    os << indent << "}";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

ComputeResult run_compute(const IsoscelesTrapezium& trap) {
    ComputeResult result;
    result.trapezium = trap;
    result.theta = trap.diagonal_angle();
    result.weight = node_weight(result.theta);
    result.construction = construction_tree(trap);
    result.steiner = steiner_tree(trap);
    result.report = compare(trap);
    result.oracle_construction = cross_check(trap, result.construction.weight,
                                             result.construction.total);
    result.oracle_steiner = cross_check(trap, 1.0, result.steiner.total);
    return result;
}

ComputeResult run_compute(const SymmetricTetrahedron& tetra) {
    ComputeResult result = run_compute(tetra.reduce_to_trapezium());
    result.from_tetrahedron = true;
    result.tetra = tetra;
    result.phi = tetra.twist_angle();
    if (!tetra.satisfies_length_assumption()) {
        result.warnings.push_back(
            "d <= max(a12, a34): outside the standing length assumption; results "
            "may leave the analyzed angle range");
    }
    return result;
}

std::string render_compute_json(const ComputeResult& result) {
    std::ostringstream os;
    os << "{\n";
    if (result.from_tetrahedron) {
        const SymmetricTetrahedron& t = *result.tetra;
        os << "  \"input\": {\"form\": \"tetrahedron\", \"x1\": " << format_number(t.x1())
           << ", \"y1\": " << format_number(t.y1()) << ", \"z1\": " << format_number(t.z1())
           << ", \"x4\": " << format_number(t.x4()) << "},\n";
        os << "  \"trapezium\": {\"a12\": " << format_number(result.trapezium->a12())
           << ", \"a34\": " << format_number(result.trapezium->a34())
           << ", \"d\": " << format_number(result.trapezium->d()) << "},\n";
        os << "  \"phi_deg\": " << format_number(rad_to_deg(result.phi)) << ",\n";
    } else {
        os << "  \"input\": {\"form\": \"trapezium\", \"a12\": "
           << format_number(result.trapezium->a12())
           << ", \"a34\": " << format_number(result.trapezium->a34())
           << ", \"d\": " << format_number(result.trapezium->d()) << "},\n";
    }
    os << "  \"theta_deg\": " << format_number(rad_to_deg(result.theta)) << ",\n";
    os << "  \"w\": " << format_number(result.weight) << ",\n";
    os << "  \"l_construction\": " << format_number(result.construction.total) << ",\n";
    os << "  \"l_steiner\": " << format_number(result.steiner.total) << ",\n";
    os << "  \"gap\": " << format_number(result.report.gap) << ",\n";
    os << "  \"classification\": \"" << to_string(result.report.classification) << "\",\n";
    append_tree_json(os, "construction", result.construction, "  ");
    os << ",\n";
    append_tree_json(os, "steiner", result.steiner, "  ");
    os << ",\n";
    os << "  \"oracle\": {\n";
    append_oracle_json(os, "construction", result.oracle_construction, "    ");
    os << ",\n";
    append_oracle_json(os, "steiner", result.oracle_steiner, "    ");
    os << "\n  },\n";
    os << "  \"warnings\": [";
    for (std::size_t i = 0; i < result.warnings.size(); ++i) {
        if (i > 0) os << ", ";
        os << "\"" << json_escape(result.warnings[i]) << "\"";
    }
    os << "]\n";
    os << "}\n";
    return os.str();
}

std::string render_compute_csv(const ComputeResult& result) {
    std::ostringstream os;
    os << "form,a12,a34,d,phi_deg,theta_deg,w,l_construction,l_steiner,gap,classification,"
          "construction_z_top,construction_z_bottom,construction_bridge,"
          "steiner_z_top,steiner_z_bottom,steiner_bridge,"
          "oracle_construction_value,oracle_construction_rel_error,"
          "oracle_steiner_value,oracle_steiner_rel_error\n";
    os << (result.from_tetrahedron ? "tetrahedron" : "trapezium") << ",";
    os << format_number(result.trapezium->a12()) << "," << format_number(result.trapezium->a34())
       << "," << format_number(result.trapezium->d()) << ",";
    if (result.from_tetrahedron) {
        os << format_number(rad_to_deg(result.phi));
    }
    os << "," << format_number(rad_to_deg(result.theta)) << "," << format_number(result.weight)
       << "," << format_number(result.construction.total) << ","
       << format_number(result.steiner.total) << "," << format_number(result.report.gap) << ","
       << to_string(result.report.classification) << ","
       << format_number(result.construction.node_top.z) << ","
       << format_number(result.construction.node_bottom.z) << ","
       << format_number(result.construction.bridge) << ","
       << format_number(result.steiner.node_top.z) << ","
       << format_number(result.steiner.node_bottom.z) << ","
       << format_number(result.steiner.bridge) << ","
       << format_number(result.oracle_construction.value) << ","
       << format_number(result.oracle_construction.rel_error) << ","
       << format_number(result.oracle_steiner.value) << ","
       << format_number(result.oracle_steiner.rel_error) << "\n";
    return os.str();
}

std::string render_sweep_csv(double a12, double a34, double theta_min_deg, double theta_max_deg,
                             int steps) {
    if (!(a12 > 0.0) || !(a34 > 0.0) || !std::isfinite(a12) || !std::isfinite(a34)) {
        throw InvalidInputError("sweep requires positive finite side lengths");
    }
    if (!(theta_min_deg > 0.0) || !(theta_min_deg < theta_max_deg) || !(theta_max_deg <= 90.0)) {
        throw InvalidInputError("sweep requires 0 < theta_min < theta_max <= 90 degrees");
    }
    if (steps < 2) throw InvalidInputError("sweep requires at least 2 steps");

    std::ostringstream os;
    os << "theta_deg,d,w,l_construction,l_steiner,gap,classification\n";
    for (int i = 0; i < steps; ++i) {
        const double theta_deg =
            theta_min_deg + (theta_max_deg - theta_min_deg) * static_cast<double>(i) / (steps - 1);
        const double theta = theta_deg * kPi / 180.0;
        const double d = (a12 + a34) / (2.0 * std::tan(0.5 * theta));
        const IsoscelesTrapezium trap(a12, a34, d);
        const ComparisonReport report = compare(trap);
        os << format_number(theta_deg) << "," << format_number(d) << ","
           << format_number(node_weight(theta)) << "," << format_number(report.l_construction)
           << "," << format_number(report.l_steiner) << "," << format_number(report.gap) << ","
           << to_string(report.classification) << "\n";
    }
    return os.str();
}

}  // namespace steiner4
