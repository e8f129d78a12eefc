#include <doctest.h>

#include <cmath>

#include "steiner4/oracle.hpp"
#include "steiner4/sampling.hpp"
#include "steiner4/trapezium.hpp"

using namespace steiner4;

namespace {

// distance from point p to the segment [a, b], for the diagonal checks
double point_segment_distance(const Point3& p, const Point3& a, const Point3& b) {
    const Point3 ab = b - a;
    const double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
    return distance(p, a + t * ab);
}

}  // namespace

TEST_CASE("trapezium construction validates its parameters") {
    CHECK_THROWS_AS(IsoscelesTrapezium(0.0, 1.0, 1.0), InvalidInputError);
    CHECK_THROWS_AS(IsoscelesTrapezium(1.0, -1.0, 1.0), InvalidInputError);
    CHECK_THROWS_AS(IsoscelesTrapezium(1.0, 1.0, 0.0), InvalidInputError);
}

TEST_CASE("diagonal_angle: fixed values") {
    CHECK(IsoscelesTrapezium(1, 1, 2).diagonal_angle() ==
          doctest::Approx(2.0 * std::atan(0.5)).epsilon(1e-15));
    CHECK(IsoscelesTrapezium(1, 1, 1).diagonal_angle() ==
          doctest::Approx(M_PI / 2).epsilon(1e-15));
    CHECK(IsoscelesTrapezium(1, 1, 1e6).diagonal_angle() < 1e-3);
}

TEST_CASE("diagonal_angle matches the angle at F from raw coordinates") {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const IsoscelesTrapezium trap = sample_trapezium(rng);
        const auto v = trap.vertices();
        const Point3 f = trap.diagonal_intersection();
        const double at_top = angle_between(v[0] - f, v[1] - f);     // A1' F A2'
        const double at_bottom = angle_between(v[3] - f, v[2] - f);  // A4 F A3
        CHECK(std::abs(trap.diagonal_angle() - at_top) <= 1e-12);
        CHECK(std::abs(trap.diagonal_angle() - at_bottom) <= 1e-12);
    }
}

TEST_CASE("diagonal_intersection: fixed values and containment") {
    const IsoscelesTrapezium a(1, 1, 2);
    CHECK(a.fm12() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(distance(a.diagonal_intersection(), {0, 0, 1}) <= 1e-15);

    const IsoscelesTrapezium b(1, 3, 4);
    CHECK(b.fm12() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(distance(b.diagonal_intersection(), {0, 0, 3}) <= 1e-15);

    Rng rng(32);
    for (int i = 0; i < 50; ++i) {
        const IsoscelesTrapezium trap = sample_trapezium(rng);
        const auto v = trap.vertices();
        const Point3 f = trap.diagonal_intersection();
        const double scale = trap.a12() + trap.a34() + trap.d();
        CHECK(point_segment_distance(f, v[0], v[2]) <= 1e-12 * scale);  // on A1'A3
        CHECK(point_segment_distance(f, v[1], v[3]) <= 1e-12 * scale);  // on A2'A4

        // equal sides center the intersection
        const IsoscelesTrapezium sym(trap.a12(), trap.a12(), trap.d());
        CHECK(sym.fm12() == doctest::Approx(trap.d() / 2).epsilon(1e-15));
    }
}

TEST_CASE("node_weight: fixed values, range, domain") {
    CHECK(node_weight(M_PI / 3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(node_weight(M_PI / 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(node_weight(2.0 * std::atan(0.5)) ==
          doctest::Approx(0.8944271909999159).epsilon(1e-14));
    CHECK_THROWS_AS(node_weight(0.0), InvalidInputError);
    CHECK_THROWS_AS(node_weight(M_PI), InvalidInputError);

    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        const double theta = rng.uniform( 1e-6, M_PI - 1e-6);
        const double w = node_weight(theta);
        CHECK(w > 0.0);
        CHECK(w < 2.0);
    }
}

TEST_CASE("construction_tree: fixed values") {
    SUBCASE("unit-sided trapezium of height 2") {
        const TwoNodeTree tree = construction_tree(IsoscelesTrapezium(1, 1, 2));
        CHECK(distance(tree.node_top, {0, 0, 1.75}) <= 1e-15);
        CHECK(distance(tree.node_bottom, {0, 0, 0.25}) <= 1e-15);
        CHECK(tree.bridge == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(tree.weight == doctest::Approx(0.8944271909999159).epsilon(1e-14));
        CHECK(tree.total == doctest::Approx(3.5777087639996635).epsilon(1e-13));
    }

    SUBCASE("square: nodes coincide at the center") {
        const TwoNodeTree tree = construction_tree(IsoscelesTrapezium(1, 1, 1));
        CHECK(tree.bridge == 0.0);
        CHECK(distance(tree.node_top, {0, 0, 0.5}) <= 1e-15);
        CHECK(distance(tree.node_bottom, {0, 0, 0.5}) <= 1e-15);
        CHECK(tree.total == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    }

    SUBCASE("unequal sides") {
        const TwoNodeTree tree = construction_tree(IsoscelesTrapezium(1, 3, 4));
        CHECK(tree.total == doctest::Approx(7.155417527999327).epsilon(1e-13));
        const double componentwise = tree.edge_lengths[0] + tree.edge_lengths[1] +
                                     tree.edge_lengths[2] + tree.edge_lengths[3] +
                                     tree.weight * tree.bridge;
        CHECK(std::abs(tree.total - componentwise) <= 1e-12 * componentwise);
    }
}

TEST_CASE("construction_tree: degenerate bridge throws past 90 degrees") {
    // theta = 2 atan(2) ~ 126.9 deg
    CHECK_THROWS_AS(construction_tree(IsoscelesTrapezium(1, 1, 0.5)), DegenerateBridgeError);
}

TEST_CASE("steiner_tree: fixed values and 120-degree node angles") {
    SUBCASE("unit-sided trapezium of height 2") {
        const TwoNodeTree tree = steiner_tree(IsoscelesTrapezium(1, 1, 2));
        CHECK(tree.total == doctest::Approx(3.7320508075688773).epsilon(1e-13));
        CHECK(tree.weight == 1.0);
    }

    SUBCASE("square") {
        CHECK(steiner_tree(IsoscelesTrapezium(1, 1, 1)).total ==
              doctest::Approx(std::sqrt(3.0) + 1.0).epsilon(1e-14));
    }

    SUBCASE("unequal sides") {
        CHECK(steiner_tree(IsoscelesTrapezium(1, 3, 4)).total ==
              doctest::Approx(7.464101615137755).epsilon(1e-13));
    }

    SUBCASE("all incident angles are 120 degrees") {
        Rng rng(34);
        for (int i = 0; i < 50; ++i) {
            const IsoscelesTrapezium trap = sample_trapezium(rng);
            const TwoNodeTree tree = steiner_tree(trap);
            const auto v = trap.vertices();
            const double target = 2.0 * M_PI / 3.0;
            const Point3& nt = tree.node_top;
            const Point3& nb = tree.node_bottom;
            CHECK(std::abs(angle_between(v[0] - nt, v[1] - nt) - target) <= 1e-9);
            CHECK(std::abs(angle_between(v[0] - nt, nb - nt) - target) <= 1e-9);
            CHECK(std::abs(angle_between(v[2] - nb, v[3] - nb) - target) <= 1e-9);
            CHECK(std::abs(angle_between(v[2] - nb, nt - nb) - target) <= 1e-9);
        }
    }

    SUBCASE("topology collapse past 120 degrees") {
        // theta = 130 deg -> d = 2 / (2 tan 65)
        const double d = 1.0 / std::tan(65.0 * M_PI / 180.0);
        CHECK_THROWS_AS(steiner_tree(IsoscelesTrapezium(1, 1, d)), TopologyCollapseError);
        // theta = 100 deg is fine for the Steiner tree, not for the construction
        const double d100 = 1.0 / std::tan(50.0 * M_PI / 180.0);
        CHECK_NOTHROW(steiner_tree(IsoscelesTrapezium(1, 1, d100)));
        CHECK_THROWS_AS(construction_tree(IsoscelesTrapezium(1, 1, d100)), DegenerateBridgeError);
    }
}

TEST_CASE("componentwise identity: totals equal 2 (a12 + a34) cos(theta/2)") {
    Rng rng(35);
    for (int i = 0; i < 200; ++i) {
        const IsoscelesTrapezium trap = sample_trapezium(rng);
        const TwoNodeTree tree = construction_tree(trap);
        const double closed = 2.0 * (trap.a12() + trap.a34()) * std::cos(0.5 * trap.diagonal_angle());
        CHECK(std::abs(tree.total - closed) <= 1e-12 * closed);

        // both nodes stay on the segment between the side midpoints
        CHECK(tree.node_bottom.z >= 0.0);
        CHECK(tree.node_top.z >= tree.node_bottom.z);
        CHECK(tree.node_top.z <= trap.d());

        const TwoNodeTree full = steiner_tree(trap);
        const double half = 0.5 * trap.diagonal_angle();
        const double closed_full = (trap.a12() + trap.a34()) *
                                   (0.5 * std::sqrt(3.0) + 0.5 * std::cos(half) / std::sin(half));
        CHECK(std::abs(full.total - closed_full) <= 1e-12 * closed_full);
        CHECK(full.node_bottom.z >= 0.0);
        CHECK(full.node_top.z >= full.node_bottom.z);
        CHECK(full.node_top.z <= trap.d());
    }
}

TEST_CASE("first-order balance at the construction nodes") {
    Rng rng(36);
    for (int i = 0; i < 100; ++i) {
        const IsoscelesTrapezium trap = sample_trapezium(rng);
        CHECK(first_order_residual(construction_tree(trap), trap.vertices()) < 1e-10);
    }
}

TEST_CASE("scale equivariance") {
    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        const IsoscelesTrapezium trap = sample_trapezium(rng);
        const double lambda = rng.uniform(0.1, 20.0);
        const IsoscelesTrapezium scaled(lambda * trap.a12(), lambda * trap.a34(),
                                        lambda * trap.d());
        CHECK(std::abs(scaled.diagonal_angle() - trap.diagonal_angle()) <= 1e-12);
        const TwoNodeTree a = construction_tree(trap);
        const TwoNodeTree b = construction_tree(scaled);
        CHECK(std::abs(b.weight - a.weight) <= 1e-12);
        CHECK(std::abs(b.total - lambda * a.total) <= 1e-11 * b.total);
        const TwoNodeTree sa = steiner_tree(trap);
        const TwoNodeTree sb = steiner_tree(scaled);
        CHECK(std::abs(sb.total - lambda * sa.total) <= 1e-11 * sb.total);
    }
}

TEST_CASE("evaluate_axis_objective: consistency with both trees") {
    Rng rng(38);
    for (int i = 0; i < 50; ++i) {
        const IsoscelesTrapezium trap = sample_trapezium(rng);

        const TwoNodeTree tree = construction_tree(trap);
        const double at_tree = evaluate_axis_objective(trap, tree.node_top.z, tree.node_bottom.z,
                                                       tree.weight);
        CHECK(std::abs(at_tree - tree.total) <= 1e-12 * tree.total);

        const TwoNodeTree full = steiner_tree(trap);
        const double at_full = evaluate_axis_objective(trap, full.node_top.z, full.node_bottom.z,
                                                       1.0);
        CHECK(std::abs(at_full - full.total) <= 1e-12 * full.total);

        // both nodes at F: the bridge vanishes and the objective is the sum
        // of the four half-diagonals
        const Point3 f = trap.diagonal_intersection();
        const auto v = trap.vertices();
        const double star = distance(v[0], f) + distance(v[1], f) + distance(v[2], f) +
                            distance(v[3], f);
        CHECK(std::abs(evaluate_axis_objective(trap, f.z, f.z, 123.4) - star) <= 1e-12 * star);
    }
}

TEST_CASE("construction nodes are an axis-coordinate local minimum") {
    Rng rng(39);
    for (int i = 0; i < 25; ++i) {
        const IsoscelesTrapezium trap = sample_trapezium(rng);
        const TwoNodeTree tree = construction_tree(trap);
        const double w = tree.weight;
        const double h = 1e-5 * (trap.a12() + trap.a34() + trap.d());
        const double zt = tree.node_top.z;
        const double zb = tree.node_bottom.z;
        const double f0 = evaluate_axis_objective(trap, zt, zb, w);

        const double second_top = evaluate_axis_objective(trap, zt + h, zb, w) - 2.0 * f0 +
                                  evaluate_axis_objective(trap, zt - h, zb, w);
        const double second_bottom = evaluate_axis_objective(trap, zt, zb + h, w) - 2.0 * f0 +
                                     evaluate_axis_objective(trap, zt, zb - h, w);
        CHECK(second_top > 0.0);
        CHECK(second_bottom > 0.0);
    }
}

TEST_CASE("theta stays within (0, 90] when d >= max side") {
    Rng rng(40);
    for (int i = 0; i < 50; ++i) {
        const double a12 = rng.uniform(0.1, 10.0);
        const double a34 = rng.uniform(0.1, 10.0);
        const double d = std::max(a12, a34) * rng.uniform(1.0, 4.0);
        const IsoscelesTrapezium trap(a12, a34, d);
        CHECK(trap.diagonal_angle() <= M_PI / 2 + 1e-12);
        CHECK(trap.diagonal_angle() > 0.0);
    }
}
