#include "steiner4/sampling.hpp"

#include <cmath>

namespace steiner4 {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

IsoscelesTrapezium sample_trapezium(Rng& rng) {
    const double a12 = rng.uniform(0.1, 10.0);
    const double a34 = rng.uniform(0.1, 10.0);
    const double theta = rng.uniform(1.0, 89.0) * kPi / 180.0;
    const double d = (a12 + a34) / (2.0 * std::tan(0.5 * theta));
    return IsoscelesTrapezium(a12, a34, d);
}

SymmetricTetrahedron sample_symmetric_tetrahedron(Rng& rng) {
    const double a12 = rng.uniform(0.1, 10.0);
    const double a34 = rng.uniform(0.1, 10.0);
    const double twist = rng.uniform(1.0, 89.0) * kPi / 180.0;
    const double d = std::max(a12, a34) * rng.uniform(1.05, 3.0);
    const double x1 = 0.5 * a12 * std::cos(twist);
    const double y1 = 0.5 * a12 * std::sin(twist);
    return SymmetricTetrahedron::from_parameters(x1, y1, d, 0.5 * a34);
}

}  // namespace steiner4
