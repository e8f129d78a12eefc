#pragma once

#include <cstdint>
#include <random>

#include "steiner4/tetrahedron.hpp"
#include "steiner4/trapezium.hpp"

namespace steiner4 {

/// Seeded generator whose double stream depends only on the mt19937_64
/// engine (fully specified by the standard), not on the library's
/// distribution implementations, so sequences are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 engine_;
};

/// Random valid trapezium: sides in [0.1, 10], diagonal angle in (1, 89)
/// degrees, height back-solved from d = (a12 + a34) / (2 tan(theta/2)).
IsoscelesTrapezium sample_trapezium(Rng& rng);

/// Random symmetric tetrahedron with d > max{a12, a34}: sides in [0.1, 10],
/// twist angle in (1, 89) degrees, d in (1.05, 3) times the longer side.
SymmetricTetrahedron sample_symmetric_tetrahedron(Rng& rng);

}  // namespace steiner4
