#pragma once

#include <stdexcept>

namespace steiner4 {

/// Base class for all steiner4 errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input values violate a precondition (non-finite, out of range, bad format).
struct InvalidInputError : Error {
    using Error::Error;
};

/// No opposite-edge pair of the tetrahedron has its common perpendicular
/// passing through both edge midpoints (within tolerance).
struct NotBoundarySymmetricError : Error {
    using Error::Error;
};

/// The two construction nodes would cross (negative bridge length).
struct DegenerateBridgeError : Error {
    using Error::Error;
};

/// The full two-node Steiner topology is infeasible for this shape.
struct TopologyCollapseError : Error {
    using Error::Error;
};

/// An iterative solver exhausted its iteration budget.
struct NonConvergenceError : Error {
    using Error::Error;
};

}  // namespace steiner4
