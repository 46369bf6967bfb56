#pragma once

#include <stdexcept>
#include <string>

namespace szj {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an intersection is too close to tangential, to a vertex, or
// to another intersection to be resolved at the working tolerance.
struct DegenerateIntersection : GeometryError {
    using GeometryError::GeometryError;
};

// Raised when a winding number is requested at a point on (or too close to)
// the curve itself.
struct PointOnCurve : GeometryError {
    using GeometryError::GeometryError;
};

// Raised when a curve fails the genericity requirements of an operation.
struct NotGeneric : GeometryError {
    using GeometryError::GeometryError;
};

// Raised when square-root continuation cannot be made unambiguous even after
// adaptive refinement near the branch points.
struct BranchTrackingFailure : GeometryError {
    using GeometryError::GeometryError;
};

// Raised when a construction routine cannot satisfy its postcondition.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a homotopy move cannot be applied at the requested site.
struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace szj
