#pragma once

#include <stdexcept>
#include <string>

namespace octapack {

// Base class for every domain error thrown by the library. All of them
// indicate a violated geometric precondition rather than a programming bug.
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A circle passes through the pole of a Mobius map, so its image is a line.
struct LineImage : GeometryError {
    using GeometryError::GeometryError;
};

// A spherical circle passes through the north pole, so it cannot be dropped
// to a bounded planar circle.
struct NorthPoleCircle : GeometryError {
    using GeometryError::GeometryError;
};

struct IdenticalCircles : GeometryError {
    using GeometryError::GeometryError;
};

struct BadKindParams : GeometryError {
    using GeometryError::GeometryError;
};

struct OutOfRange : GeometryError {
    using GeometryError::GeometryError;
};

// The closed-form radius denominator collapsed below the safe threshold.
struct NumericBreakdown : GeometryError {
    using GeometryError::GeometryError;
};

// Initial circle has negative inversive distance to the right base circle.
struct NegativeC : GeometryError {
    using GeometryError::GeometryError;
};

struct NoInteriorMinimum : GeometryError {
    using GeometryError::GeometryError;
};

struct OutOfBand : GeometryError {
    using GeometryError::GeometryError;
};

// Requested the circle orthogonal to the base triple with a <= 1/2.
struct NoOrthogonalCircle : GeometryError {
    using GeometryError::GeometryError;
};

struct CenterInsideCircle : GeometryError {
    using GeometryError::GeometryError;
};

struct NormalizationFailed : GeometryError {
    using GeometryError::GeometryError;
};

struct LabelMismatch : GeometryError {
    using GeometryError::GeometryError;
};

struct BadEquatorialSetup : GeometryError {
    using GeometryError::GeometryError;
};

struct NoTangencySolution : GeometryError {
    using GeometryError::GeometryError;
};

struct UndefinedLength : GeometryError {
    using GeometryError::GeometryError;
};

struct InvalidFace : GeometryError {
    using GeometryError::GeometryError;
};

} // namespace octapack
