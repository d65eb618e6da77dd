#pragma once

#include <stdexcept>
#include <string>

namespace liemin {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (sqrt/log of a
/// nonpositive value, derivative index beyond the jet order, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Division where the denominator's value part is numerically zero.
struct DivisionBySmallValue : Error {
    using Error::Error;
};

/// Principal curvatures coincide within tolerance at a queried point.
struct UmbilicError : Error {
    using Error::Error;
};

/// Coordinates fail the regime a computation requires (not curvature-line,
/// not isothermic, degenerate metric).
struct CoordinateError : Error {
    using Error::Error;
};

/// Offset distance hits a focal point (1 - t*k ~ 0).
struct FocalError : Error {
    using Error::Error;
};

/// Unknown fixture name or invalid fixture parameters.
struct FixtureError : Error {
    using Error::Error;
};

/// Malformed analysis configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// File read/write failure.
struct IoError : Error {
    using Error::Error;
};

} // namespace liemin
