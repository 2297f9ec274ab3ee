#pragma once

#include <stdexcept>
#include <string>

namespace latcount {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error { using Error::Error; };
struct DependentRows : Error { using Error::Error; };
struct Unbounded : Error { using Error::Error; };
struct EmptyPolytope : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct NotPointed : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NoValidDirection : Error { using Error::Error; };
struct NotPolynomial : Error { using Error::Error; };
struct MissingSourceCone : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct DegenerateDirection : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Violation of an internal invariant; indicates a bug, not bad input.
struct InternalError : Error { using Error::Error; };

} // namespace latcount
