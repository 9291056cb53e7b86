#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iterroot {

/// Base class for every mathematically meaningful failure (as opposed to
/// usage errors like bad command-line syntax).
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero") {}
    explicit DivisionByZero(const std::string& what) : MathError(what) {}
};

struct NonFiniteValue : MathError {
    NonFiniteValue() : MathError("operation produced a non-finite value") {}
};

struct InvalidLinearMap : MathError {
    InvalidLinearMap() : MathError("linear map requires a != 0") {}
};

struct DegreeZero : MathError {
    DegreeZero() : MathError("operation requires degree >= 1") {}
};

struct ExactRootUnavailable : MathError {
    using MathError::MathError;
};

struct NotBijective : MathError {
    NotBijective() : MathError("input az+b must have a != 0") {}
};

struct NotMonic : MathError {
    using MathError::MathError;
};

struct NotCubeRootOfUnity : MathError {
    NotCubeRootOfUnity() : MathError("unit must satisfy unit^3 = 1") {}
};

struct VariableMismatch : MathError {
    using MathError::MathError;
};

struct InvalidDegreeSpec : MathError {
    using MathError::MathError;
};

/// Raised by the text parsers; `position` is a 0-based byte offset into the
/// offending input.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace iterroot
