#pragma once

#include <stdexcept>

namespace maxplus {

// Operands have incompatible shapes.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed textual or JSON input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured work budget (pattern count, candidate count) would be exceeded.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace maxplus
