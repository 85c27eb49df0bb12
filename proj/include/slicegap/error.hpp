#pragma once

#include <stdexcept>
#include <string>

namespace slicegap {

// Bad arguments: wrong shape, unsupported parameter, malformed input.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The input is well formed but the mathematical precondition fails
// (dd != 0, degenerate pairing, non-unit leading coefficient, ...).
struct MathError : std::domain_error {
    using std::domain_error::domain_error;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidInput(msg);
}

}  // namespace slicegap
