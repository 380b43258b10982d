#pragma once

#include <stdexcept>
#include <string>

namespace pgt {

/// Raised on malformed input text (.pg / adjacency files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an input graph violates a structural invariant
/// (asymmetric rotation, disconnected, Euler check failure, ...).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised on bad arguments to library operations.
struct ArgError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails. Never compiled out.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check_arg(bool ok, const std::string& msg) {
    if (!ok) throw ArgError(msg);
}

inline void check_input(bool ok, const std::string& msg) {
    if (!ok) throw InvariantError(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw InternalError(msg);
}

}  // namespace pgt
