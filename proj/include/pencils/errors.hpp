#pragma once

#include <stdexcept>
#include <string>

namespace pencils {

// Bad user-supplied text/JSON. CLI maps this to exit code 1.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation precondition (sizes, validity, membership...). CLI exit code 2.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broken: always a bug, never a user error.
inline void check_internal(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw PreconditionError(msg);
}

} // namespace pencils
