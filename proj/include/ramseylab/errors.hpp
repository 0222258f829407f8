#pragma once

#include <stdexcept>
#include <string>

namespace ramseylab {

// Caller passed something outside an operation's contract.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap (edge count, node budget, palette, ...) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A structural assertion taken from a proved statement failed at runtime.
// These are never caught and repaired; the test suite treats one as a
// falsification of the statement (or, far more likely, of this code).
struct FalsificationError : std::logic_error {
    explicit FalsificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ramseylab
