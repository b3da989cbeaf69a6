#pragma once

#include <stdexcept>
#include <string>

namespace permspec {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed cycle notation, group files or inline generator strings.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Operands with incompatible degrees, points out of range, bad arguments.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An enumeration would exceed the configured cap. Callers that can fall
// back to a non-enumerating path (e.g. recursive moments) should do so.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// A division that is guaranteed exact by theory had a remainder. This
// always indicates a bug, never bad user input.
struct IntegralityError : Error {
    explicit IntegralityError(const std::string& msg) : Error(msg) {}
};

// A group file carried an `order` line (or a family carries a forced
// order) and the constructed group disagrees.
struct OrderAssertionError : Error {
    explicit OrderAssertionError(const std::string& msg) : Error(msg) {}
};

} // namespace permspec
