#pragma once

#include <stdexcept>
#include <string>

namespace cactus {

/// Malformed or invalid input (bad file, bad network). CLI exit code 1.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Valid input that violates an operation's precondition, e.g. asking for
/// the resistance matrix of a disconnected network. CLI exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical identity that must always hold was violated. Always a bug.
/// CLI exit code 3.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cactus
