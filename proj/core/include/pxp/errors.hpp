#pragma once

#include <stdexcept>
#include <string>

namespace pxp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A call made outside an operation's precondition (e.g. W not a subset of the specified features).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A value, model or problem that violates a domain invariant.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input that is well-formed but outside what an operation supports (real features in constraints).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// An exhaustive procedure would exceed its guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A scripted oracle was asked something its script does not cover.
class ScriptError : public Error {
public:
    using Error::Error;
};

/// Document parse or validation failure, carrying the location ("nodes[3].children").
class ParseError : public DomainError {
public:
    ParseError(std::string location, const std::string& message)
        : DomainError(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

}  // namespace pxp
