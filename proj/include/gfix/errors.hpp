#pragma once

#include <stdexcept>
#include <string>

namespace gfix {

/// Malformed configuration or arguments outside their documented range.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A metric/map evaluation produced NaN, infinity, a negative value, or a
/// point outside the declared space. Carries the offending inputs in the
/// message; checks treat this as a hard failure, not a violation.
class EvalError : public std::runtime_error {
public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructor refused its inputs (invalid metric, inconsistent table,
/// axiom violation detected at construction).
class InvalidConstruction : public std::runtime_error {
public:
    explicit InvalidConstruction(const std::string& what) : std::runtime_error(what) {}
};

/// preimage_solve found no x with apply(x) = t within tolerance.
/// Signals a range-inclusion violation at runtime.
class NoPreimageError : public std::runtime_error {
public:
    NoPreimageError(const std::string& what, double target)
        : std::runtime_error(what), target_(target) {}
    double target() const { return target_; }

private:
    double target_;
};

/// Operation not defined for the given space kind (e.g. enumeration of an
/// interval).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfix
