#pragma once

#include <stdexcept>
#include <string>

namespace vko {

/// Base class of every error raised by the library. Each subclass maps to one
/// CLI exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exitCode() const noexcept { return 1; }
};

class InvalidInput : public Error {
public:
    using Error::Error;
    int exitCode() const noexcept override { return 2; }
};

/// A map (or coned extension) could not be brought into general position
/// within its retry budget, or an uncertified map was used where a certified
/// one is required.
class GenericityViolation : public Error {
public:
    using Error::Error;
    int exitCode() const noexcept override { return 3; }
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
    int exitCode() const noexcept override { return 4; }
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
    int exitCode() const noexcept override { return 5; }
};

} // namespace vko
