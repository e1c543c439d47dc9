#pragma once

#include <stdexcept>
#include <string>

namespace hypasym {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes (domain/config -> usage, numerical/resource -> numerical).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation, or a method
// requested outside the regime it is valid in.
class DomainError : public Error {
public:
    using Error::Error;
};

// Gamma function evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Invalid configuration (e.g. precision below the contract floor).
class ConfigError : public Error {
public:
    using Error::Error;
};

// An iteration failed to converge within its budget.
class NumericalError : public Error {
public:
    using Error::Error;
};

// A computation would exceed its term/precision budget.
class ResourceError : public NumericalError {
public:
    ResourceError(const std::string& what, int required_digits)
        : NumericalError(what), required_digits_(required_digits) {}

    int required_digits() const noexcept { return required_digits_; }

private:
    int required_digits_;
};

} // namespace hypasym
