#pragma once

#include <stdexcept>
#include <string>

namespace ghz {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument outside its admissible range (bad f1, bad grid, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A matrix failed one of the density-matrix checks. `check()` names the
/// failed invariant ("hermitian", "positive-semidefinite", "trace").
class ValidationError : public Error {
public:
    ValidationError(const std::string& message, std::string check)
        : Error(message), check_(std::move(check)) {}

    const std::string& check() const { return check_; }

private:
    std::string check_;
};

class NotHermitianError : public ValidationError {
public:
    explicit NotHermitianError(const std::string& message)
        : ValidationError(message, "hermitian") {}
};

class NotPositiveSemiDefiniteError : public ValidationError {
public:
    NotPositiveSemiDefiniteError(const std::string& message, double min_eigenvalue)
        : ValidationError(message, "positive-semidefinite"),
          min_eigenvalue_(min_eigenvalue) {}

    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class TraceNotOneError : public ValidationError {
public:
    TraceNotOneError(const std::string& message, double trace)
        : ValidationError(message, "trace"), trace_(trace) {}

    double trace() const { return trace_; }

private:
    double trace_;
};

/// Mixture weights that are negative or do not sum to one.
class WeightsError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A state file that is missing, malformed, or has the wrong shape.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ghz
