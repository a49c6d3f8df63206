#pragma once

#include <stdexcept>
#include <string>

namespace kkbec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A real energy was requested where the squared energy is negative.
class StabilityError : public Error {
public:
    StabilityError(const std::string& what, double energy_sq)
        : Error(what), energy_sq_(energy_sq) {}
    double energy_sq() const noexcept { return energy_sq_; }

private:
    double energy_sq_;
};

/// A zero-energy mode has no finite Bogoliubov amplitudes.
class DegenerateModeError : public Error {
public:
    using Error::Error;
};

/// The gap of a mode exceeds the cutoff energy m c_s^2.
class ValidityError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a special function.
class DomainError : public Error {
public:
    using Error::Error;
};

class OracleError : public Error {
public:
    using Error::Error;
};

/// Quadrature did not reach its tolerance within budget. Carries the partial result.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double partial_value, double error_estimate)
        : Error(what), partial_value_(partial_value), error_estimate_(error_estimate) {}
    double partial_value() const noexcept { return partial_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_value_;
    double error_estimate_;
};

}  // namespace kkbec
