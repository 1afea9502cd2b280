#pragma once

#include <stdexcept>
#include <string>

namespace teichrec {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

// Matrix fails |det - 1| <= 1e-6.
struct InvalidIsometryError : Error {
    using Error::Error;
};

// D(phi) = 0 configuration (t1 == t2, phi == pi).
struct SingularConfigError : Error {
    using Error::Error;
};

// cos(Psi) below threshold, Psi'(phi) not resolvable.
struct SingularDerivativeError : Error {
    using Error::Error;
};

// Precondition of a shadowing bound violated; carries the failing eta.
struct PreconditionError : Error {
    double eta;
    PreconditionError(const std::string& msg, double eta_) : Error(msg), eta(eta_) {}
};

struct BudgetExceededError : Error {
    using Error::Error;
};

struct DisconnectedSurfaceError : Error {
    using Error::Error;
};

struct ConstructionError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

struct InfeasibleRateError : Error {
    using Error::Error;
};

struct NoRateError : Error {
    using Error::Error;
};

struct NoDriftError : Error {
    using Error::Error;
};

// Level l too small for the effective-rate formula to contract.
struct LTooSmallError : Error {
    using Error::Error;
};

}  // namespace teichrec
