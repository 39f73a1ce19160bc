#pragma once

#include <stdexcept>
#include <string>

namespace qfc {

/// Base class for all qfc errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (negative delay, bad grid, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Operation called on a mode of the wrong class (e.g. propagating
/// coefficients requested for a diffusive mode), or an evanescent mode.
struct RegimeError : Error {
    using Error::Error;
};

/// The mean field has no stationary fluctuation state (gamma/2 <= Gamma_max,
/// or the middle bistable branch).
struct UnstableError : Error {
    using Error::Error;
};

/// An iterative solver failed to reach its tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Second moments violate the Gaussian physicality bound
/// (n + 1/2)^2 - |c|^2 >= 1/4.
struct UnphysicalStateError : Error {
    using Error::Error;
};

/// No optimal displacement exists (requires |c| > n).
struct NoOptimumError : Error {
    using Error::Error;
};

}  // namespace qfc
