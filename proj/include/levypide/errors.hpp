#pragma once

#include <stdexcept>
#include <string>

namespace levypide {

// Base class for all engine errors. The CLI maps subclasses to exit codes:
// DomainError -> 2, ConvergenceError -> 3, everything else -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter or argument violates a model/operator domain restriction.
struct DomainError : Error {
    using Error::Error;
};

// Grid construction or grid/operator compatibility failure.
struct GridError : Error {
    using Error::Error;
};

// A configured size limit (node count, dense matrix dimension) was exceeded.
struct CapacityError : Error {
    using Error::Error;
};

// A direct linear solve (tridiagonal, banded) failed to factorize.
struct SolveError : Error {
    using Error::Error;
};

// Spatial step violates a scheme stability bound.
struct StabilityError : Error {
    using Error::Error;
};

// Input norm exceeds the configured cap of a matrix function.
struct OverflowError : Error {
    using Error::Error;
};

// An iteration failed to reach its tolerance; carries the iteration count
// and the last residual.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, int iterations_, double residual_)
        : Error(what + " [iterations=" + std::to_string(iterations_) +
                ", residual=" + format_residual(residual_) + "]"),
          iterations(iterations_),
          residual(residual_) {}

    int iterations;
    double residual;

  private:
    static std::string format_residual(double r) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", r);
        return buf;
    }
};

}  // namespace levypide
