#ifndef FRACLAB_ERRORS_HPP
#define FRACLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fraclab {

/** Base class for all fraclab failures. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Malformed configuration, CLI arguments, or file formats. Maps to exit code 2. */
struct ConfigError : Error {
    using Error::Error;
};

/** Numerical failure inside a solver or a fit. Maps to exit code 3. */
struct NumericalError : Error {
    using Error::Error;
};

/** Iterative-solver failure with a machine-readable cause. */
struct SolverError : NumericalError {
    enum class Kind {
        newton_stall,
        gmres_breakdown,
        converged_to_zero,
        newton_divergence,
        degenerate_peak,
    };

    SolverError(Kind k, const std::string& what) : NumericalError(what), kind(k) {}

    Kind kind;
    // Parameter value at which a continuation step failed, when applicable.
    double alpha = 0.0;
    bool has_alpha = false;
};

/** Fit rejected its input (too few modes, non-monotone window, no crossing, ...). */
struct FitError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace fraclab

#endif
