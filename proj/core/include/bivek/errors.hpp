#ifndef BIVEK_ERRORS_HPP
#define BIVEK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bivek {

/**
 * @brief Error taxonomy for the bivek library.
 *
 * Every failure mode raised by the library is one of the types below, so
 * callers (and the CLI) can map outcomes to exit codes without string
 * matching.  All carry a human-readable message describing the offending
 * value or condition.
 */

/// Malformed input document: unknown kind, negative degrees, bad coefficient arrays.
struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A polynomial operation would exceed the configured per-variable degree cap.
struct DegreeOverflow : std::length_error {
    using std::length_error::length_error;
};

/// Inversion of a nonzero element with exactly one vanishing idempotent component.
struct ZeroDivisorError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Inversion of zero.
struct ZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite-difference stencil does not fit inside the unit disk around its center.
struct StencilOutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

/// Fixed-point iteration diverged or its independently-checked residual stayed above tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was requested under a conjugation convention it does not support.
struct ConventionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A decomposition coefficient fails its mode's first-order condition.
struct CoefficientConditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The input function is not (numerically) in the class the extraction assumes.
struct NotInClassError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Richardson extrapolants diverge instead of settling.
struct ExtrapolationUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Stolz path contains a point outside the open disk or outside its cone.
struct PathInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace bivek

#endif // BIVEK_ERRORS_HPP
