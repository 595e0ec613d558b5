#ifndef MORSEOSC_ERRORS_HPP
#define MORSEOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace morseosc {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Special-function evaluation at a pole of the defining series.
struct PoleError : Error {
  using Error::Error;
};

// Series / asymptotic engine failed to reach its internal tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

// Argument on a branch cut where a single-valued result was requested.
struct BranchError : Error {
  using Error::Error;
};

// Frequency parameters violate the model invariants.
struct InvalidParams : Error {
  using Error::Error;
};

// Evaluation requested outside the domain of validity.
struct DomainError : Error {
  using Error::Error;
};

// Constructed basis solutions are (numerically) proportional.
struct DegenerateBasis : Error {
  using Error::Error;
};

// Initial-value system for the superposition coefficients is singular.
struct SingularBasis : Error {
  using Error::Error;
};

// Adaptive quadrature failed its tolerance.
struct QuadratureError : Error {
  using Error::Error;
};

// ODE step-size controller underflowed.
struct StepFailure : Error {
  using Error::Error;
};

// g2 undefined (vacuum state with no excitation: zero mean occupation).
struct UndefinedG2 : Error {
  using Error::Error;
};

// Fock-space truncation too small for an exact expectation value.
struct DimensionTooSmall : Error {
  using Error::Error;
};

}  // namespace morseosc

#endif  // MORSEOSC_ERRORS_HPP
