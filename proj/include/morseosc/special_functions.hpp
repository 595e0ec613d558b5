#ifndef MORSEOSC_SPECIAL_FUNCTIONS_HPP
#define MORSEOSC_SPECIAL_FUNCTIONS_HPP

#include <complex>

// Complex-argument special functions underlying the closed-form classical
// solutions: Kummer's confluent hypergeometric function of the first kind,
// the Tricomi function, the Gamma/digamma functions and Laguerre polynomials.
//
// All functions are pure, deterministic and reentrant.  Internal accuracy
// target is 1e-12 relative, with 1e-10 guaranteed over the parameter ranges
// exercised by the oscillator model (|z| up to a few thousand along the
// positive real or imaginary axis, parameters |a|, |b| up to ~20).

namespace morseosc::special {

using complexd = std::complex<double>;

// Gamma function for complex argument (Lanczos approximation, reflection for
// Re z < 1/2).  Throws PoleError at non-positive integers.
complexd gamma_complex(complexd z);

// Logarithmic derivative of Gamma.  Throws PoleError at non-positive
// integers.
complexd digamma_complex(complexd z);

// Kummer's function 1F1(a; b; z) = sum_n (a)_n z^n / ((b)_n n!).
//
// Strategy: terminating sum when a is a non-positive integer; otherwise the
// Taylor series in compensated (double-double) arithmetic after a Kummer
// transformation to Re z >= 0, switching to the large-|z| asymptotic
// expansion and, where that diverges too early, to the Euler integral
// representation.
//
// Throws PoleError when b is a non-positive integer (unless a = -m
// terminates the series first), ConvergenceError when no evaluation route
// reaches the internal tolerance.
complexd kummer_1f1(complexd a, complexd b, complexd z);

// Tricomi's function U(a, b, z), principal branch.
//
// Evaluated through the standard combination of the two Kummer solutions for
// non-integer b, through the logarithmic limit formula for integer b, and
// through the large-|z| asymptotic series or the rotated-ray integral
// representation when the series route loses too many digits.
//
// Throws BranchError for z on the cut (z <= 0), PoleError / ConvergenceError
// as for kummer_1f1.
complexd tricomi_u(complexd a, complexd b, complexd z);

// Laguerre polynomial L_m(z) by the three-term recurrence.
complexd laguerre(unsigned m, complexd z);

namespace detail_sf {

// True if x is an integer <= 0 (exact floating-point test).
bool is_nonpositive_integer(double x);
bool is_nonpositive_integer(complexd z);

// (x)_m = x (x+1) ... (x+m-1)
complexd pochhammer(complexd x, unsigned m);

}  // namespace detail_sf

}  // namespace morseosc::special

#endif  // MORSEOSC_SPECIAL_FUNCTIONS_HPP
