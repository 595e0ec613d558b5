#ifndef MORSEOSC_FREQUENCY_HPP
#define MORSEOSC_FREQUENCY_HPP

#include <limits>
#include <vector>

// Morse-like squared-frequency model
//
//   w^2(t) = D_e (e^{-2(t+t_s)/b} - 2 e^{-(t+t_s)/b}) + V_inf
//
// with case classification by the signs of (D_e, V_inf), the window where
// w^2 > 0, analytic derivatives of w, oscillation criteria and the
// exponential solution bound.

namespace morseosc::frequency {

struct MorseFrequency {
  double D_e;    // depth parameter, != 0 (inverse time^2)
  double b;      // time scale, > 0
  double V_inf;  // asymptotic value (inverse time^2)
  double t_s;    // time translation

  // Validates b > 0, D_e != 0 and w^2(0) > 0; throws InvalidParams.
  MorseFrequency(double De, double b_, double Vinf, double ts);
};

enum class CaseTag {
  Case1,          // D_e < 0, V_inf < 0: inverted hole, finite window
  Case2,          // D_e < 0, V_inf > 0: inverted hole over a positive floor
  Case3,          // D_e > 0, V_inf > 0: hole over a positive floor
  Case3ZeroShift, // D_e > 0, V_inf = 0: plain Morse hole (finite window)
  Case4,          // D_e > 0, V_inf < 0: decaying barrier, finite window
};

struct ValidityWindow {
  double t_start = 0.0;
  double t_end = std::numeric_limits<double>::infinity();

  bool finite() const { return t_end != std::numeric_limits<double>::infinity(); }
};

double omega_squared(const MorseFrequency& f, double t);

// d(w^2)/dt and d^2(w^2)/dt^2 (analytic).
double omega_squared_dot(const MorseFrequency& f, double t);
double omega_squared_ddot(const MorseFrequency& f, double t);

CaseTag classify(const MorseFrequency& f);

// Window [0, t_end) with w^2 > 0; the closed-form root is cross-checked by
// bisection.  Throws InvalidParams when the parameters admit an interior
// zero (Case 3 with V_inf <= D_e and t_s <= 0).
ValidityWindow validity_window(const MorseFrequency& f);

struct OmegaDerivatives {
  double omega;       // w(t)
  double omega_dot;   // dw/dt
  double omega_ddot;  // d^2w/dt^2
};

// Throws DomainError where w^2(t) <= 0.
OmegaDerivatives omega_derivatives(const MorseFrequency& f, double t);

struct OscillationReport {
  bool fite_leighton_divergent = false;
  bool wintner_divergent = false;
  std::vector<double> times;             // sample times up to T
  std::vector<double> fite_integral;     // int_0^T w^2 dt
  std::vector<double> wintner_integral;  // (1/T) int_0^T int_0^t w^2 dt' dt
};

// Integrates the oscillation-criteria functionals up to T and reports
// whether they grow without bound (trend proportional to T).
OscillationReport oscillation_criteria(const MorseFrequency& f, double T,
                                       int samples = 64);

// Exponential bound on |x(t)| for solutions of x'' + w^2 x = 0, obtained by
// rescaling time so the reference frequency is w(0):
//   |x| <= (|x0| + |xdot0|/w0) exp( w0 int_0^t |w^2(u)/w0^2 - 1| du ).
double solution_bound(const MorseFrequency& f, double x0, double xdot0,
                      double t);

}  // namespace morseosc::frequency

#endif  // MORSEOSC_FREQUENCY_HPP
