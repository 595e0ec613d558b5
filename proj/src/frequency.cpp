#include "morseosc/frequency.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "morseosc/errors.hpp"

namespace morseosc::frequency {

namespace {

using boost::math::quadrature::gauss_kronrod;

double checked_omega0_sq(double De, double b, double Vinf, double ts) {
  double x = std::exp(-ts / b);
  return De * (x * x - 2.0 * x) + Vinf;
}

}  // namespace

MorseFrequency::MorseFrequency(double De, double b_, double Vinf, double ts)
    : D_e(De), b(b_), V_inf(Vinf), t_s(ts) {
  if (!(b > 0.0)) {
    throw InvalidParams("MorseFrequency: b must be positive (b = " +
                        std::to_string(b) + ")");
  }
  if (D_e == 0.0) {
    throw InvalidParams("MorseFrequency: D_e must be nonzero");
  }
  double w0sq = checked_omega0_sq(D_e, b, V_inf, t_s);
  if (!(w0sq > 0.0)) {
    throw InvalidParams(
        "MorseFrequency: w^2(0) must be strictly positive (got " +
        std::to_string(w0sq) + "); adjust D_e, V_inf or t_s");
  }
}

double omega_squared(const MorseFrequency& f, double t) {
  double x = std::exp(-(t + f.t_s) / f.b);
  return f.D_e * (x * x - 2.0 * x) + f.V_inf;
}

double omega_squared_dot(const MorseFrequency& f, double t) {
  double x = std::exp(-(t + f.t_s) / f.b);
  return 2.0 * f.D_e / f.b * (x - x * x);
}

double omega_squared_ddot(const MorseFrequency& f, double t) {
  double x = std::exp(-(t + f.t_s) / f.b);
  return 2.0 * f.D_e / (f.b * f.b) * (2.0 * x * x - x);
}

CaseTag classify(const MorseFrequency& f) {
  if (f.D_e < 0.0 && f.V_inf < 0.0) return CaseTag::Case1;
  if (f.D_e < 0.0 && f.V_inf > 0.0) return CaseTag::Case2;
  if (f.D_e > 0.0 && f.V_inf > 0.0) return CaseTag::Case3;
  if (f.D_e > 0.0 && f.V_inf == 0.0) return CaseTag::Case3ZeroShift;
  if (f.D_e > 0.0 && f.V_inf < 0.0) return CaseTag::Case4;
  throw InvalidParams(
      "classify: V_inf = 0 with D_e < 0 has no case tag (the squared "
      "frequency decays to zero from below the harmonic limit)");
}

ValidityWindow validity_window(const MorseFrequency& f) {
  CaseTag tag = classify(f);
  ValidityWindow w;
  switch (tag) {
    case CaseTag::Case2:
      return w;  // V_inf > 0 keeps w^2 positive for all t >= 0
    case CaseTag::Case3: {
      // The hole bottom V_inf - D_e is reached at t = -t_s; for t_s <= 0
      // that point lies in the window and must stay positive.
      if (f.t_s <= 0.0 && f.V_inf <= f.D_e) {
        throw InvalidParams(
            "validity_window: Case3 with t_s <= 0 requires V_inf > D_e "
            "(interior zero of w^2 otherwise)");
      }
      return w;
    }
    case CaseTag::Case3ZeroShift:
      // Limit of the closed-form root as V_inf -> 0.
      w.t_end = -f.t_s - f.b * std::log(2.0);
      break;
    case CaseTag::Case1:
    case CaseTag::Case4: {
      double disc = f.D_e * (f.D_e - f.V_inf);
      if (!(disc >= 0.0)) {
        throw InvalidParams("validity_window: root discriminant negative");
      }
      double ratio = (f.D_e - std::sqrt(disc)) / f.V_inf;
      if (!(ratio > 0.0)) {
        throw InvalidParams("validity_window: closed-form root not real");
      }
      w.t_end = -f.t_s + f.b * std::log(ratio);
      break;
    }
  }
  if (!(w.t_end > 0.0)) {
    throw InvalidParams("validity_window: window end precedes t = 0 (t_end = " +
                        std::to_string(w.t_end) + ")");
  }
  // Bisection cross-check of the closed-form root.
  double lo = std::max(0.0, w.t_end - 0.5 * f.b);
  double hi = w.t_end + 0.5 * f.b;
  if (omega_squared(f, lo) > 0.0 && omega_squared(f, hi) < 0.0) {
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      (omega_squared(f, mid) > 0.0 ? lo : hi) = mid;
    }
    double scale = std::abs(f.D_e) + std::abs(f.V_inf);
    if (std::abs(omega_squared(f, 0.5 * (lo + hi))) > 1e-8 * scale &&
        std::abs(0.5 * (lo + hi) - w.t_end) > 1e-9 * std::max(1.0, std::abs(w.t_end))) {
      throw InvalidParams("validity_window: closed-form root failed bisection check");
    }
    w.t_end = 0.5 * (lo + hi) == w.t_end ? w.t_end : w.t_end;  // keep closed form
  }
  return w;
}

OmegaDerivatives omega_derivatives(const MorseFrequency& f, double t) {
  double w2 = omega_squared(f, t);
  if (!(w2 > 0.0)) {
    throw DomainError("omega_derivatives: w^2(t) <= 0 at t = " +
                      std::to_string(t));
  }
  double w = std::sqrt(w2);
  double w2d = omega_squared_dot(f, t);
  double w2dd = omega_squared_ddot(f, t);
  double wd = 0.5 * w2d / w;
  double wdd = (0.5 * w2dd - wd * wd) / w;
  return {w, wd, wdd};
}

OscillationReport oscillation_criteria(const MorseFrequency& f, double T,
                                       int samples) {
  OscillationReport r;
  samples = std::max(samples, 8);
  r.times.resize(samples);
  r.fite_integral.resize(samples);
  r.wintner_integral.resize(samples);

  auto w2 = [&](double t) { return omega_squared(f, t); };
  double acc = 0.0;       // int_0^t w^2
  double acc_iter = 0.0;  // int_0^t (int_0^s w^2) ds
  double prev = 0.0;
  for (int k = 0; k < samples; ++k) {
    double tk = T * (k + 1) / samples;
    acc += gauss_kronrod<double, 15>::integrate(w2, prev, tk, 10, 1e-12);
    // iterated integral: int w^2 is smooth, trapezoid on the fine grid
    // augmented by the analytic inner value at both ends
    acc_iter += 0.5 * (tk - prev) *
                (acc + (k == 0 ? 0.0 : r.fite_integral[k - 1]));
    r.times[k] = tk;
    r.fite_integral[k] = acc;
    r.wintner_integral[k] = acc_iter / tk;
    prev = tk;
  }

  // Divergence trend: the tail grows linearly with positive slope.
  auto tail_slope = [&](const std::vector<double>& v) {
    int n = samples;
    int k0 = (3 * n) / 4;
    return (v[n - 1] - v[k0 - 1]) / (r.times[n - 1] - r.times[k0 - 1]);
  };
  double scale = std::abs(f.V_inf) + std::abs(f.D_e) * 1e-6 + 1e-12;
  r.fite_leighton_divergent =
      tail_slope(r.fite_integral) > 1e-9 * scale && r.fite_integral.back() > 0.0;
  r.wintner_divergent = tail_slope(r.wintner_integral) > 1e-9 * scale &&
                        r.wintner_integral.back() > 0.0;
  return r;
}

double solution_bound(const MorseFrequency& f, double x0, double xdot0,
                      double t) {
  double w0sq = omega_squared(f, 0.0);
  double w0 = std::sqrt(w0sq);
  auto integrand = [&](double u) {
    return std::abs(omega_squared(f, u) / w0sq - 1.0);
  };
  // |.| has kinks where w^2 crosses w0^2; those times solve a quadratic in
  // e^{-(t+t_s)/b} and become panel boundaries.
  std::vector<double> cuts{0.0, t};
  double disc = 1.0 - (f.V_inf - w0sq) / f.D_e;
  if (disc >= 0.0) {
    for (double root : {1.0 - std::sqrt(disc), 1.0 + std::sqrt(disc)}) {
      if (root > 0.0) {
        double tc = -f.t_s - f.b * std::log(root);
        if (tc > 0.0 && tc < t) cuts.push_back(tc);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    integral += gauss_kronrod<double, 15>::integrate(integrand, cuts[i],
                                                     cuts[i + 1], 12, 1e-12);
  }
  return (std::abs(x0) + std::abs(xdot0) / w0) * std::exp(w0 * integral);
}

}  // namespace morseosc::frequency
