#ifndef MORSEOSC_DETAIL_DOUBLE_DOUBLE_HPP
#define MORSEOSC_DETAIL_DOUBLE_DOUBLE_HPP

#include <cmath>
#include <complex>

// Compensated (double-double) arithmetic.  The hypergeometric series with a
// large imaginary argument cancels by up to exp(|Im z|); accumulating both
// the running term and the partial sum in ~31 significant digits keeps the
// final error near machine precision for |z| <= ~32.

namespace morseosc::detail {

struct dd {
  double hi{0.0};
  double lo{0.0};

  dd() = default;
  constexpr dd(double h, double l) : hi(h), lo(l) {}
  constexpr dd(double x) : hi(x), lo(0.0) {}  // NOLINT(google-explicit-constructor)

  explicit operator double() const { return hi + lo; }
};

// Error-free transforms (Knuth / Dekker).
inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return quick_two_sum(s.hi, lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd operator/(dd a, double b) { return a / dd(b); }

// Complex value with double-double components.
struct cdd {
  dd re;
  dd im;

  cdd() = default;
  cdd(dd r, dd i) : re(r), im(i) {}
  cdd(double r, double i) : re(r), im(i) {}
  cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(cdd a, cdd b) { return {a.re - b.re, a.im - b.im}; }

inline cdd operator*(cdd a, cdd b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline cdd operator*(cdd a, std::complex<double> b) {
  return a * cdd(b);
}

inline cdd operator*(cdd a, double b) { return {a.re * b, a.im * b}; }

inline cdd conj(cdd a) { return {a.re, -a.im}; }

inline cdd operator/(cdd a, cdd b) {
  dd den = b.re * b.re + b.im * b.im;
  cdd num = a * conj(b);
  return {num.re / den, num.im / den};
}

// Division by a complex number held in doubles (exact inputs).
inline cdd operator/(cdd a, std::complex<double> b) {
  dd den = two_prod(b.real(), b.real()) + two_prod(b.imag(), b.imag());
  cdd num = a * conj(cdd(b));
  return {num.re / den, num.im / den};
}

// a + n with the double->dd sum kept exact.
inline cdd shift_exact(std::complex<double> a, double n) {
  return {two_sum(a.real(), n), dd(a.imag())};
}

inline double abs_estimate(const cdd& a) {
  return std::hypot(a.re.hi, a.im.hi);
}

}  // namespace morseosc::detail

#endif  // MORSEOSC_DETAIL_DOUBLE_DOUBLE_HPP
