#pragma once

// Minimal complex arithmetic over mpfr-backed reals.  std::complex is not
// usable with a multiprecision type, and we only need a handful of
// operations, so they live here.

#include <rhcrit/precision.hpp>

namespace rhcrit {

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0) {}
  explicit Complex(long r) : re(r), im(0) {}
};

inline Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
inline Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator+(const Complex& a, const Real& b) { return {a.re + b, a.im}; }
inline Complex operator-(const Complex& a, const Real& b) { return {a.re - b, a.im}; }
inline Complex operator+(const Real& b, const Complex& a) { return {a.re + b, a.im}; }
inline Complex operator-(const Real& b, const Complex& a) { return {b - a.re, -a.im}; }

inline Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Complex operator*(const Real& s, const Complex& a) { return a * s; }

inline Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }

inline Complex& operator+=(Complex& a, const Complex& b) { a.re += b.re; a.im += b.im; return a; }
inline Complex& operator-=(Complex& a, const Complex& b) { a.re -= b.re; a.im -= b.im; return a; }
inline Complex& operator*=(Complex& a, const Complex& b) { a = a * b; return a; }

inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Complex& a) { return hypot(a.re, a.im); }
inline Real arg(const Complex& a) { return atan2(a.im, a.re); }

inline bool is_finite(const Complex& a) {
  return mpfr_number_p(a.re.backend().data()) && mpfr_number_p(a.im.backend().data());
}

// Principal square root, cut along the negative real axis, Re >= 0.
inline Complex sqrt(const Complex& z) {
  if (z.im == 0) {
    if (z.re >= 0) return Complex(sqrt(z.re));
    return {Real(0), sqrt(-z.re)};
  }
  Real m = abs(z);
  if (z.re >= 0) {
    Real t = sqrt((m + z.re) / 2);
    return {t, z.im / (2 * t)};
  }
  Real t = sqrt((m - z.re) / 2);
  Real u = abs(z.im) / (2 * t);
  return {u, z.im >= 0 ? t : Real(-t)};
}

inline Complex exp(const Complex& z) {
  Real e = exp(z.re);
  return {e * cos(z.im), e * sin(z.im)};
}

// Principal log, Im in (-pi, pi].
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex pow_int(Complex base, unsigned long e) {
  Complex acc(Real(1));
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline Complex pow_int(const Complex& base, long e) {
  if (e >= 0) return pow_int(base, static_cast<unsigned long>(e));
  return Real(1) / pow_int(base, static_cast<unsigned long>(-e));
}

inline Complex polar(const Real& r, const Real& theta) {
  return {r * cos(theta), r * sin(theta)};
}

}  // namespace rhcrit
