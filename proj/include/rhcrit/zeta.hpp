#pragma once

// Arbitrary-precision zeta, log-gamma and the completed xi-function.
//
// zeta uses Borwein's alternating-series acceleration for Re z >= -1/4 and
// the reflection formula below that; the term count is sized from the
// working precision and |Im z|, which keeps the method valid on every
// circle |z - 1/2| <= 8 used by the contour-differentiation layer (the
// nearest 1 - 2^(1-s) = 0 points sit at |Im| ~ 9.06).
//
// log_gamma is the Stirling series with Bernoulli numbers after shifting
// the argument right far enough for the asymptotic tail to drop below the
// working precision.  The returned branch is only pinned modulo 2*pi*i by
// the shift logs; all consumers exponentiate, so this is sufficient.

#include <rhcrit/complex.hpp>
#include <rhcrit/rational.hpp>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace rhcrit {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Bernoulli numbers B_0, B_1, B_2, ... (B_1 = -1/2), exact and cached.
inline Rational bernoulli(unsigned m) {
  static std::vector<Rational> cache = {Rational(1)};
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  while (cache.size() <= m) {
    unsigned k = static_cast<unsigned>(cache.size());
    if (k > 1 && k % 2 == 1) {
      cache.push_back(Rational(0));
      continue;
    }
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j)
      s += Rational(binom(k + 1, j)) * cache[j];
    cache.push_back(-s / Rational(k + 1));
  }
  return cache[m];
}

namespace detail {

inline Complex sin_c(const Complex& z) {
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

// Borwein Chebyshev weights d_0..d_n, exact, converted at current precision.
inline std::vector<Real> borwein_d(unsigned n) {
  std::vector<Real> d(n + 1);
  BigInt t = 1;  // t_i = (n+i-1)! 4^i / ((n-i)! (2i)!), t_0 = 1
  BigInt acc = 1;
  d[0] = Real(BigInt(n));
  for (unsigned i = 1; i <= n; ++i) {
    t *= 4 * BigInt(n + i - 1) * BigInt(n - i + 1);
    t /= BigInt(2 * i) * BigInt(2 * i - 1);
    acc += t;
    d[i] = Real(acc * n);
  }
  return d;
}

inline unsigned borwein_terms(unsigned wp, const Real& abs_im) {
  double t = std::max(0.0, static_cast<double>(abs_im));
  double need = wp * 0.6931471805599453 + 1.5707963267948966 * t +
                std::log(3.0 + 2.0 * t) + 8.0;
  return static_cast<unsigned>(need / 1.7627471740390861) + 12;  // ln(3+sqrt 8)
}

// Valid for Re s >= -1/4 (checked against the reflection route), s != 1.
inline Complex zeta_borwein(const Complex& s, unsigned wp) {
  unsigned n = borwein_terms(wp, abs(s.im));
  std::vector<Real> d = borwein_d(n);
  Complex sum;
  for (unsigned k = 0; k < n; ++k) {
    Real lk = log(Real(k + 1));
    Complex p = exp(Complex(-s.re * lk, -s.im * lk));  // (k+1)^-s
    Real w = d[k] - d[n];
    if (k & 1) w = -w;
    sum += p * w;
  }
  Real l2 = log(Real(2));
  Complex s1{1 - s.re, -s.im};
  Complex denom = Real(1) - exp(Complex(s1.re * l2, s1.im * l2));  // 1 - 2^(1-s)
  Complex r = sum / denom;
  return {-r.re / d[n], -r.im / d[n]};
}

inline Complex log_gamma_impl(const Complex& z, unsigned wp) {
  double target = (wp + 16) * 0.6931471805599453 / (2 * 3.141592653589793) + 4.0;
  long shift = 0;
  double re = static_cast<double>(z.re);
  if (re < target) shift = static_cast<long>(std::ceil(target - re));
  Complex w = z + Real(shift);

  Real pi = const_pi();
  Complex lw = log(w);
  Complex acc = (w - Real(0.5)) * lw - w + Real(log(2 * pi) / 2);
  Complex winv = Real(1) / w;
  Complex w2inv = winv * winv;
  Complex cur = winv;
  Real tol = pow2(-static_cast<long>(wp) - 4);
  unsigned kmax = static_cast<unsigned>(3.1416 * target) + 16;
  for (unsigned k = 1; k <= kmax; ++k) {
    Real c = to_real(bernoulli(2 * k) / Rational(BigInt(2 * k) * BigInt(2 * k - 1)));
    Complex term = cur * c;
    acc += term;
    if (abs(term) < tol * (abs(acc) + 1)) break;
    cur *= w2inv;
  }
  for (long j = 0; j < shift; ++j) acc -= log(z + Real(j));
  return acc;
}

}  // namespace detail

inline Complex zeta(const Complex& z, const PrecisionCtx& ctx) {
  ctx.validate();
  if (z.re == 1 && z.im == 0) throw PoleError("zeta: pole at z = 1");
  PrecisionGuard guard(ctx.working_bits());
  unsigned wp = ctx.working_bits();
  Complex zz{Real(z.re), Real(z.im)};  // re-rounded at working precision
  if (zz.re >= Real(-0.25)) return detail::zeta_borwein(zz, wp);
  // reflection: zeta(z) = 2^z pi^(z-1) sin(pi z / 2) Gamma(1-z) zeta(1-z)
  Complex oneminus = Real(1) - zz;
  Complex zeta_ref = detail::zeta_borwein(oneminus, wp);
  Real pi = const_pi();
  Complex lg = detail::log_gamma_impl(oneminus, wp);
  Complex factor = exp(zz * log(Real(2)) + (zz - Real(1)) * log(pi) + lg);
  return factor * detail::sin_c(zz * (pi / 2)) * zeta_ref;
}

inline Complex log_gamma(const Complex& z, const PrecisionCtx& ctx) {
  ctx.validate();
  if (z.im == 0 && z.re <= 0) {
    Real r = z.re;
    if (floor(r) == r) throw PoleError("log_gamma: pole at nonpositive integer");
  }
  PrecisionGuard guard(ctx.working_bits());
  return detail::log_gamma_impl(Complex{Real(z.re), Real(z.im)}, ctx.working_bits());
}

// xi(z) = 1/2 z (z-1) pi^(-z/2) Gamma(z/2) zeta(z); entire, xi(z) = xi(1-z).
inline Complex xi(const Complex& z, const PrecisionCtx& ctx) {
  ctx.validate();
  PrecisionGuard guard(ctx.working_bits());
  Real tiny = pow2(-static_cast<long>(ctx.bits) / 2);
  if (abs(z) <= tiny || abs(z - Real(1)) <= tiny)
    throw std::domain_error("xi: z too close to the removable singularities at 0 and 1");
  Complex zz{Real(z.re), Real(z.im)};
  Complex half_z = zz * Real(0.5);
  if (half_z.im == 0 && half_z.re <= 0 && floor(half_z.re) == half_z.re)
    // the Gamma pole cancels a trivial zeta zero; evaluate at the reflection
    return xi(Complex{Real(1) - zz.re, -zz.im}, ctx);
  Complex lg = detail::log_gamma_impl(half_z, ctx.working_bits());
  Complex zt = zeta(zz, ctx);
  Complex pref = exp(lg - half_z * log(const_pi()));
  return Real(0.5) * zz * (zz - Real(1)) * pref * zt;
}

}  // namespace rhcrit
