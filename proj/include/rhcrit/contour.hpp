#pragma once

// High-order derivatives by discretized Cauchy integrals on circles.
//
// The log-xi route differentiates ln xi directly: ln xi is analytic in
// |z - 1/2| < 14.13 (first zero ordinate), whereas ln zeta has the pole of
// zeta at distance 1/2, so contours of radius 2..8 around the critical
// point converge geometrically.  The phase of ln xi is unwrapped
// continuously along the contour; a jump near pi aborts instead of
// guessing the branch.
//
// Error estimates are empirical: every series is computed from N and 2N
// nodes and the per-order difference is reported, with a rounding floor so
// estimates stay positive.

#include <rhcrit/zeta.hpp>

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rhcrit {

struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FunctionTag { LOG_XI, XI };

struct DerivSeries {
  Complex center;
  FunctionTag tag = FunctionTag::LOG_XI;
  std::vector<Real> orders;          // index m holds the m-th derivative at center
  std::vector<Real> error_estimate;  // same indexing, always positive
  unsigned bits = 0;

  unsigned max_order() const { return static_cast<unsigned>(orders.size()) - 1; }
};

inline unsigned default_nodes(unsigned max_order) {
  return std::max(64u, 8u * max_order);
}

namespace detail {

// Samples a function on the circle center + radius * e^(i theta) at `count`
// equispaced nodes; if take_log, returns the continuously unwrapped log,
// starting from the principal value at theta = 0.
struct ContourSamples {
  Real center;
  Real radius;
  std::vector<Complex> values;
  std::vector<Real> cos_tab, sin_tab;  // cos/sin(2 pi k / count)
};

template <typename F>
ContourSamples sample_contour(const Real& center, const Real& radius, unsigned count,
                              F&& f, bool take_log) {
  ContourSamples s;
  s.center = center;
  s.radius = radius;
  s.cos_tab.resize(count);
  s.sin_tab.resize(count);
  s.values.resize(count);
  Real two_pi = 2 * const_pi();
  for (unsigned j = 0; j < count; ++j) {
    Real theta = two_pi * j / count;
    s.cos_tab[j] = cos(theta);
    s.sin_tab[j] = sin(theta);
    Complex z{center + radius * s.cos_tab[j], radius * s.sin_tab[j]};
    Complex v = f(z);
    if (!is_finite(v)) throw NumericalError("contour: non-finite sample");
    s.values[j] = v;
  }
  if (!take_log) return s;

  Real pi = const_pi();
  Real jump_limit = pi * 3 / 4;
  std::vector<Complex> logs(count);
  logs[0] = log(s.values[0]);
  for (unsigned j = 1; j < count; ++j) {
    Complex ratio = s.values[j] / s.values[j - 1];
    Real dphase = arg(ratio);
    if (abs(dphase) > jump_limit)
      throw ResolutionError("contour: phase jump near pi between adjacent nodes; increase nodes");
    logs[j] = Complex{log(abs(s.values[j])), logs[j - 1].im + dphase};
  }
  Real closure = logs[count - 1].im + arg(s.values[0] / s.values[count - 1]) - logs[0].im;
  if (abs(closure) > pi / 2)
    throw ResolutionError("contour: nonzero winding around the contour (zero or pole enclosed)");
  s.values = std::move(logs);
  return s;
}

// Fourier coefficient c_m over a stride-subset of the samples (stride 2 =
// the coarse half grid), optionally with an entire weight applied per node.
inline Complex fourier_coeff(const ContourSamples& s, unsigned m, unsigned stride,
                             const std::vector<Complex>* weights) {
  unsigned count = static_cast<unsigned>(s.values.size());
  Complex acc;
  for (unsigned j = 0; j < count; j += stride) {
    unsigned idx = static_cast<unsigned>((static_cast<unsigned long long>(m) * j) % count);
    // e^(-i m theta_j)
    Complex e{s.cos_tab[idx], -s.sin_tab[idx]};
    Complex v = s.values[j];
    if (weights) v *= (*weights)[j];
    acc += v * e;
  }
  return acc * (Real(static_cast<long>(stride)) / Real(static_cast<long>(count)));
}

// Builds the derivative series 0..max_order from doubled samples, with the
// N-vs-2N difference as error estimate.  Imaginary residue of each
// coefficient is folded into the error; values are conjugate-symmetric for
// every consumer here, so derivatives are real.
inline DerivSeries derivs_from_samples(const ContourSamples& s, unsigned max_order,
                                       unsigned bits, FunctionTag tag,
                                       const std::vector<Complex>* weights = nullptr) {
  DerivSeries out;
  out.center = Complex(s.center);
  out.tag = tag;
  out.bits = bits;
  Real max_abs = 0;
  for (unsigned j = 0; j < s.values.size(); ++j) {
    Real a = abs(s.values[j]);
    if (weights) a *= abs((*weights)[j]);
    if (a > max_abs) max_abs = a;
  }
  Real floor_scale = (max_abs + 1) * pow2(-static_cast<long>(bits) + 6);
  Real fact = 1;
  Real rpow = 1;
  for (unsigned m = 0; m <= max_order; ++m) {
    if (m > 0) {
      fact *= m;
      rpow *= s.radius;
    }
    Complex fine = fourier_coeff(s, m, 1, weights);
    Complex coarse = fourier_coeff(s, m, 2, weights);
    Real scale = fact / rpow;
    out.orders.push_back(fine.re * scale);
    Real err = (abs(fine - coarse) + abs(fine.im) + floor_scale) * scale;
    out.error_estimate.push_back(err);
  }
  return out;
}

}  // namespace detail

// Reusable sampled contour of ln xi (unwrapped) or xi around a real center.
class XiContour {
 public:
  XiContour(FunctionTag tag, const Real& center, const Real& radius, unsigned nodes,
            const PrecisionCtx& ctx)
      : tag_(tag), ctx_(ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_bits());
    if (radius <= 0) throw std::domain_error("contour: radius must be positive");
    samples_ = detail::sample_contour(
        center, radius, 2 * nodes, [&](const Complex& z) { return xi(z, ctx_); },
        tag == FunctionTag::LOG_XI);
  }

  // Derivatives of weight(z) * f(z) at the center; `weight` must be entire.
  DerivSeries derivs(unsigned max_order,
                     const std::function<Complex(const Complex&)>& weight = nullptr) const {
    PrecisionGuard guard(ctx_.working_bits());
    if (!weight)
      return detail::derivs_from_samples(samples_, max_order, ctx_.bits, tag_);
    std::vector<Complex> w(samples_.values.size());
    unsigned count = static_cast<unsigned>(w.size());
    for (unsigned j = 0; j < count; ++j) {
      Complex z{samples_.center + samples_.radius * samples_.cos_tab[j],
                samples_.radius * samples_.sin_tab[j]};
      w[j] = weight(z);
    }
    return detail::derivs_from_samples(samples_, max_order, ctx_.bits, tag_, &w);
  }

 private:
  FunctionTag tag_;
  PrecisionCtx ctx_;
  detail::ContourSamples samples_;
};

namespace detail {

inline void check_deriv_args(unsigned max_order, const Real& radius, unsigned nodes,
                             const Real& radius_limit) {
  if (max_order == 0 || max_order % 2 != 0)
    throw std::domain_error("deriv series: max_order must be positive and even");
  if (!(radius > 0) || !(radius < radius_limit))
    throw std::domain_error("deriv series: radius out of range");
  if (nodes < 4 * max_order)
    throw std::domain_error("deriv series: need nodes >= 4 * max_order");
}

}  // namespace detail

// (ln xi)^(m)(1/2) for m = 0..max_order.  Radius must stay inside the
// zero-free disk |z - 1/2| < 14.
inline DerivSeries log_xi_even_derivs(unsigned max_order, const Real& radius,
                                      unsigned nodes, const PrecisionCtx& ctx) {
  detail::check_deriv_args(max_order, radius, nodes, Real(14));
  XiContour c(FunctionTag::LOG_XI, Real(0.5), radius, nodes, ctx);
  return c.derivs(max_order);
}

// xi^(m)(1/2); xi is entire but radius <= 8 keeps the samples conditioned.
inline DerivSeries xi_even_derivs(unsigned max_order, const Real& radius,
                                  unsigned nodes, const PrecisionCtx& ctx) {
  detail::check_deriv_args(max_order, radius, nodes, Real("8.0000001"));
  XiContour c(FunctionTag::XI, Real(0.5), radius, nodes, ctx);
  return c.derivs(max_order);
}

// zeta'(a)/zeta(a) for real a (a != 1), by a small direct contour around a.
// Returns the value and stores an empirical error bound in *err if given.
inline Real zeta_log_deriv(const Real& a, const PrecisionCtx& ctx, Real* err = nullptr) {
  ctx.validate();
  if (a == 1) throw PoleError("zeta_log_deriv: pole at a = 1");
  PrecisionGuard guard(ctx.working_bits());
  Real radius = abs(a - Real(1)) / 2;
  if (radius > Real(0.35)) radius = Real(0.35);
  auto s = detail::sample_contour(a, radius, 96,
                                  [&](const Complex& z) { return zeta(z, ctx); }, false);
  DerivSeries d = detail::derivs_from_samples(s, 1, ctx.bits, FunctionTag::XI);
  Complex za = zeta(Complex(a), ctx);
  Real value = d.orders[1] / za.re;
  if (err) *err = d.error_estimate[1] / abs(za.re);
  return value;
}

}  // namespace rhcrit
