#pragma once

// The criteria engine: every positivity criterion evaluated by this
// project, plus the identities connecting zero-sums to derivatives.
//
// Zero-sums use the single-valued rational form
//   f_2n(z) = 2 - 2 (z-1/2)^(-2n) sum_k A_{k,n} (z-1/2)^(2k)
// in the hot path; the nested square-root forms (the original sum and the
// conformal maps) exist for identity tests and the `voros` front end.

#include <rhcrit/coeffs.hpp>
#include <rhcrit/contour.hpp>
#include <rhcrit/zeros.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rhcrit {

enum class CriterionKind { VOROS_EQ1, MODIFIED_SUM, DERIVATIVE, LI_SUM, GEN_LI_SUM, MULTISET };
enum class Verdict { NONNEGATIVE_WITHIN_ERROR, NEGATIVE, INDETERMINATE };

inline const char* to_string(CriterionKind k) {
  switch (k) {
    case CriterionKind::VOROS_EQ1: return "VOROS_EQ1";
    case CriterionKind::MODIFIED_SUM: return "MODIFIED_SUM";
    case CriterionKind::DERIVATIVE: return "DERIVATIVE";
    case CriterionKind::LI_SUM: return "LI_SUM";
    case CriterionKind::GEN_LI_SUM: return "GEN_LI_SUM";
    case CriterionKind::MULTISET: return "MULTISET";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NONNEGATIVE_WITHIN_ERROR: return "NONNEGATIVE_WITHIN_ERROR";
    case Verdict::NEGATIVE: return "NEGATIVE";
    case Verdict::INDETERMINATE: return "INDETERMINATE";
  }
  return "?";
}

struct CriterionParams {
  unsigned n = 1;
  Rational a = Rational(2);
  Real sigma = Real(0.5);

  Real cut_halflength() const { return Real(1) / to_real(a); }
};

struct CriterionResult {
  CriterionKind kind = CriterionKind::MODIFIED_SUM;
  CriterionParams params;
  size_t zeros_used = 0;
  Real T = Real(0);     // last ordinate used, 0 when no zero table involved
  Real value = Real(0); // real part for MULTISET
  Real value_im = Real(0);
  std::optional<TailEstimate> tail;  // error bound; contour error for DERIVATIVE
  Verdict verdict = Verdict::INDETERMINATE;

  // second computation route, where one exists (LI_SUM, GEN_LI_SUM)
  std::optional<Real> alt_value;
  std::optional<Real> alt_error;
  bool consistent = true;
};

inline Verdict classify(const Real& value, const Real& bound) {
  if (value - bound >= 0) return Verdict::NONNEGATIVE_WITHIN_ERROR;
  if (value + bound < 0) return Verdict::NEGATIVE;
  return Verdict::INDETERMINATE;
}

// Square root with a fixed determination: positive on the positive
// reals, continued across the plane cut along (-inf, 0].  Landing on or
// numerically indistinguishable from the cut is an error, not a choice.
inline Complex sqrt_cut(const Complex& z, const PrecisionCtx& ctx) {
  ctx.validate();
  Real tol = pow2(-static_cast<long>(ctx.bits) / 2);
  if (z.re < 0 && abs(z.im) < tol)
    throw std::domain_error("sqrt_cut: argument on or hugging the cut (-inf, 0]");
  return sqrt(z);
}

enum class MapBranch { PLUS, MINUS };

// f(z) = (1 +- sqrt(1 + a^2 (z-1/2)^2)) / (a (z-1/2)).  PLUS maps the cut
// plane onto |w| >= 1, MINUS onto |w| <= 1, with |w| = 1 on the critical
// line beyond the cut.
inline Complex f_map(const Complex& z, const Rational& a, MapBranch branch,
                     const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx.working_bits());
  Complex w = z - Real(0.5);
  if (w.re == 0 && w.im == 0) throw PoleError("f_map: pole at z = 1/2");
  Real ar = to_real(a);
  Complex x = Real(1) + (ar * ar) * (w * w);
  Complex s;
  if (w.re == 0 && x.re < 0) {
    // on the line beyond the cut the argument is a negative real; take the
    // boundary value continued from Re z > 1/2, which keeps |f| = 1 there
    Real root = sqrt(-x.re);
    s = Complex{Real(0), w.im > 0 ? root : -root};
  } else {
    s = sqrt_cut(x, ctx);
  }
  Complex num = branch == MapBranch::PLUS ? Real(1) + s : Real(1) - s;
  return num / (ar * w);
}

// Coefficient table converted to Real at the current default precision.
struct CoeffTableReal {
  unsigned n = 0;
  std::vector<Real> A;
};

inline CoeffTableReal to_real(const CoeffTable& t) {
  CoeffTableReal r;
  r.n = t.n;
  r.A.reserve(t.A.size());
  for (const auto& q : t.A) r.A.push_back(to_real(q));
  return r;
}

inline Complex f2n_eval(const Complex& z, const CoeffTableReal& table,
                        const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx.working_bits());
  Complex w = z - Real(0.5);
  if (w.re == 0 && w.im == 0) throw PoleError("f2n_eval: pole at z = 1/2");
  Complex q = Real(1) / (w * w);
  Complex acc(Real(table.A[0]));
  for (size_t k = 1; k < table.A.size(); ++k) acc = acc * q + Complex(table.A[k]);
  return Real(2) - Real(2) * acc;
}

inline Complex f2n_eval(const Complex& z, unsigned n, const Rational& a,
                        const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx.working_bits());
  return f2n_eval(z, to_real(build_coeff_table(n, a)), ctx);
}

// f_2n at 1/2 + i t for real t > 0: real-valued, computed in real
// arithmetic.  Horner in q = (z-1/2)^-2 = -1/t^2 yields
// sum_k A_k (z-1/2)^(2k-2n) directly, signs included.
inline Real f2n_on_line(const Real& t, const CoeffTableReal& table) {
  Real q = Real(-1) / (t * t);
  Real acc = table.A[0];
  for (size_t k = 1; k < table.A.size(); ++k) acc = acc * q + table.A[k];
  return 2 - 2 * acc;
}

// One Voros summand, computed verbatim from the nested square-root form.
inline Complex voros_term(const Complex& z, unsigned n, const PrecisionCtx& ctx) {
  PrecisionGuard guard(ctx.working_bits());
  Complex w = z - Real(0.5);
  if (w.re == 0 && w.im == 0) throw PoleError("voros_term: pole at z = 1/2");
  Complex w2inv = Real(1) / (w * w);
  Complex root = sqrt_cut(Real(1) + w2inv * Real(0.25), ctx);
  Complex base_m = Real(1) + w2inv * Real(0.5) - root / w;
  Complex base_p = Real(1) + w2inv * Real(0.5) + root / w;
  Complex term = Real(2) - pow_int(Real(1) / base_m, static_cast<long>(n)) -
                 pow_int(Real(1) / base_p, static_cast<long>(n));
  return term;
}

inline CriterionResult modified_sum(const CriterionParams& params, const ZeroTable& zeros,
                                    size_t max_zeros, const PrecisionCtx& ctx) {
  ctx.validate();
  if (max_zeros == 0 || max_zeros > zeros.size())
    throw std::domain_error("modified_sum: max_zeros must be in 1..table size");
  PrecisionGuard guard(ctx.working_bits());
  CoeffTableReal table = to_real(build_coeff_table(params.n, params.a));
  Real value = 0;
  for (size_t k = 0; k < max_zeros; ++k) {
    Real t = widen(zeros.ordinates[k]);
    value += 2 * f2n_on_line(t, table);  // zero pair at 1/2 +- i t
  }
  CriterionResult r;
  r.kind = CriterionKind::MODIFIED_SUM;
  r.params = params;
  r.zeros_used = max_zeros;
  r.T = widen(zeros.ordinates[max_zeros - 1]);
  r.value = value;
  r.tail = tail_bound(params.n, params.a, r.T);
  r.verdict = classify(r.value, r.tail->bound);
  return r;
}

// Same truncated sum but through the square-root form of the summand
// (a = 2 specialization of the criterion as originally printed).
inline CriterionResult voros_sum(unsigned n, const ZeroTable& zeros, size_t max_zeros,
                                 const PrecisionCtx& ctx) {
  ctx.validate();
  if (max_zeros == 0 || max_zeros > zeros.size())
    throw std::domain_error("voros_sum: max_zeros must be in 1..table size");
  PrecisionGuard guard(ctx.working_bits());
  Real value = 0;
  for (size_t k = 0; k < max_zeros; ++k) {
    Real t = widen(zeros.ordinates[k]);
    Complex term = voros_term(Complex{Real(0.5), t}, n, ctx);
    value += 2 * term.re;
  }
  CriterionResult r;
  r.kind = CriterionKind::VOROS_EQ1;
  r.params.n = n;
  r.params.a = Rational(2);
  r.zeros_used = max_zeros;
  r.T = widen(zeros.ordinates[max_zeros - 1]);
  r.value = value;
  r.tail = tail_bound(n, Rational(2), r.T);
  r.verdict = classify(r.value, r.tail->bound);
  return r;
}

// (1/(2n-1)!) d^2n/dz^2n (F_2n(z) ln xi(z)) at z = 1/2, via Leibniz with
// the odd terms dropped (both factors are even in z - 1/2).
inline CriterionResult derivative_criterion(const CriterionParams& params,
                                            const DerivSeries& derivs) {
  if (derivs.tag != FunctionTag::LOG_XI)
    throw std::domain_error("derivative_criterion: needs a LOG_XI series");
  unsigned n = params.n;
  if (derivs.max_order() < 2 * n)
    throw std::domain_error("derivative_criterion: series does not cover order 2n");
  PrecisionGuard guard(derivs.bits + 64);
  CoeffTable table = build_coeff_table(n, params.a);
  Rational fact_2n1(factorial(2 * n - 1));
  Real value = 0, err = 0;
  for (unsigned k = 0; k < n; ++k) {
    Rational c = Rational(binom(2 * n, 2 * k)) * F_deriv_at_half(table, 2 * k) / fact_2n1;
    Real cr = to_real(c);
    value += cr * derivs.orders[2 * n - 2 * k];
    err += abs(cr) * derivs.error_estimate[2 * n - 2 * k];
  }
  CriterionResult r;
  r.kind = CriterionKind::DERIVATIVE;
  r.params = params;
  r.value = value;
  TailEstimate e;
  e.T = Real(0);
  e.bound = err;
  e.model = "propagated contour error estimates";
  r.tail = e;
  r.verdict = classify(value, err);
  return r;
}

// Derivative criterion with F_2n augmented by b (z-1/2)^(2l+1).  The
// augmentation couples only to the odd-order derivatives of ln xi, which
// vanish by symmetry, so the value must be unchanged within error.
inline CriterionResult derivative_criterion_augmented(const CriterionParams& params,
                                                      const DerivSeries& derivs,
                                                      const Real& b, unsigned l) {
  CriterionResult r = derivative_criterion(params, derivs);
  unsigned n = params.n;
  unsigned j = 2 * l + 1;
  if (j > 2 * n) return r;  // derivative of the monomial vanishes identically
  PrecisionGuard guard(derivs.bits + 64);
  Rational c = Rational(binom(2 * n, j) * factorial(j)) / Rational(factorial(2 * n - 1));
  Real cr = to_real(c);
  r.value += cr * b * derivs.orders[2 * n - j];
  r.tail->bound += abs(cr * b) * derivs.error_estimate[2 * n - j];
  r.verdict = classify(r.value, r.tail->bound);
  return r;
}

// Empirical normalization between the truncated zero-sum and the
// derivative expression; used to pin the identity's constant (1 or 1/(2n)).
inline Real identity_ratio(unsigned n, const Rational& a, const ZeroTable& zeros,
                           size_t max_zeros, const DerivSeries& derivs,
                           const PrecisionCtx& ctx) {
  CriterionParams p;
  p.n = n;
  p.a = a;
  CriterionResult sum = modified_sum(p, zeros, max_zeros, ctx);
  CriterionResult der = derivative_criterion(p, derivs);
  PrecisionGuard guard(ctx.working_bits());
  if (abs(der.value) <= der.tail->bound)
    throw NumericalError("identity_ratio: derivative value indistinguishable from 0");
  return sum.value / der.value;
}

enum class IdentityLaw { CONSTANT_ONE, INVERSE_2N };

inline const char* to_string(IdentityLaw law) {
  return law == IdentityLaw::CONSTANT_ONE ? "1" : "1/(2n)";
}

inline IdentityLaw fit_identity_law(const std::vector<std::pair<unsigned, Real>>& ratios) {
  Real res_one = 0, res_inv = 0;
  for (const auto& [n, ratio] : ratios) {
    res_one += abs(ratio - 1);
    res_inv += abs(ratio * (2 * n) - 1);
  }
  return res_one <= res_inv ? IdentityLaw::CONSTANT_ONE : IdentityLaw::INVERSE_2N;
}

namespace detail {

// Tail model for the Li-type sums: expanding 1 - (1 - 1/rho)^n, the 1/rho
// and 1/rho^2 terms together give ~n^2/t^2 per zero; safety factor 2 as in
// tail_bound.
inline TailEstimate li_tail(unsigned n, const Real& T) {
  PrecisionGuard guard(128);
  TailEstimate e;
  e.T = T;
  e.bound = Real(n) * Real(n) / const_pi() * (log(T / (2 * const_pi())) + 1) / T * 2;
  e.model = "(n^2/pi) * (ln(T/2pi)+1)/T * 2 (safety)";
  return e;
}

}  // namespace detail

// Li's lambda_n: contour route (d^n of z^(n-1) ln xi at z = 1) and
// truncated zero-sum route, both reported.  An existing contour around 1
// can be supplied to amortize sampling across n.
inline CriterionResult li_lambda(unsigned n, const ZeroTable& zeros, size_t max_zeros,
                                 const PrecisionCtx& ctx, const XiContour* contour = nullptr) {
  if (n == 0) throw std::domain_error("li_lambda: n must be positive");
  if (max_zeros == 0 || max_zeros > zeros.size())
    throw std::domain_error("li_lambda: max_zeros must be in 1..table size");
  ctx.validate();
  PrecisionGuard guard(ctx.working_bits());

  std::optional<XiContour> own;
  if (!contour) {
    own.emplace(FunctionTag::LOG_XI, Real(1), Real("1.5"),
                std::max(64u, 8u * std::max(2u, n + n % 2)), ctx);
    contour = &*own;
  }
  DerivSeries d = contour->derivs(n, [&](const Complex& z) {
    return pow_int(z, static_cast<long>(n) - 1);
  });
  Rational fct(factorial(n - 1));
  Real fct_r = to_real(fct);
  Real value = d.orders[n] / fct_r;
  Real err = d.error_estimate[n] / fct_r;

  Real zsum = 0;
  for (size_t k = 0; k < max_zeros; ++k) {
    Real t = widen(zeros.ordinates[k]);
    Complex rho{Real(0.5), t};
    Complex term = Real(1) - pow_int(Real(1) - Real(1) / rho, static_cast<long>(n));
    zsum += 2 * term.re;
  }

  CriterionResult r;
  r.kind = CriterionKind::LI_SUM;
  r.params.n = n;
  r.params.a = Rational(0);
  r.zeros_used = max_zeros;
  r.T = widen(zeros.ordinates[max_zeros - 1]);
  r.value = value;
  TailEstimate e;
  e.T = Real(0);
  e.bound = err;
  e.model = "propagated contour error estimates";
  r.tail = e;
  r.verdict = classify(value, err);
  r.alt_value = zsum;
  TailEstimate zt = detail::li_tail(n, r.T);
  r.alt_error = zt.bound;
  r.consistent = abs(value - zsum) <= err + zt.bound;
  return r;
}

// Generalized Li sum: the truncated sum of 1 - ((rho+a)/(rho-1-a))^n as
// printed, plus the derivative form (1/(n-1)!) d^n ((z-a)^(n-1) ln xi) at
// z = 1-a.  The two need not visibly coincide for a != 0; disagreement is
// flagged, not patched.
inline CriterionResult gen_li_sum(unsigned n, const Real& a, const ZeroTable& zeros,
                                  size_t max_zeros, const PrecisionCtx& ctx) {
  if (n == 0) throw std::domain_error("gen_li_sum: n must be positive");
  if (a == Real(0.5)) throw std::domain_error("gen_li_sum: a = 1/2 is excluded");
  if (max_zeros == 0 || max_zeros > zeros.size())
    throw std::domain_error("gen_li_sum: max_zeros must be in 1..table size");
  ctx.validate();
  PrecisionGuard guard(ctx.working_bits());

  Real zsum = 0;
  for (size_t k = 0; k < max_zeros; ++k) {
    Real t = widen(zeros.ordinates[k]);
    Complex rho{Real(0.5), t};
    Complex ratio = (rho + a) / (rho - Real(1) - a);
    Complex term = Real(1) - pow_int(ratio, static_cast<long>(n));
    zsum += 2 * term.re;
  }

  XiContour contour(FunctionTag::LOG_XI, Real(1) - a, Real("1.5"),
                    std::max(64u, 8u * std::max(2u, n + n % 2)), ctx);
  DerivSeries d = contour.derivs(n, [&](const Complex& z) {
    return pow_int(z - a, static_cast<long>(n) - 1);
  });
  Real fct_r = to_real(Rational(factorial(n - 1)));
  Real dval = d.orders[n] / fct_r;
  Real derr = d.error_estimate[n] / fct_r;

  CriterionResult r;
  r.kind = CriterionKind::GEN_LI_SUM;
  r.params.n = n;
  r.zeros_used = max_zeros;
  r.T = widen(zeros.ordinates[max_zeros - 1]);
  r.value = zsum;
  r.tail = detail::li_tail(n, r.T);
  r.verdict = classify(zsum, r.tail->bound);
  r.alt_value = dval;
  r.alt_error = derr;
  r.consistent = abs(zsum - dval) <= r.tail->bound + derr;
  return r;
}

struct Multiset {
  struct Element {
    Complex value;
    unsigned multiplicity = 1;
  };
  std::vector<Element> elements;

  // smallest distance of any element from the real axis through sigma
  Real min_abs_im() const {
    Real m = 0;
    bool first = true;
    for (const auto& e : elements) {
      Real a = abs(e.value.im);
      if (first || a < m) m = a, first = false;
    }
    return m;
  }
};

// Finite criterion sum over an arbitrary multiset, recentered at sigma.
// Elements are taken verbatim (no symmetrization); the complex value and
// its real part are both reported.
inline CriterionResult multiset_sum(const Multiset& ms, unsigned n, const Rational& a,
                                    const Real& sigma, const PrecisionCtx& ctx) {
  if (n == 0) throw std::domain_error("multiset_sum: n must be positive");
  ctx.validate();
  PrecisionGuard guard(ctx.working_bits());
  Real cut = Real(1) / to_real(a);
  Real tol = pow2(-static_cast<long>(ctx.bits) / 2);
  size_t idx = 0;
  for (const auto& e : ms.elements) {
    if (abs(e.value.re - sigma) <= tol && abs(e.value.im) <= cut + tol)
      throw std::domain_error("multiset_sum: element #" + std::to_string(idx) +
                              " lies on the cut segment |Im| <= 1/a of the sigma line");
    ++idx;
  }
  CoeffTableReal table = to_real(build_coeff_table(n, a));
  Complex acc;
  Real scale = 0;
  for (const auto& e : ms.elements) {
    Complex w = e.value - Complex(sigma);
    Complex q = Real(1) / (w * w);
    Complex p(Real(table.A[0]));
    for (size_t k = 1; k < table.A.size(); ++k) p = p * q + Complex(table.A[k]);
    Complex term = Real(2) - Real(2) * p;
    acc += Real(static_cast<long>(e.multiplicity)) * term;
    scale += e.multiplicity * abs(term);
  }
  CriterionResult r;
  r.kind = CriterionKind::MULTISET;
  r.params.n = n;
  r.params.a = a;
  r.params.sigma = sigma;
  r.zeros_used = ms.elements.size();
  r.value = acc.re;
  r.value_im = acc.im;
  TailEstimate e;
  e.T = Real(0);
  e.bound = (scale + 1) * pow2(-static_cast<long>(ctx.bits) + 8);
  e.model = "finite sum; rounding bound only";
  r.tail = e;
  r.verdict = classify(r.value, r.tail->bound);
  return r;
}

}  // namespace rhcrit
