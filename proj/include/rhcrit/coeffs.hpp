#pragma once

// Exact coefficient tables for the modified zero-sums and the derivative
// criterion: A_{k,n} = a^(2k-2n) * sum_{l=k..n} C(2n,2l) C(l,k) and the
// even polynomial F_2n with coefficients 4(n-k) A_{k,n}.

#include <rhcrit/rational.hpp>

#include <stdexcept>
#include <vector>

namespace rhcrit {

// Validated lower bound on a.  Values in (1/14, 1/4] are accepted but
// flagged: the theorem statement asks for a > 1/4 while the surrounding
// argument only needs the cut to stay inside |t| < 14, i.e. a > 1/14.
inline constexpr const char* kABoundNote =
    "a in (1/14, 1/4]: accepted per the zero-free strip |t| <= 14, "
    "outside the literal a > 1/4 theorem statement";

inline void validate_a(const Rational& a) {
  if (a * 14 <= 1)
    throw std::domain_error("coefficients require a > 1/14, got a = " + to_string(a));
}

inline bool a_bound_warning(const Rational& a) { return a * 4 <= 1; }

inline Rational coeff_A(unsigned n, unsigned k, const Rational& a) {
  if (n == 0) throw std::domain_error("coeff_A: n must be positive");
  if (k > n) throw std::domain_error("coeff_A: k out of range");
  if (a == 0) throw std::domain_error("coeff_A: a must be nonzero");
  BigInt s = 0;
  for (unsigned l = k; l <= n; ++l) s += binom(2 * n, 2 * l) * binom(l, k);
  // a^(2k-2n) with 2n-2k >= 0: multiply by den^(2n-2k) / num^(2n-2k)
  unsigned e = 2 * (n - k);
  BigInt pn = 1, pd = 1;
  for (unsigned i = 0; i < e; ++i) {
    pn *= numerator(a);
    pd *= denominator(a);
  }
  return make_rational(s * pd, pn);
}

struct CoeffTable {
  unsigned n = 0;
  Rational a;
  std::vector<Rational> A;  // index k = 0..n
  std::vector<Rational> F;  // index k = 0..n-1, F[k] = 4(n-k) A[k]
  bool a_warning = false;   // a was in the (1/14, 1/4] zone
};

inline CoeffTable build_coeff_table(unsigned n, const Rational& a) {
  if (n == 0) throw std::domain_error("build_coeff_table: n must be positive");
  validate_a(a);
  CoeffTable t;
  t.n = n;
  t.a = a;
  t.a_warning = a_bound_warning(a);
  t.A.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) t.A.push_back(coeff_A(n, k, a));
  t.F.reserve(n);
  for (unsigned k = 0; k < n; ++k) t.F.push_back(Rational(4 * (n - k)) * t.A[k]);
  return t;
}

// d^order/dz^order F_2n(z) at z = 1/2.  Odd orders vanish identically and
// are rejected so callers cannot silently drop the parity argument.
inline Rational F_deriv_at_half(const CoeffTable& table, unsigned order) {
  if (order % 2 != 0)
    throw std::domain_error("F_deriv_at_half: odd orders are identically zero; pass even orders only");
  unsigned k = order / 2;
  if (k >= table.n) return Rational(0);
  return table.F[k] * Rational(factorial(order));
}

}  // namespace rhcrit
