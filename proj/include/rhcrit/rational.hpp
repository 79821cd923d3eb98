#pragma once

// Exact rational arithmetic (GMP-backed) plus binomial coefficients via a
// cached Pascal triangle.  Everything here is exact; floating error only
// enters once values are converted to Real by the evaluation layers.

#include <rhcrit/precision.hpp>

#include <boost/multiprecision/gmp.hpp>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhcrit {

using BigInt = mp::mpz_int;
using Rational = mp::mpq_rational;

// mpq string construction does not canonicalize; always go through here.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational q(num, den);
  mpq_canonicalize(q.backend().data());
  return q;
}

// Accepts "p", "p/q", or a plain decimal string like "-0.25"; the result is
// the exact rational value of the input.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return make_rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return make_rational(BigInt(text), 1);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0) return make_rational(BigInt(digits), 1);
  for (size_t i = dot + 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("rational: bad decimal string '" + text + "'");
  // strip leading zeros so the GMP string constructor cannot read them as octal
  size_t start = digits.find_first_of("+-") == 0 ? 1 : 0;
  size_t first = digits.find_first_not_of('0', start);
  std::string trimmed = digits.substr(0, start) +
                        (first == std::string::npos ? "0" : digits.substr(first));
  BigInt den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return make_rational(BigInt(trimmed), den);
}

inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// C(l, k), with the usual convention C(l, k) = 0 for k > l.
// Rows are cached; the table grows on demand and is shared.
inline const std::vector<BigInt>& pascal_row(unsigned l) {
  static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  while (rows.size() <= l) {
    const auto& prev = rows.back();
    std::vector<BigInt> next(prev.size() + 1, BigInt(1));
    for (size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(next));
  }
  return rows[l];
}

inline BigInt binom(unsigned l, unsigned k) {
  if (k > l) return 0;
  return pascal_row(l)[k];
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Conversion to Real, correctly rounded at the current default precision.
inline Real to_real(const Rational& q) { return Real(q); }

}  // namespace rhcrit
