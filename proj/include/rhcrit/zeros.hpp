#pragma once

// Ingestion of nontrivial-zero ordinate tables and truncation-tail bounds.
//
// A table lists the positive ordinates t_k in ascending order, one decimal
// per line, '#' lines ignored.  Each ordinate stands for the zero pair
// 1/2 +- i t_k; the summation layers exploit that the summands are even in
// z - 1/2, so a pair contributes twice the real part at 1/2 + i t_k.

#include <rhcrit/coeffs.hpp>
#include <rhcrit/precision.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhcrit {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroTable {
  std::vector<Real> ordinates;  // strictly ascending, all > 14
  std::string source_path;
  unsigned declared_digits = 0;

  size_t size() const { return ordinates.size(); }
};

inline ZeroTable load_zeros(const std::string& path, unsigned declared_digits) {
  if (declared_digits == 0)
    throw std::domain_error("load_zeros: declared_digits must be positive");
  std::ifstream in(path);
  if (!in) throw ParseError("load_zeros: cannot open " + path);

  // parse precision: enough for the declared digits plus slack
  unsigned parse_bits = std::max(64u, static_cast<unsigned>(declared_digits * 3.33) + 16);
  PrecisionGuard guard(parse_bits);

  ZeroTable table;
  table.source_path = path;
  table.declared_digits = declared_digits;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);
    if (tok[0] == '#') continue;
    Real t;
    try {
      t = Real(tok);
    } catch (const std::exception&) {
      throw ParseError("load_zeros: non-numeric line " + std::to_string(lineno) + " in " + path);
    }
    if (!mpfr_number_p(t.backend().data()))
      throw ParseError("load_zeros: non-finite value at line " + std::to_string(lineno));
    if (table.ordinates.empty()) {
      if (t <= 14)
        throw ParseError("load_zeros: first ordinate must exceed 14 (line " +
                         std::to_string(lineno) + ")");
    } else if (t <= table.ordinates.back()) {
      throw ParseError("load_zeros: ordinates not strictly ascending at line " +
                       std::to_string(lineno));
    }
    table.ordinates.push_back(std::move(t));
  }
  if (table.ordinates.empty()) throw ParseError("load_zeros: no ordinates in " + path);
  return table;
}

// Riemann-von Mangoldt main term: (T/2pi) ln(T/2pi) - T/2pi + 7/8.
inline Real zero_count_estimate(const Real& T) {
  PrecisionGuard guard(128);
  Real two_pi = 2 * const_pi();
  if (!(T > two_pi)) throw std::domain_error("zero_count_estimate: need T > 2*pi");
  Real x = T / two_pi;
  return x * log(x) - x + Real("0.875");
}

struct TailEstimate {
  Real T;           // last ordinate used
  Real bound;       // bound on the discarded sum, zeros assumed on-line
  std::string model;
};

// Bound on |sum over zeros with t > T of f_2n(rho)|, assuming those zeros
// lie on the critical line: the summand is 2 A_{n-1,n}/t^2 + O(t^-4) and
// the zero density is (1/2pi) ln(t/2pi); safety factor 2 absorbs both the
// density fluctuation and the t^-4 correction.
inline TailEstimate tail_bound(unsigned n, const Rational& a, const Real& T) {
  if (n == 0) throw std::domain_error("tail_bound: n must be positive");
  if (!(T > 14)) throw std::domain_error("tail_bound: T must exceed the first ordinate");
  PrecisionGuard guard(128);
  Rational lead = Rational(2 * BigInt(n) * BigInt(n)) /
                  (Rational(numerator(a) * numerator(a), denominator(a) * denominator(a)));
  Real A = to_real(lead);  // A_{n-1,n} = 2 n^2 / a^2
  Real two_pi = 2 * const_pi();
  Real safety = 2;
  Real bound = (2 * A / const_pi()) * (log(T / two_pi) + 1) / T * safety;
  TailEstimate est;
  est.T = T;
  est.bound = bound;
  est.model = "(2*A_{n-1,n}/pi) * (ln(T/2pi)+1)/T * " + std::string("2 (safety)") +
              ", A_{n-1,n} = " + to_string(lead);
  return est;
}

}  // namespace rhcrit
