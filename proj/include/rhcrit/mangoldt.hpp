#pragma once

// Arithmetic side: von Mangoldt partial sums and their convergence toward
// -zeta'(a)/zeta(a).  Lambda(m) is kept symbolically as (p, k) with
// m = p^k, so logs are taken at whatever precision the consumer runs at.

#include <rhcrit/contour.hpp>
#include <rhcrit/precision.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rhcrit {

struct MangoldtTable {
  struct PrimePower {
    std::uint64_t m;  // p^k
    std::uint64_t p;
    unsigned k;
  };
  std::uint64_t limit_N = 0;
  std::vector<PrimePower> entries;  // ascending in m, complete up to limit_N

  // Lambda(m) = ln p for m = p^k, else 0, at the current default precision.
  Real lambda(std::uint64_t m) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), m,
                               [](const PrimePower& e, std::uint64_t v) { return e.m < v; });
    if (it == entries.end() || it->m != m) return Real(0);
    return log(Real(static_cast<unsigned long>(it->p)));
  }
};

inline MangoldtTable sieve_mangoldt(std::uint64_t N) {
  if (N < 2) throw std::domain_error("sieve_mangoldt: need N >= 2");
  MangoldtTable t;
  t.limit_N = N;
  std::vector<bool> composite(N + 1, false);
  for (std::uint64_t i = 2; i * i <= N; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= N; j += i) composite[j] = true;
  for (std::uint64_t p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    std::uint64_t m = p;
    unsigned k = 1;
    while (true) {
      t.entries.push_back({m, p, k});
      if (m > N / p) break;
      m *= p;
      ++k;
    }
  }
  std::sort(t.entries.begin(), t.entries.end(),
            [](const auto& x, const auto& y) { return x.m < y.m; });
  return t;
}

// sum_{m<=N} Lambda(m)/m^a - N^(1-a)/(1-a)
inline Real chebyshev_partial(const Real& a, std::uint64_t N, const MangoldtTable& table,
                              const PrecisionCtx& ctx) {
  ctx.validate();
  if (!(a > Real(0.5))) throw std::domain_error("chebyshev_partial: need a > 1/2");
  if (a == 1) throw std::domain_error("chebyshev_partial: compensator degenerates at a = 1");
  if (N > table.limit_N) throw std::domain_error("chebyshev_partial: N beyond sieve limit");
  PrecisionGuard guard(ctx.working_bits());
  Real aa = widen(a);
  Real sum = 0;
  for (const auto& e : table.entries) {
    if (e.m > N) break;
    Real lp = log(Real(static_cast<unsigned long>(e.p)));
    sum += lp * exp(-aa * Real(static_cast<long>(e.k)) * lp);  // ln p / m^a
  }
  Real n_r(static_cast<unsigned long>(N));
  return sum - exp((Real(1) - aa) * log(n_r)) / (Real(1) - aa);
}

// Partial sums of ln zeta(a) = sum Lambda(m)/(ln m * m^a) = sum 1/(k m^a).
inline Real log_zeta_partial(const Real& a, std::uint64_t N, const MangoldtTable& table,
                             const PrecisionCtx& ctx) {
  ctx.validate();
  if (N > table.limit_N) throw std::domain_error("log_zeta_partial: N beyond sieve limit");
  PrecisionGuard guard(ctx.working_bits());
  Real aa = widen(a);
  Real sum = 0;
  for (const auto& e : table.entries) {
    if (e.m > N) break;
    Real lp = log(Real(static_cast<unsigned long>(e.p)));
    sum += exp(-aa * Real(static_cast<long>(e.k)) * lp) / Real(static_cast<long>(e.k));
  }
  return sum;
}

struct ConvergenceReport {
  Real a;
  Real reference;
  bool labeled_exploratory = false;
  struct Checkpoint {
    std::uint64_t N;
    Real partial;
    Real reference;
    Real abs_error;
  };
  std::vector<Checkpoint> checkpoints;  // strictly increasing in N
};

// The a = 1/2 analogue, sum Lambda(m)/sqrt(m) - 2 sqrt(N), against
// -zeta'(1/2)/zeta(1/2).  Whether this converges is open; the report is
// data only and always labeled exploratory.
inline ConvergenceReport halfline_probe(const std::vector<std::uint64_t>& N_checkpoints,
                                        const MangoldtTable& table, const PrecisionCtx& ctx) {
  ctx.validate();
  for (auto N : N_checkpoints)
    if (N > table.limit_N)
      throw std::domain_error("halfline_probe: checkpoint beyond sieve limit");
  PrecisionGuard guard(ctx.working_bits());
  std::vector<std::uint64_t> cps = N_checkpoints;
  std::sort(cps.begin(), cps.end());
  ConvergenceReport rep;
  rep.a = Real(0.5);
  rep.reference = -zeta_log_deriv(Real(0.5), ctx);
  rep.labeled_exploratory = true;
  Real sum = 0;
  size_t idx = 0;
  for (auto N : cps) {
    for (; idx < table.entries.size() && table.entries[idx].m <= N; ++idx) {
      const auto& e = table.entries[idx];
      Real lp = log(Real(static_cast<unsigned long>(e.p)));
      sum += lp * exp(Real(-0.5) * Real(static_cast<long>(e.k)) * lp);
    }
    Real partial = sum - 2 * sqrt(Real(static_cast<unsigned long>(N)));
    rep.checkpoints.push_back({N, partial, rep.reference, abs(partial - rep.reference)});
  }
  return rep;
}

}  // namespace rhcrit
