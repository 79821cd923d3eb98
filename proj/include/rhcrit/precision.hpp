#pragma once

// Arbitrary-precision real scaffolding: MPFR-backed reals with explicit
// working precision.  Precision is never ambient global state from the
// caller's point of view; every evaluation takes a PrecisionCtx and runs
// its internals at bits + guard_bits.

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>

namespace rhcrit {

namespace mp = boost::multiprecision;

using Real = mp::number<mp::mpfr_float_backend<0, mp::allocate_dynamic>, mp::et_off>;

struct PrecisionCtx {
  unsigned bits = 256;       // reported mantissa precision
  unsigned guard_bits = 64;  // extra internal bits

  unsigned working_bits() const { return bits + guard_bits; }

  void validate() const {
    if (bits < 64) throw std::domain_error("PrecisionCtx: bits must be >= 64");
  }
};

inline unsigned bits_to_digits10(unsigned bits) {
  // floor(bits * log10(2)) + 2, so the mpfr mantissa is at least `bits` wide
  return static_cast<unsigned>(bits * 30103ull / 100000ull) + 2;
}

// Scoped default precision for freshly constructed Real temporaries.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Re-round a value (possibly carried at a different precision) into a
// fresh Real at the current default precision.
inline Real widen(const Real& x) {
  Real r(0);
  r += x;
  return r;
}

inline Real const_pi() {
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

// 2^-e at the current default precision
inline Real pow2(long e) {
  Real r = 1;
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

}  // namespace rhcrit
