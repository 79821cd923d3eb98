#pragma once

#include <rhcrit/precision.hpp>

#include <random>
#include <string>

#ifndef RHCRIT_DATA_DIR
#define RHCRIT_DATA_DIR "data"
#endif

namespace testutil {

inline std::string zeros_path() {
  return std::string(RHCRIT_DATA_DIR) + "/zeta_zeros_220k.txt";
}

// Deterministic doubles in [lo, hi); seeded per call site so tests are
// reproducible and order-independent.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long long seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
};

inline rhcrit::Real tol_bits(unsigned bits, int slack = 8) {
  return rhcrit::pow2(-static_cast<long>(bits) + slack);
}

}  // namespace testutil
