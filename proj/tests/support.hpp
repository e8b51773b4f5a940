#pragma once

// Shared fixtures and independent reference computations for the unit tests.

#include <cmath>
#include <cstdint>

#include "resonlab/arith.hpp"

namespace resonlab::testing {

inline const arith::PrimeTable& primes_1e6() {
  static const arith::PrimeTable t(1'000'000);
  return t;
}

inline const arith::PrimeTable& primes_1e7() {
  static const arith::PrimeTable t(10'000'000);
  return t;
}

inline bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Λ(n) by trial division.
inline double von_mangoldt_slow(std::uint64_t n) {
  if (n < 2) return 0.0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      std::uint64_t m = n;
      while (m % p == 0) m /= p;
      return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
  }
  return 0.0;
}

/// c(σ) = Σ_{k>=1} 2^{-k} / (kσ + 1), from expanding t^σ/(2 - t^σ) as a
/// geometric series in t^σ/2 and integrating termwise.
inline double c_sigma_series(double sigma) {
  double sum = 0.0;
  double w = 0.5;
  for (int k = 1; k <= 80; ++k) {
    sum += w / (k * sigma + 1.0);
    w *= 0.5;
  }
  return sum;
}

}  // namespace resonlab::testing
