#pragma once

// Prime sieve, von Mangoldt lookup, weighted prime sums and the explicit
// constants of the resonance lower bounds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <new>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "resonlab/error.hpp"
#include "resonlab/numeric.hpp"

namespace resonlab::arith {

/// Largest sieve limit accepted. Composites below 2^32 have a least prime
/// factor below 2^16, which is what lets the factor table use 16-bit cells.
inline constexpr std::uint64_t kSieveGuard = std::uint64_t{1} << 32;

/// Primes up to `limit` together with a least-prime-factor table.
///
/// The factor table only stores odd n (even n have factor 2); a zero cell
/// marks an odd prime. Memory is about limit bytes plus 4 bytes per prime.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw DomainError("sieve limit must be at least 2, got " + std::to_string(limit));
    if (limit > kSieveGuard) {
      throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds guard 2^32");
    }
    try {
      build();
    } catch (const std::bad_alloc&) {
      throw ResourceError("out of memory sieving to " + std::to_string(limit));
    }
  }

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }

  /// Least prime factor of n, for 2 <= n <= limit.
  std::uint64_t smallest_factor(std::uint64_t n) const {
    check_range(n);
    if (n < 2) throw DomainError("smallest_factor needs n >= 2");
    if ((n & 1) == 0) return 2;
    const std::uint16_t f = odd_factor_[n >> 1];
    return f == 0 ? n : f;
  }

  bool is_prime(std::uint64_t n) const {
    check_range(n);
    if (n < 2) return false;
    if ((n & 1) == 0) return n == 2;
    return odd_factor_[n >> 1] == 0;
  }

  /// Number of primes <= x (x clipped to the limit).
  std::size_t prime_count(std::uint64_t x) const {
    return static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), std::min(x, limit_)) - primes_.begin());
  }

  /// Calls f(n, p) for every prime power n = p^k <= Y, primes ascending and
  /// powers ascending within each prime. This is the canonical summation
  /// order for every Λ-weighted sum in the library.
  template <typename F>
  void for_each_prime_power(std::uint64_t Y, F&& f) const {
    if (Y > limit_) {
      throw DomainError("truncation " + std::to_string(Y) + " exceeds table limit " +
                        std::to_string(limit_));
    }
    for (const std::uint32_t p : primes_) {
      if (p > Y) break;
      std::uint64_t n = p;
      while (true) {
        f(n, static_cast<std::uint64_t>(p));
        if (n > Y / p) break;
        n *= p;
      }
    }
  }

 private:
  void check_range(std::uint64_t n) const {
    if (n > limit_) {
      throw DomainError(std::to_string(n) + " outside prime table range [1, " +
                        std::to_string(limit_) + "]");
    }
  }

  void build() {
    odd_factor_.assign(limit_ / 2 + 1, 0);
    odd_factor_[0] = 1;  // n = 1
    for (std::uint64_t p = 3; p * p <= limit_; p += 2) {
      if (odd_factor_[p >> 1] != 0) continue;
      for (std::uint64_t m = p * p; m <= limit_; m += 2 * p) {
        if (odd_factor_[m >> 1] == 0) odd_factor_[m >> 1] = static_cast<std::uint16_t>(p);
      }
    }
    // pi(x) < 1.26 x / log x for x > 1
    const double lx = std::log(static_cast<double>(limit_));
    primes_.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit_) / lx) + 16);
    primes_.push_back(2);
    for (std::uint64_t n = 3; n <= limit_; n += 2) {
      if (odd_factor_[n >> 1] == 0) primes_.push_back(static_cast<std::uint32_t>(n));
    }
  }

  std::uint64_t limit_;
  std::vector<std::uint16_t> odd_factor_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeTable sieve_primes(std::uint64_t limit) { return PrimeTable(limit); }

/// Λ(n): log p if n = p^k, else 0.
inline double von_mangoldt(std::uint64_t n, const PrimeTable& table) {
  if (n < 1 || n > table.limit()) {
    throw DomainError("von_mangoldt argument " + std::to_string(n) + " outside [1, " +
                      std::to_string(table.limit()) + "]");
  }
  if (n == 1) return 0.0;
  const std::uint64_t p = table.smallest_factor(n);
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

/// A value together with a stated absolute error bound.
struct Estimate {
  double value = 0.0;
  double error_bound = 0.0;
};

struct TailConstant {
  double value = 0.0;       ///< Σ_{p<=limit} log p / (p(p-1))
  double tail_bound = 0.0;  ///< >= Σ_{p>limit} log p / (p(p-1))
};

/// E = Σ_p Σ_{k>=2} log p / p^k truncated at `limit`, with the inner geometric
/// series summed in closed form. The tail bound comes from
/// Σ_{n>P} log n/(n(n-1)) <= (log P + 2)/P.
inline TailConstant prime_square_tail_constant(const PrimeTable& table, std::uint64_t limit) {
  if (limit < 10) throw DomainError("prime_square_tail_constant needs limit >= 10");
  if (limit > table.limit()) throw DomainError("limit exceeds prime table");
  CompensatedSum<double> sum;
  for (const std::uint32_t p32 : table.primes()) {
    if (p32 > limit) break;
    const double p = p32;
    sum.add(std::log(p) / (p * (p - 1.0)));
  }
  const double P = static_cast<double>(limit);
  return {sum.value(), (std::log(P) + 2.0) / P};
}

inline TailConstant prime_square_tail_constant(std::uint64_t limit) {
  if (limit < 10) throw DomainError("prime_square_tail_constant needs limit >= 10");
  return prime_square_tail_constant(PrimeTable(limit), limit);
}

/// c(σ) = ∫_0^1 t^σ / (2 - t^σ) dt by adaptive Gauss–Kronrod.
inline double c_sigma(double sigma, double tol = 1e-12) {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("c_sigma needs sigma in (0, 1]");
  if (!(tol > 1e-14 && tol < 1e-4)) throw DomainError("c_sigma tolerance must lie in (1e-14, 1e-4)");
  // t^σ has an unbounded derivative at 0; double-exponential nodes absorb it.
  auto f = [sigma](double t) {
    const double u = std::pow(t, sigma);
    return u / (2.0 - u);
  };
  double err = 0.0;
  // Integral is in (1/3, 1), so the relative target also bounds the absolute error.
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  const double value = integrator.integrate(f, 0.0, 1.0, tol / 4.0, &err);
  if (!(err <= tol)) {
    throw PrecisionError("c_sigma quadrature error " + std::to_string(err) + " above " +
                         std::to_string(tol));
  }
  return value;
}

/// C2 = -log log 4 - γ - E - 1.
inline double c2_constant(double E) { return -std::log(std::log(4.0)) - kEulerGamma - E - 1.0; }

/// C1(β) = log(1-β) + C2. At β = 0 this returns C2 bit-for-bit.
inline double c1_constant(double beta, double E) { return std::log1p(-beta) + c2_constant(E); }

/// Supremum budgets of the strip resonators and the constants they yield.
struct StripBudget {
  double sup_zeta = 0.0;  ///< sup B for the ζ strip constraints
  double sup_l = 0.0;     ///< sup B for the Dirichlet strip constraint
};

/// Solves the linear-in-B strip constraints
///   β + 2σB < 1 + Bσ(1 - c(σ))
///   2σB + 3(1-σ+ε)/(2-σ+ε) < 1 + Bσ(1 - c(σ))
///   2σB + 3(1-σ+ε/2)/(2-σ+ε/2) - 1 - Bσ(1 - c(σ)) < 0
/// for their suprema. Each reduces to Bσ(1 + c(σ)) < rhs.
inline StripBudget strip_budget(double beta, double sigma, double eps, double c) {
  const double slope = sigma * (1.0 + c);
  const double rhs1 = 1.0 - beta;
  const double rhs2 = 1.0 - 3.0 * (1.0 - sigma + eps) / (2.0 - sigma + eps);
  const double rhs3 = 1.0 - 3.0 * (1.0 - sigma + 0.5 * eps) / (2.0 - sigma + 0.5 * eps);
  if (!(rhs1 > 0.0)) throw InfeasibleError("beta + 2 sigma B < 1 + B sigma (1 - c(sigma)) has no B > 0");
  if (!(rhs2 > 0.0)) {
    throw InfeasibleError(
        "2 sigma B + 3(1-sigma+eps)/(2-sigma+eps) < 1 + B sigma (1 - c(sigma)) has no B > 0 "
        "(needs sigma > 1/2 + eps)");
  }
  if (!(rhs3 > 0.0)) {
    throw InfeasibleError(
        "2 sigma B + 3(1-sigma+eps/2)/(2-sigma+eps/2) - 1 - B sigma (1 - c(sigma)) < 0 has no B > 0 "
        "(needs sigma > 1/2 + eps/2)");
  }
  return {std::min(rhs1, rhs2) / slope, rhs3 / slope};
}

struct ConstantsReport {
  double beta = 0.0;
  double sigma = 0.0;
  double eps = 0.0;
  std::uint64_t prime_limit = 0;

  Estimate gamma;
  Estimate E;
  Estimate C1;  ///< at beta
  Estimate C2;
  Estimate c_sigma;
  Estimate C3;  ///< ζ strip, at sigma
  Estimate C4;  ///< Dirichlet strip, at sigma

  // Resonator budgets per context. Line budgets follow the fixed choices
  // (1-β)e^{-ε/2}/log 4 and e^{-ε/2}/log 4; strip budgets are the constraint
  // suprema shrunk by (1 - ε).
  Estimate B_zeta_line;
  Estimate B_l_line;
  Estimate B_zeta_strip;
  Estimate B_l_strip;

  struct Entry {
    std::string name;
    Estimate estimate;
  };

  std::vector<Entry> entries() const {
    return {{"gamma", gamma},           {"E", E},
            {"C1", C1},                 {"C2", C2},
            {"c_sigma", c_sigma},       {"C3", C3},
            {"C4", C4},                 {"B_zeta_line", B_zeta_line},
            {"B_L_line", B_l_line},     {"B_zeta_strip", B_zeta_strip},
            {"B_L_strip", B_l_strip}};
  }
};

/// Assembles every explicit constant from a prime table sieved to at least
/// prime_limit.
inline ConstantsReport constants_report(double beta, double sigma, double eps, const PrimeTable& table,
                                        std::uint64_t prime_limit) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  if (!(sigma > 0.5 && sigma < 1.0)) throw DomainError("sigma must lie in (1/2, 1)");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  if (prime_limit < 1'000'000) throw DomainError("constants_report needs prime_limit >= 10^6");

  constexpr double kRound = 1e-15;
  ConstantsReport r;
  r.beta = beta;
  r.sigma = sigma;
  r.eps = eps;
  r.prime_limit = prime_limit;

  const TailConstant tail = prime_square_tail_constant(table, prime_limit);
  r.gamma = {kEulerGamma, 1e-17};
  r.E = {tail.value, tail.tail_bound + kRound};
  r.C2 = {c2_constant(tail.value), r.E.error_bound + 4 * kRound};
  r.C1 = {c1_constant(beta, tail.value), r.C2.error_bound + kRound};

  constexpr double kCTol = 1e-12;
  const double c = c_sigma(sigma, kCTol);
  r.c_sigma = {c, kCTol};

  const StripBudget sup = strip_budget(beta, sigma, eps, c);
  const double shrink = 1.0 - eps;
  const double bz = sup.sup_zeta * shrink;
  const double bl = sup.sup_l * shrink;
  // B scales like 1/(1+c), so dB/dc = -B/(1+c).
  r.B_zeta_strip = {bz, bz / (1.0 + c) * kCTol + kRound};
  r.B_l_strip = {bl, bl / (1.0 + c) * kCTol + kRound};

  const double lead = sigma / (1.0 - sigma);
  const double c3 = lead * std::pow(bz, 1.0 - sigma);
  const double c4 = lead * std::pow(bl, 1.0 - sigma);
  // C ∝ B^{1-σ}: relative error (1-σ) times that of B.
  r.C3 = {c3, c3 * (1.0 - sigma) * kCTol / (1.0 + c) + kRound * c3};
  r.C4 = {c4, c4 * (1.0 - sigma) * kCTol / (1.0 + c) + kRound * c4};

  const double log4 = std::log(4.0);
  r.B_zeta_line = {(1.0 - beta) * std::exp(-0.5 * eps) / log4, kRound};
  r.B_l_line = {std::exp(-0.5 * eps) / log4, kRound};
  return r;
}

inline ConstantsReport constants_report(double beta, double sigma, double eps, std::uint64_t prime_limit) {
  if (prime_limit < 1'000'000) throw DomainError("constants_report needs prime_limit >= 10^6");
  return constants_report(beta, sigma, eps, PrimeTable(prime_limit), prime_limit);
}

struct PrimeSumCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

/// Compares Σ_{p<=X} (log p/p)(1 - p/X) with log X - γ - E - 1, E summed over
/// the whole table.
inline PrimeSumCheck verify_resultcomp(double X, const PrimeTable& table) {
  if (!(X >= 2.0)) throw DomainError("verify_resultcomp needs X >= 2");
  if (X > static_cast<double>(table.limit())) throw DomainError("X exceeds prime table limit");
  CompensatedSum<double> lhs;
  for (const std::uint32_t p32 : table.primes()) {
    const double p = p32;
    if (p > X) break;
    lhs.add(std::log(p) / p * (1.0 - p / X));
  }
  const double E = prime_square_tail_constant(table, std::max<std::uint64_t>(table.limit(), 10)).value;
  PrimeSumCheck out;
  out.lhs = lhs.value();
  out.rhs = std::log(X) - kEulerGamma - E - 1.0;
  out.residual = out.lhs - out.rhs;
  return out;
}

inline PrimeSumCheck verify_resultcomp(double X) {
  if (!(X >= 2.0)) throw DomainError("verify_resultcomp needs X >= 2");
  if (X > static_cast<double>(kSieveGuard)) throw ResourceError("X exceeds sieve guard 2^32");
  const auto limit = std::max<std::uint64_t>(static_cast<std::uint64_t>(X), 10'000'000);
  return verify_resultcomp(X, PrimeTable(limit));
}

}  // namespace resonlab::arith
