#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resonlab/resonator.hpp"
#include "support.hpp"

namespace resonlab::resonator {
namespace {

using testing::primes_1e6;
using testing::primes_1e7;

std::vector<ResonatorSpec> sample_specs() {
  return {ResonatorSpec::long_1line(50.0), ResonatorSpec::long_strip(0.75, 50.0),
          ResonatorSpec::short_theta(1.0, 100000, 30.0), ResonatorSpec::short_theta(0.3, 100000)};
}

// Composite Simpson over [-40L, 40L] with a step small against the fastest
// oscillation; independent of the library's panel quadrature.
double simpson_I1(const std::vector<complex>& r, double T) {
  const double L = T / std::log(T);
  const double a = -40.0 * L, b = 40.0 * L;
  const std::size_t n = 400000;
  const double h = (b - a) / double(n);
  auto f = [&](double t) {
    complex R = 0.0;
    for (std::size_t k = 1; k < r.size(); ++k) R += r[k] * std::exp(complex(0.0, -t * std::log(double(k))));
    return std::norm(R) * std::exp(-0.5 * (t / L) * (t / L));
  };
  double s = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + double(i) * h);
  return s * h / 3.0;
}

TEST(RValue, Examples) {
  const auto& P = primes_1e6();
  const auto s = ResonatorSpec::long_1line(4.0);
  EXPECT_EQ(r_value(s, 1, P), complex(1.0));
  EXPECT_DOUBLE_EQ(r_value(s, 2, P).real(), 0.5);
  EXPECT_DOUBLE_EQ(r_value(s, 3, P).real(), 0.25);
  EXPECT_DOUBLE_EQ(r_value(s, 6, P).real(), 0.125);
  EXPECT_DOUBLE_EQ(r_value(s, 12, P).real(), 0.0625);
  EXPECT_EQ(r_value(s, 5, P), complex(0.0));
  EXPECT_EQ(r_value(s, 10, P), complex(0.0));
  EXPECT_THROW(r_value(s, 0, P), DomainError);
  EXPECT_THROW(r_value(s, 2'000'000, P), DomainError);
}

TEST(RValue, StripAndShortAtPrimes) {
  const auto& P = primes_1e6();
  const auto strip = ResonatorSpec::long_strip(0.5, 9.0);
  EXPECT_NEAR(r_value(strip, 2, P).real(), 1.0 - std::sqrt(2.0 / 9.0), 1e-15);
  EXPECT_EQ(r_value(strip, 11, P), complex(0.0));

  const std::uint64_t N = 100000;
  const auto sh = ResonatorSpec::short_theta(0.7, N, 20.0);
  const double l2 = std::log(std::log(double(N)));
  for (std::uint64_t p : {2ull, 3ull, 19ull}) {
    const complex v = r_value(sh, p, P);
    EXPECT_NEAR(std::abs(v), 1.0 - 1.0 / (l2 * l2), 1e-15);
    EXPECT_NEAR(std::remainder(std::arg(v) - (std::numbers::pi - 0.7), 2.0 * std::numbers::pi), 0.0, 1e-14);
  }
  EXPECT_EQ(r_value(sh, 23, P), complex(0.0));
}

TEST(RValue, ShortDefaultSupportIsBelowTwo) {
  for (std::uint64_t N : {1000ull, 100000ull, 10000000ull}) {
    const auto s = ResonatorSpec::short_theta(0.0, N);
    EXPECT_NEAR(s.X, std::log(double(N)) / std::pow(std::log(std::log(double(N))), 5), 1e-15);
    EXPECT_LT(s.X, 2.0);
  }
  EXPECT_THROW(ResonatorSpec::short_theta(0.0, 10), DomainError);
}

TEST(RValue, BudgetSetsSupport) {
  const double T = 1e6;
  const auto s = ResonatorSpec::long_1line_from_budget(0.5, T);
  EXPECT_NEAR(s.X, 0.5 * std::log(T) * std::log(std::log(T)), 1e-12);
  EXPECT_EQ(s.B, 0.5);
}

TEST(RValue, CompleteMultiplicativity) {
  const auto& P = primes_1e6();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  for (const auto& s : sample_specs()) {
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t m = pick(rng), n = pick(rng);
      ASSERT_LT(std::abs(r_value(s, m * n, P) - r_value(s, m, P) * r_value(s, n, P)), 1e-10)
          << kind_name(s.kind) << " " << m << " " << n;
    }
  }
}

TEST(RValue, LongKindsInUnitInterval) {
  const auto& P = primes_1e6();
  for (const auto& s : {ResonatorSpec::long_1line(1000.0), ResonatorSpec::long_strip(0.6, 1000.0)}) {
    const auto r = r_table(s, 100000, P);
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      ASSERT_EQ(r[n].imag(), 0.0);
      ASSERT_GE(r[n].real(), 0.0);
      ASSERT_LE(r[n].real(), 1.0);
      ASSERT_NEAR(r[n].real(), r_value(s, n, P).real(), 1e-15);
    }
  }
}

TEST(RatioLowerBound, Examples) {
  const auto& P = primes_1e6();
  EXPECT_NEAR(ratio_lower_bound(ResonatorSpec::long_1line(3.0), P), std::log(2.0) / 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(ratio_lower_bound(ResonatorSpec::long_1line(3.0), P), 0.115525, 1e-6);

  const auto sh = ResonatorSpec::short_theta(2.0, 1618, 100.0);
  double plain = 0.0;
  for (std::uint64_t p = 2; p <= 100; ++p) {
    if (testing::prime_by_trial_division(p)) plain += std::log(double(p)) / double(p);
  }
  EXPECT_NEAR(ratio_lower_bound(sh, P), sh.short_modulus() * plain, 1e-13);
  // log_2(1618) is within 1e-4 of 2, so the modulus is close to 3/4.
  EXPECT_NEAR(sh.short_modulus(), 0.75, 1e-4);
  EXPECT_EQ(ratio_lower_bound(ResonatorSpec::short_theta(0.0, 100000), P), 0.0);
}

TEST(RatioLowerBound, ApproachesLogXMinusConstants) {
  const auto& P = primes_1e7();
  const double E = arith::prime_square_tail_constant(P, P.limit()).value;
  auto residual = [&](double X) {
    return std::abs(ratio_lower_bound(ResonatorSpec::long_1line(X), P) - (std::log(X) - kEulerGamma - E - 1.0));
  };
  EXPECT_LT(residual(1e7), residual(1e3));
  EXPECT_LT(residual(1e7), 1e-3);
  EXPECT_NEAR(ratio_lower_bound(ResonatorSpec::long_1line(1e5), P), arith::verify_resultcomp(1e5, P).lhs, 1e-11);
}

TEST(LogMagnitudeBound, Examples) {
  const auto& P = primes_1e6();
  EXPECT_NEAR(log_magnitude_bound(ResonatorSpec::long_1line(3.0), P), std::log(1.5), 1e-15);
  const double hand = std::log(5.0) + std::log(10.0 / 3.0) + std::log(2.0) + std::log(10.0 / 7.0);
  EXPECT_NEAR(log_magnitude_bound(ResonatorSpec::long_1line(10.0), P), hand, 1e-14);
  EXPECT_NEAR(hand, 3.863233, 1e-6);
  EXPECT_NEAR(log_magnitude_bound(ResonatorSpec::long_strip(0.7, 10.0), P), 0.7 * hand, 1e-14);
  // Against a plain Eratosthenes sieve; the ratio to X/log X is about 1.19 at
  // 10^6 and falls slowly toward 1.
  auto oracle = [](std::uint64_t X) {
    std::vector<bool> composite(X + 1, false);
    double s = 0.0;
    for (std::uint64_t p = 2; p <= X; ++p) {
      if (composite[p]) continue;
      s += std::log(double(X) / double(p));
      for (std::uint64_t m = p * p; m <= X; m += p) composite[m] = true;
    }
    return s;
  };
  double prev = 2.0;
  for (std::uint64_t X : {10000ull, 100000ull, 1000000ull}) {
    const double v = log_magnitude_bound(ResonatorSpec::long_1line(double(X)), P);
    EXPECT_NEAR(v, oracle(X), 1e-9 * v);
    const double ratio = v / (double(X) / std::log(double(X)));
    EXPECT_GT(ratio, 1.0);
    EXPECT_LT(ratio, prev);
    prev = ratio;
  }
  EXPECT_NEAR(prev, 1.188, 0.01);
  EXPECT_THROW(log_magnitude_bound(ResonatorSpec::short_theta(0.0, 1000), P), UnsupportedKind);
}

TEST(GaussianMoments, SingleTermIsExact) {
  const auto& P = primes_1e6();
  const double T = 1000.0;
  const auto m = gaussian_moment_check(ResonatorSpec::long_1line(10.0), 1, T, P);
  const double expected = std::sqrt(2.0 * std::numbers::pi) * T / std::log(T);
  EXPECT_NEAR(m.I1, expected, 1e-12 * expected);
  EXPECT_NEAR(m.I1_quadrature, expected, 1e-8 * expected);
  EXPECT_EQ(m.I2, 0.0);
}

TEST(GaussianMoments, ThreeTermsAgainstSimpson) {
  const auto& P = primes_1e6();
  const auto s = ResonatorSpec::long_1line(4.0);
  const auto m = gaussian_moment_check(s, 3, 100.0, P);
  EXPECT_LE(m.discrepancy, 1e-6);
  const double simpson = simpson_I1(r_table(s, 3, P), 100.0);
  EXPECT_NEAR(m.I1, simpson, 1e-8 * simpson);
}

TEST(GaussianMoments, AllKindsUpToHundred) {
  const auto& P = primes_1e6();
  for (const auto& s : sample_specs()) {
    for (std::uint64_t N : {1ull, 3ull, 10ull, 100ull}) {
      MomentEstimates m;
      ASSERT_NO_THROW(m = gaussian_moment_check(s, N, 100.0, P)) << kind_name(s.kind) << " " << N;
      EXPECT_LE(m.discrepancy, 1e-6);
      EXPECT_GT(m.I1, 0.0);
      if (s.is_long()) EXPECT_GE(m.ratio, m.truncated_lower_bound - 1e-12) << kind_name(s.kind) << " " << N;
    }
  }
}

TEST(GaussianMoments, TruncationFallsShortOfUntruncatedBound) {
  // With R cut at N = 3 the diagonal loses r(2)²-type mass, so the ratio sits
  // below the untruncated bound while staying above the truncated one.
  const auto m = gaussian_moment_check(ResonatorSpec::long_1line(4.0), 3, 100.0, primes_1e6());
  EXPECT_LT(m.ratio, m.lower_bound);
  EXPECT_GE(m.ratio, m.truncated_lower_bound);
  const double r2 = 0.5, r3 = 0.25, mass = 1.0 + r2 * r2 + r3 * r3;
  const double diag = (std::log(2.0) / 2.0 * r2 + std::log(3.0) / 3.0 * r3) / mass;
  // The nearest off-diagonal pair is 2·2 against 3: Φ((T/log T) log(4/3)) ≈ 3e-9.
  EXPECT_NEAR(m.ratio, diag, 1e-9);
}

TEST(GaussianMoments, Errors) {
  const auto& P = primes_1e6();
  EXPECT_THROW(gaussian_moment_check(ResonatorSpec::long_1line(4.0), 0, 100.0, P), DomainError);
  EXPECT_THROW(gaussian_moment_check(ResonatorSpec::long_1line(4.0), 10001, 100.0, P), DomainError);
  EXPECT_THROW(gaussian_moment_check(ResonatorSpec::long_1line(4.0), 3, 5.0, P), DomainError);
}

TEST(ShortDiagonal, OffDiagonalWeightsVanish) {
  const auto d = short_theta_diagonal_check(ResonatorSpec::short_theta(0.4, 100000, 7.0), 10, 1e4, primes_1e6());
  EXPECT_LT(d.max_offdiag_weight, 1e-300);
  EXPECT_LE(d.relative_discrepancy, 1e-15);
}

TEST(ShortDiagonal, MatchesIdentityUpToThousand) {
  const auto& P = primes_1e6();
  for (double X : {0.13, 5.0, 7.0, 30.0}) {
    for (std::uint64_t N : {10ull, 100ull, 1000ull}) {
      const auto d = short_theta_diagonal_check(ResonatorSpec::short_theta(1.3, 100000, X), N, 1e8, P);
      EXPECT_LE(d.relative_discrepancy, 1e-6) << X << " " << N;
      EXPECT_GE(d.min_log_gap, 1.0 / (double(N) * double(N)));
    }
  }
}

TEST(ShortDiagonal, SmallHeightShowsOffDiagonalLeakage) {
  const auto d = short_theta_diagonal_check(ResonatorSpec::short_theta(1.3, 100000, 7.0), 100, 100.0, primes_1e6());
  EXPECT_GT(d.relative_discrepancy, 1e-6);
}

TEST(Rankin, TrivialLength) {
  const auto r = rankin_tail_check(ResonatorSpec::short_theta(0.0, 100000), 1, primes_1e6());
  EXPECT_EQ(r.head, 1.0);
  EXPECT_EQ(r.total, 1.0);
  EXPECT_EQ(r.ratio, 1.0);
}

TEST(Rankin, DefaultSupportRatio) {
  const auto r = rankin_tail_check(ResonatorSpec::short_theta(0.0, 100000), 100000, primes_1e6());
  EXPECT_GT(r.ratio, 0.9);
  EXPECT_LE(r.ratio, 1.0);
}

TEST(Rankin, MatchesDirectSum) {
  const auto& P = primes_1e6();
  const std::uint64_t N = 50000;
  const auto s = ResonatorSpec::short_theta(0.0, N, 11.0);
  const auto r = r_table(s, N, P);
  double head = 0.0, total = 0.0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    total += std::norm(r[n]);
    if (double(n) <= double(N) / s.X) head += std::norm(r[n]);
  }
  const auto got = rankin_tail_check(s, N, P);
  EXPECT_NEAR(got.head, head, 1e-10 * head);
  EXPECT_NEAR(got.total, total, 1e-10 * total);
}

TEST(Rankin, NonincreasingInSupport) {
  const auto& P = primes_1e6();
  double prev = 2.0;
  for (double X : {1.0, 2.0, 3.0, 5.0, 7.0, 13.0, 31.0}) {
    const double ratio = rankin_tail_check(ResonatorSpec::short_theta(0.0, 100000, X), 100000, P).ratio;
    EXPECT_LE(ratio, prev) << X;
    prev = ratio;
  }
}

TEST(Rankin, Errors) {
  EXPECT_THROW(rankin_tail_check(ResonatorSpec::short_theta(0.0, 100), 20'000'000, primes_1e6()), DomainError);
}

}  // namespace
}  // namespace resonlab::resonator
