#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "resonlab/dirichlet.hpp"
#include "support.hpp"

namespace resonlab::dirichlet {
namespace {

using testing::primes_1e6;
using testing::primes_1e7;

std::vector<std::uint64_t> small_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q) {
    if (testing::prime_by_trial_division(q)) out.push_back(q);
  }
  return out;
}

TEST(CharacterTable, SmallModuli) {
  const CharacterTable t5(5);
  EXPECT_EQ(t5.generator(), 2u);
  EXPECT_EQ(t5.dlog(1), 0u);
  EXPECT_EQ(t5.dlog(2), 1u);
  EXPECT_EQ(t5.dlog(4), 2u);
  EXPECT_EQ(t5.dlog(3), 3u);
  // 2 has order 3 mod 7, 3 has order 6
  EXPECT_EQ(CharacterTable(7).generator(), 3u);
  EXPECT_THROW(CharacterTable(9), DomainError);
  EXPECT_THROW(CharacterTable(2), DomainError);
  EXPECT_THROW(CharacterTable(1), DomainError);
}

TEST(CharacterTable, PowersCoverUnitsAndInvertDlog) {
  for (std::uint64_t q : {3ull, 13ull, 101ull, 257ull, 1009ull}) {
    const CharacterTable t(q);
    std::vector<bool> seen(q, false);
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      const std::uint64_t a = t.power(k);
      ASSERT_GE(a, 1u);
      ASSERT_LT(a, q);
      ASSERT_FALSE(seen[a]);
      seen[a] = true;
      ASSERT_EQ(t.dlog(a), k);
    }
    // least: no smaller g generates
    for (std::uint64_t g = 2; g < t.generator(); ++g) {
      std::uint64_t x = g, order = 1;
      while (x != 1) {
        x = x * g % q;
        ++order;
      }
      EXPECT_LT(order, q - 1) << q << " " << g;
    }
  }
}

TEST(ChiEval, Examples) {
  const CharacterTable t(5);
  for (std::uint64_t n : {1ull, 2ull, 3ull, 4ull, 7ull, 99ull}) {
    EXPECT_EQ(chi_eval(t, {0}, n), complex(1.0, 0.0));
  }
  EXPECT_LT(std::abs(chi_eval(t, {2}, 2) - complex(-1.0, 0.0)), 1e-15);
  for (std::uint64_t j = 0; j < 4; ++j) EXPECT_EQ(chi_eval(t, {j}, 10), complex(0.0, 0.0));
  EXPECT_THROW(chi_eval(t, {4}, 1), DomainError);
}

TEST(ChiEval, Orthogonality) {
  for (std::uint64_t q : small_primes(3, 101)) {
    const CharacterTable t(q);
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
      for (std::uint64_t k = 0; k + 1 < q; ++k) {
        complex s = 0.0;
        for (std::uint64_t a = 1; a < q; ++a) s += chi_eval(t, {j}, a) * std::conj(chi_eval(t, {k}, a));
        const complex expected = j == k ? complex(double(q - 1), 0.0) : complex(0.0, 0.0);
        ASSERT_LT(std::abs(s - expected), 1e-10) << q << " " << j << " " << k;
      }
    }
  }
}

TEST(ChiEval, CompleteMultiplicativity) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> pick(0, 1'000'000);
  for (std::uint64_t q : {3ull, 5ull, 31ull, 101ull}) {
    const CharacterTable t(q);
    std::uniform_int_distribution<std::uint64_t> pick_j(0, q - 2);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t m = pick(rng), n = pick(rng);
      const CharId id{pick_j(rng)};
      ASSERT_LT(std::abs(chi_eval(t, id, m * n) - chi_eval(t, id, m) * chi_eval(t, id, n)), 1e-10);
    }
  }
}

TEST(ChiEval, RealCharacters) {
  const CharacterTable t(13);
  for (std::uint64_t j = 0; j < 12; ++j) {
    bool real = true;
    for (std::uint64_t a = 1; a < 13; ++a) real = real && std::abs(chi_eval(t, {j}, a).imag()) < 1e-15;
    EXPECT_EQ(real, t.is_real({j})) << j;
  }
}

TEST(BatchSums, EmptySupport) {
  const CharacterTable t(7);
  for (const complex v : batch_truncated_sums(t, 1.0, 1, primes_1e6())) EXPECT_EQ(v, complex(0.0, 0.0));
}

TEST(BatchSums, PrincipalHandSum) {
  const CharacterTable t(5);
  const double hand = std::log(2.0) / 2 + std::log(3.0) / 3 + std::log(7.0) / 7 + std::log(2.0) / 4 +
                      std::log(3.0) / 9 + std::log(2.0) / 8;
  const auto s = batch_truncated_sums(t, 1.0, 10, primes_1e6());
  EXPECT_NEAR(s[0].real(), hand, 1e-14);
  EXPECT_NEAR(s[0].real(), 1.372763, 1e-6);
  EXPECT_NEAR(s[0].imag(), 0.0, 1e-14);
}

TEST(BatchSums, MatchesNaiveLoop) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> pickY(2, 100000);
  for (std::uint64_t q : {3ull, 11ull, 59ull, 101ull, 251ull}) {
    const CharacterTable t(q);
    const std::uint64_t Y = pickY(rng);
    for (double sigma : {1.0, 0.6}) {
      const auto batch = batch_truncated_sums(t, sigma, Y, primes_1e6());
      for (std::uint64_t j = 0; j + 1 < q; j += std::max<std::uint64_t>(1, q / 7)) {
        EXPECT_LT(std::abs(batch[j] - truncated_sum_naive(t, {j}, sigma, Y, primes_1e6())), 1e-9)
            << q << " " << j << " " << Y;
      }
    }
  }
}

TEST(BatchSums, TriangleInequality) {
  const auto& P = primes_1e6();
  double total = 0.0;
  P.for_each_prime_power(100000, [&](std::uint64_t n, std::uint64_t p) { total += std::log(double(p)) / double(n); });
  for (std::uint64_t q : {7ull, 101ull}) {
    const auto s = batch_truncated_sums(CharacterTable(q), 1.0, 100000, P);
    for (std::size_t j = 1; j < s.size(); ++j) EXPECT_LE(std::abs(s[j]), total);
  }
}

TEST(LOracle, QuadraticModThree) {
  const CharacterTable t(3);
  const LValues v = l_values_at_one(t, {1}, stieltjes_table(t));
  EXPECT_NEAR(v.L.real(), std::numbers::pi / (3.0 * std::sqrt(3.0)), 1e-13);
  EXPECT_NEAR(v.L.imag(), 0.0, 1e-15);
  EXPECT_NEAR(llogderiv_oracle(t, {1}).real(), 0.3682816159701478, 1e-12);
}

TEST(LOracle, HighPrecisionReferences) {
  // L'/L(1, χ_j) from mpmath (digamma and stieltjes at 25 digits).
  struct Ref {
    std::uint64_t q, j;
    double re, im;
  };
  for (const Ref r : {Ref{5, 1, 0.1578645354481835, -0.08833613256665017}, Ref{5, 2, 0.8276794767155049, 0.0},
                      Ref{7, 1, 0.0574009651369475, -0.2444351596768623},
                      Ref{11, 3, 0.07078053748292871, -0.6457424152595607}}) {
    const complex v = llogderiv_oracle(CharacterTable(r.q), {r.j});
    EXPECT_NEAR(v.real(), r.re, 1e-11) << r.q << " " << r.j;
    EXPECT_NEAR(v.imag(), r.im, 1e-11) << r.q << " " << r.j;
  }
}

TEST(LOracle, SymmetriesAndBatchAgreement) {
  for (std::uint64_t q : {13ull, 101ull}) {
    const CharacterTable t(q);
    const auto all = llogderiv_oracle_all(t);
    EXPECT_NEAR(all[(q - 1) / 2].imag(), 0.0, 1e-10);
    for (std::uint64_t j = 1; j + 1 < q; ++j) {
      EXPECT_LT(std::abs(all[j] - std::conj(all[q - 1 - j])), 1e-10);
    }
    for (std::uint64_t j : {std::uint64_t{1}, std::uint64_t{2}, (q - 1) / 2}) {
      EXPECT_LT(std::abs(all[j] - llogderiv_oracle(t, {j})), 1e-11);
    }
  }
}

TEST(LOracle, TruncatedSumApproximatesNegativeLogDerivative) {
  const CharacterTable t(11);
  const auto sums = batch_truncated_sums(t, 1.0, 10'000'000, primes_1e7());
  const auto oracle = llogderiv_oracle_all(t);
  for (std::uint64_t j = 1; j < 10; ++j) EXPECT_LT(std::abs(-sums[j] - oracle[j]), 5e-3) << j;
}

TEST(LOracle, PrincipalIsPole) {
  EXPECT_THROW(llogderiv_oracle(CharacterTable(7), {0}), PoleError);
}

TEST(EulerKronecker, SingleTermModThree) {
  const auto ek = euler_kronecker(3);
  EXPECT_NEAR(ek.value, kEulerGamma + llogderiv_oracle(CharacterTable(3), {1}).real(), 1e-14);
  EXPECT_LE(ek.imag_residue, 1e-8);
}

TEST(EulerKronecker, RealAndCrossPath) {
  for (std::uint64_t q : {5ull, 7ull, 101ull}) EXPECT_LE(euler_kronecker(q).imag_residue, 1e-8);
  EXPECT_NEAR(euler_kronecker(5).value, euler_kronecker_truncated(5, 10'000'000, primes_1e7()), 1e-2);
}

}  // namespace
}  // namespace resonlab::dirichlet
