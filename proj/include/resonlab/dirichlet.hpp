#pragma once

// Character groups modulo a prime, batch Λ-weighted character sums and the
// Laurent-expansion oracle for L'/L(1, χ).

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resonlab/arith.hpp"
#include "resonlab/dft.hpp"
#include "resonlab/error.hpp"
#include "resonlab/numeric.hpp"
#include "resonlab/special.hpp"

namespace resonlab::dirichlet {

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 24;

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

/// e^{2πi m/n}, reduced so that root_of_unity(n-m, n) is the exact conjugate
/// of root_of_unity(m, n).
inline complex root_of_unity(std::uint64_t m, std::uint64_t n) {
  m %= n;
  if (2 * m > n) return std::conj(root_of_unity(n - m, n));
  const double angle = kTwoPi * static_cast<double>(m) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

/// Labels χ_j with χ_j(g) = e^{2πi j/(q-1)}; j = 0 is the principal character.
struct CharId {
  std::uint64_t j = 0;
};

/// The character group modulo a prime q, indexed through the least primitive
/// root g and the discrete logarithm table dlog(g^k mod q) = k.
class CharacterTable {
 public:
  explicit CharacterTable(std::uint64_t q) : q_(q) {
    if (q == 2) throw DomainError("degenerate modulus q = 2 (trivial character group)");
    if (q < 3 || q > kMaxModulus) throw DomainError("modulus must lie in [3, 2^24], got " + std::to_string(q));
    if (!is_prime_trial(q)) throw DomainError("modulus " + std::to_string(q) + " is not prime");
    g_ = least_primitive_root(q);
    const std::uint64_t n = q - 1;
    dlog_.assign(q, 0);
    exp_.assign(n, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      exp_[k] = static_cast<std::uint32_t>(x);
      dlog_[x] = static_cast<std::uint32_t>(k);
      x = x * g_ % q;
    }
  }

  std::uint64_t modulus() const { return q_; }
  std::uint64_t generator() const { return g_; }
  std::uint64_t order() const { return q_ - 1; }

  /// k with g^k ≡ a (mod q), for a coprime to q.
  std::uint64_t dlog(std::uint64_t a) const {
    a %= q_;
    if (a == 0) throw DomainError("dlog of a multiple of the modulus");
    return dlog_[a];
  }

  /// g^k mod q.
  std::uint64_t power(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  bool is_real(CharId id) const { return id.j == 0 || 2 * id.j == q_ - 1; }

  void check(CharId id) const {
    if (id.j >= q_ - 1) {
      throw DomainError("character index " + std::to_string(id.j) + " outside [0, " + std::to_string(q_ - 2) + "]");
    }
  }

 private:
  static std::uint64_t least_primitive_root(std::uint64_t q) {
    const std::uint64_t n = q - 1;
    std::vector<std::uint64_t> factors;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) factors.push_back(m);
    for (std::uint64_t g = 2; g < q; ++g) {
      bool primitive = true;
      for (const std::uint64_t f : factors) {
        if (pow_mod(g, n / f, q) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) return g;
    }
    throw DomainError("no primitive root found");  // unreachable for prime q
  }

  std::uint64_t q_;
  std::uint64_t g_ = 0;
  std::vector<std::uint32_t> dlog_;
  std::vector<std::uint32_t> exp_;
};

inline CharacterTable build_character_table(std::uint64_t q) { return CharacterTable(q); }

/// χ_j(n); zero when q | n.
inline complex chi_eval(const CharacterTable& table, CharId id, std::uint64_t n) {
  table.check(id);
  const std::uint64_t q = table.modulus();
  if (n % q == 0) return {0.0, 0.0};
  const std::uint64_t order = q - 1;
  return root_of_unity((id.j % order) * table.dlog(n % q) % order, order);
}

/// Σ_{n<=Y} Λ(n) χ_j(n) / n^σ for every j at once: Λ(n)/n^σ is binned by
/// dlog(n mod q) and the bins are transformed with an exact-length DFT.
inline std::vector<complex> batch_truncated_sums(const CharacterTable& table, double sigma, std::uint64_t Y,
                                                 const arith::PrimeTable& primes) {
  if (Y > primes.limit()) throw DomainError("batch_truncated_sums truncation exceeds prime table");
  const std::uint64_t q = table.modulus();
  std::vector<double> bins(q - 1, 0.0);
  if (Y >= 2) {
    double log_p = 0.0;
    std::uint64_t last_p = 0;
    primes.for_each_prime_power(Y, [&](std::uint64_t n, std::uint64_t p) {
      if (p == q) return;
      if (p != last_p) {
        log_p = std::log(static_cast<double>(p));
        last_p = p;
      }
      bins[table.dlog(n % q)] += log_p * std::exp(-sigma * std::log(static_cast<double>(n)));
    });
  }
  return dft::transform_positive(std::span<const double>(bins));
}

/// Same sums for a single character by the direct double loop; the oracle for
/// batch_truncated_sums.
inline complex truncated_sum_naive(const CharacterTable& table, CharId id, double sigma, std::uint64_t Y,
                                   const arith::PrimeTable& primes) {
  if (Y > primes.limit()) throw DomainError("truncated_sum_naive truncation exceeds prime table");
  complex sum{0.0, 0.0};
  for (std::uint64_t n = 2; n <= Y; ++n) {
    const double lambda = arith::von_mangoldt(n, primes);
    if (lambda == 0.0) continue;
    sum += lambda * std::pow(static_cast<double>(n), -sigma) * chi_eval(table, id, n);
  }
  return sum;
}

/// Prime-power sums with an arbitrary weight w(n, p) for every character:
/// out[j] = Σ_{p^k <= Y, p != q} w(p^k, p) χ_j(p^k).
template <typename Weight>
std::vector<complex> batch_prime_power_sums(const CharacterTable& table, std::uint64_t Y,
                                            const arith::PrimeTable& primes, Weight&& weight) {
  if (Y > primes.limit()) throw DomainError("truncation exceeds prime table");
  const std::uint64_t q = table.modulus();
  std::vector<double> bins(q - 1, 0.0);
  if (Y >= 2) {
    primes.for_each_prime_power(Y, [&](std::uint64_t n, std::uint64_t p) {
      if (p == q) return;
      bins[table.dlog(n % q)] += weight(n, p);
    });
  }
  return dft::transform_positive(std::span<const double>(bins));
}

/// γ0(a/q), γ1(a/q) for a = 1..q-1, stored by residue a.
struct StieltjesTable {
  std::vector<double> gamma0;
  std::vector<double> gamma1;
};

inline StieltjesTable stieltjes_table(const CharacterTable& table, const special::EulerMaclaurinConfig& cfg = {}) {
  const std::uint64_t q = table.modulus();
  StieltjesTable st;
  st.gamma0.assign(q, 0.0);
  st.gamma1.assign(q, 0.0);
  for (std::uint64_t a = 1; a < q; ++a) {
    const auto pair = special::stieltjes_gamma01(static_cast<double>(a) / static_cast<double>(q), cfg);
    st.gamma0[a] = pair.gamma0;
    st.gamma1[a] = pair.gamma1;
  }
  return st;
}

/// L(1,χ) and L'(1,χ) for a nonprincipal χ from
///   L(1,χ)  =  q^{-1} Σ_a χ(a) γ0(a/q)
///   L'(1,χ) = -q^{-1} Σ_a χ(a) [γ1(a/q) + log q · γ0(a/q)],
/// the pole terms of ζ(s, a/q) cancelling because Σ_a χ(a) = 0.
struct LValues {
  complex L;
  complex L_prime;
};

inline LValues l_values_at_one(const CharacterTable& table, CharId id, const StieltjesTable& st) {
  table.check(id);
  if (id.j == 0) throw PoleError("L(s, chi_0) has a pole at s = 1");
  const std::uint64_t q = table.modulus();
  const double log_q = std::log(static_cast<double>(q));
  complex s0{0.0, 0.0}, s1{0.0, 0.0};
  for (std::uint64_t a = 1; a < q; ++a) {
    const complex chi = chi_eval(table, id, a);
    s0 += chi * st.gamma0[a];
    s1 += chi * (st.gamma1[a] + log_q * st.gamma0[a]);
  }
  const double inv_q = 1.0 / static_cast<double>(q);
  return {s0 * inv_q, -s1 * inv_q};
}

/// L'/L(1, χ_j) for j != 0.
inline complex llogderiv_oracle(const CharacterTable& table, CharId id, const special::EulerMaclaurinConfig& cfg = {}) {
  table.check(id);
  if (id.j == 0) throw PoleError("principal character: L(s, chi_0) has a pole at s = 1");
  const LValues v = l_values_at_one(table, id, stieltjes_table(table, cfg));
  if (std::abs(v.L) < special::kNearZeroGuard) throw NearZeroError("|L(1, chi)| below 1e-12");
  return v.L_prime / v.L;
}

/// L'/L(1, χ_j) for every j, the character sums done by DFT over dlog
/// classes. Entry 0 (principal) is NaN.
inline std::vector<complex> llogderiv_oracle_all(const CharacterTable& table,
                                                 const special::EulerMaclaurinConfig& cfg = {}) {
  const std::uint64_t q = table.modulus();
  const StieltjesTable st = stieltjes_table(table, cfg);
  const double log_q = std::log(static_cast<double>(q));
  std::vector<double> f0(q - 1), f1(q - 1);
  for (std::uint64_t k = 0; k < q - 1; ++k) {
    const std::uint64_t a = table.power(k);
    f0[k] = st.gamma0[a];
    f1[k] = st.gamma1[a] + log_q * st.gamma0[a];
  }
  const auto L = dft::transform_positive(std::span<const double>(f0));
  const auto Lp = dft::transform_positive(std::span<const double>(f1));
  std::vector<complex> out(q - 1);
  out[0] = {std::nan(""), std::nan("")};
  for (std::uint64_t j = 1; j < q - 1; ++j) {
    if (std::abs(L[j]) / static_cast<double>(q) < special::kNearZeroGuard) {
      throw NearZeroError("|L(1, chi_" + std::to_string(j) + ")| below 1e-12");
    }
    out[j] = -Lp[j] / L[j];
  }
  return out;
}

struct EulerKroneckerResult {
  double value = 0.0;
  double imag_residue = 0.0;  ///< |Im Σ L'/L|, checked against 1e-8 then discarded
};

inline constexpr double kImagResidueTolerance = 1e-8;

/// γ + Σ_{χ != χ0} L'/L(1, χ) for the q-th cyclotomic field.
inline EulerKroneckerResult euler_kronecker(std::uint64_t q, const special::EulerMaclaurinConfig& cfg = {}) {
  const CharacterTable table(q);
  const auto values = llogderiv_oracle_all(table, cfg);
  CompensatedSum<double> re, im;
  for (std::uint64_t j = 1; j < q - 1; ++j) {
    re.add(values[j].real());
    im.add(values[j].imag());
  }
  EulerKroneckerResult out{kEulerGamma + re.value(), std::abs(im.value())};
  if (out.imag_residue > kImagResidueTolerance) {
    throw IdentityViolation("Euler-Kronecker imaginary residue " + std::to_string(out.imag_residue) +
                            " exceeds 1e-8");
  }
  return out;
}

/// The same constant with each L'/L(1, χ) replaced by -Σ_{n<=Y} Λ(n)χ(n)/n.
inline double euler_kronecker_truncated(std::uint64_t q, std::uint64_t Y, const arith::PrimeTable& primes) {
  const CharacterTable table(q);
  const auto sums = batch_truncated_sums(table, 1.0, Y, primes);
  CompensatedSum<double> re;
  for (std::uint64_t j = 1; j < q - 1; ++j) re.add(-sums[j].real());
  return kEulerGamma + re.value();
}

}  // namespace resonlab::dirichlet
