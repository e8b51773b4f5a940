#pragma once

// Resonator families and numeric checks of their Gaussian moment identities.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "resonlab/arith.hpp"
#include "resonlab/error.hpp"
#include "resonlab/numeric.hpp"
#include "resonlab/parallel.hpp"

namespace resonlab::resonator {

enum class Kind { long_1line, long_strip, short_theta };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::long_1line: return "LONG_1LINE";
    case Kind::long_strip: return "LONG_STRIP";
    case Kind::short_theta: return "SHORT_THETA";
  }
  return "?";
}

/// A completely multiplicative r supported on X-smooth integers.
///
/// For SHORT_THETA, `N` is the length parameter that fixes both |r(p)| and
/// the default X. Use the factories; they validate the parameters.
struct ResonatorSpec {
  Kind kind = Kind::long_1line;
  double X = 0.0;
  std::uint64_t N = 0;
  double sigma = 1.0;
  double theta = 0.0;
  double B = std::numeric_limits<double>::quiet_NaN();

  static ResonatorSpec long_1line(double X) {
    check_X(X);
    return ResonatorSpec{Kind::long_1line, X};
  }

  /// X = B log T log_2 T.
  static ResonatorSpec long_1line_from_budget(double B, double T) {
    auto s = long_1line(budget_X(B, T));
    s.B = B;
    return s;
  }

  static ResonatorSpec long_strip(double sigma, double X) {
    check_X(X);
    if (!(sigma > 0.0 && sigma <= 1.0)) throw DomainError("LONG_STRIP needs sigma in (0, 1]");
    ResonatorSpec s{Kind::long_strip, X};
    s.sigma = sigma;
    return s;
  }

  static ResonatorSpec long_strip_from_budget(double sigma, double B, double T) {
    auto s = long_strip(sigma, budget_X(B, T));
    s.B = B;
    return s;
  }

  /// X = log N / (log_2 N)^5. Below N of roughly 10^30 this is under 2 and
  /// the resonator reduces to r = δ_1.
  static ResonatorSpec short_theta(double theta, std::uint64_t N) {
    if (N < 16) throw DomainError("SHORT_THETA needs N >= 16 so that log_2 N > 1");
    const double l2 = log2_iter(double(N));
    return short_theta(theta, N, std::log(double(N)) / std::pow(l2, 5));
  }

  /// Same modulus |r(p)| but with X chosen by the caller.
  static ResonatorSpec short_theta(double theta, std::uint64_t N, double X_override) {
    if (N < 16) throw DomainError("SHORT_THETA needs N >= 16 so that log_2 N > 1");
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");
    check_X(X_override);
    ResonatorSpec s{Kind::short_theta, X_override, N};
    s.theta = theta;
    return s;
  }

  bool is_long() const { return kind != Kind::short_theta; }

  /// |r(p)| for SHORT_THETA.
  double short_modulus() const {
    const double l2 = log2_iter(double(N));
    return 1.0 - 1.0 / (l2 * l2);
  }

  /// r at a prime.
  complex at_prime(std::uint64_t p) const {
    const double pd = double(p);
    if (pd > X) return 0.0;
    switch (kind) {
      case Kind::long_1line: return 1.0 - pd / X;
      case Kind::long_strip: return 1.0 - std::pow(pd / X, sigma);
      case Kind::short_theta: return -std::polar(short_modulus(), -theta);
    }
    return 0.0;
  }

 private:
  static void check_X(double X) {
    if (!(X > 0.0 && std::isfinite(X))) throw DomainError("resonator X must be positive and finite");
  }
  static double budget_X(double B, double T) {
    if (!(B > 0.0)) throw DomainError("budget B must be positive");
    if (!(T > std::exp(1.0))) throw DomainError("T must exceed e for log_2 T > 0");
    return B * std::log(T) * log2_iter(T);
  }
};

/// r(n) via the least-factor table; r(1) = 1.
inline complex r_value(const ResonatorSpec& spec, std::uint64_t n, const arith::PrimeTable& primes) {
  if (n == 0) throw DomainError("r_value needs n >= 1");
  if (n > primes.limit()) {
    throw DomainError("r_value: n = " + std::to_string(n) + " exceeds prime table limit " +
                      std::to_string(primes.limit()));
  }
  complex out = 1.0;
  while (n > 1) {
    const std::uint64_t p = primes.smallest_factor(n);
    out *= spec.at_prime(p);
    if (out == 0.0) return out;
    n /= p;
  }
  return out;
}

/// r(1..N) in one multiplicative pass; index 0 is unused.
inline std::vector<complex> r_table(const ResonatorSpec& spec, std::uint64_t N, const arith::PrimeTable& primes) {
  if (N > primes.limit()) throw DomainError("r_table: N exceeds prime table limit");
  std::vector<complex> r(N + 1, 0.0);
  if (N >= 1) r[1] = 1.0;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const std::uint64_t p = primes.smallest_factor(n);
    r[n] = spec.at_prime(p) * r[n / p];
  }
  return r;
}

namespace detail {
inline void require_X_in_table(const ResonatorSpec& spec, const arith::PrimeTable& primes) {
  if (spec.X > double(primes.limit())) {
    throw DomainError("resonator X = " + std::to_string(spec.X) + " exceeds prime table limit " +
                      std::to_string(primes.limit()));
  }
}

inline double exponent_sigma(const ResonatorSpec& spec) { return spec.kind == Kind::long_strip ? spec.sigma : 1.0; }
}  // namespace detail

/// Σ_{p<=X} log p / p^σ · |r(p)|, with σ = 1 except for LONG_STRIP.
inline double ratio_lower_bound(const ResonatorSpec& spec, const arith::PrimeTable& primes) {
  detail::require_X_in_table(spec, primes);
  const double s = detail::exponent_sigma(spec);
  CompensatedSum<> sum;
  for (const std::uint32_t p : primes.primes()) {
    if (double(p) > spec.X) break;
    const double lp = std::log(double(p));
    sum.add(lp * std::exp(-s * lp) * std::abs(spec.at_prime(p)));
  }
  return sum.value();
}

/// Σ_{p<=X} log 1/(1 - r(p)), the bound on log|R| for the long kinds.
inline double log_magnitude_bound(const ResonatorSpec& spec, const arith::PrimeTable& primes) {
  if (!spec.is_long()) throw UnsupportedKind("log_magnitude_bound is defined for LONG kinds only");
  detail::require_X_in_table(spec, primes);
  const double s = detail::exponent_sigma(spec);
  CompensatedSum<> sum;
  for (const std::uint32_t p : primes.primes()) {
    if (double(p) >= spec.X) break;  // p = X gives r = 0 and contributes log 1
    sum.add(s * std::log(spec.X / double(p)));
  }
  return sum.value();
}

/// Gaussian-weighted moments of a truncated resonator R_N(t) = Σ_{n<=N} r(n) n^{-it}
/// against the weight Φ(t log T / T), together with the moment of
/// Re D(t)·|R_N(t)|², where D(t) = Σ_{ℓ<=N} a_ℓ ℓ^{-it} is the target series:
/// a_ℓ = Λ(ℓ)/ℓ^σ for the long kinds and a_p = -e^{-iθ} log p / p on primes
/// for SHORT_THETA.
struct MomentEstimates {
  double I1 = 0.0;             ///< closed form
  double I2 = 0.0;             ///< closed form
  double I1_quadrature = 0.0;  ///< adaptive quadrature over |t| <= 40 T/log T
  double I2_quadrature = 0.0;
  double ratio = 0.0;  ///< I2 / I1
  /// Σ_{p<=X} log p/p^σ |r(p)|. Only a lower bound for the untruncated R.
  double lower_bound = 0.0;
  /// Diagonal part of I2 over I1. For the long kinds every term is
  /// nonnegative, so this bounds `ratio` from below at any N and T.
  double truncated_lower_bound = 0.0;
  double discrepancy = 0.0;  ///< max of the I1 and I2 relative discrepancies
  double T = 0.0;
  std::uint64_t N = 0;
  ResonatorSpec spec;
};

inline constexpr double kMomentTolerance = 1e-6;
inline constexpr std::uint64_t kMomentMaxN = 10'000;

namespace detail {

struct Term {
  double log_n;
  complex coeff;
};

struct MomentSetup {
  std::vector<Term> r_terms;  // nonzero r(n), n <= N
  std::vector<Term> a_terms;  // target coefficients, ℓ <= N
  std::vector<complex> r;     // r(1..N)
  std::vector<std::uint64_t> a_index;
};

inline MomentSetup moment_setup(const ResonatorSpec& spec, std::uint64_t N, const arith::PrimeTable& primes) {
  MomentSetup m;
  m.r = r_table(spec, N, primes);
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (m.r[n] != 0.0) m.r_terms.push_back({std::log(double(n)), m.r[n]});
  }
  if (N >= 2) {
    const double s = exponent_sigma(spec);
    primes.for_each_prime_power(N, [&](std::uint64_t n, std::uint64_t p) {
      const double lp = std::log(double(p));
      complex a;
      if (spec.is_long()) {
        a = lp * std::exp(-s * std::log(double(n)));
      } else {
        if (n != p) return;
        a = -std::polar(lp / double(p), -spec.theta);
      }
      m.a_terms.push_back({std::log(double(n)), a});
      m.a_index.push_back(n);
    });
  }
  return m;
}

}  // namespace detail

/// Evaluates I1, I2 by quadrature and in closed form, and throws
/// IdentityViolation if they disagree by more than 1e-6. The I2 discrepancy
/// is measured relative to Σ|a_ℓ|·I1, the natural bound on |I2|.
inline MomentEstimates gaussian_moment_check(const ResonatorSpec& spec, std::uint64_t N, double T,
                                             const arith::PrimeTable& primes, unsigned threads = default_threads()) {
  if (N < 1 || N > kMomentMaxN) throw DomainError("gaussian_moment_check needs 1 <= N <= 10^4");
  if (!(T >= 10.0)) throw DomainError("gaussian_moment_check needs T >= 10");
  const detail::MomentSetup m = detail::moment_setup(spec, N, primes);
  const double L = T / std::log(T);
  const double scale = std::sqrt(2.0 * std::numbers::pi) * L;

  // Closed form, fixed (ℓ, k, m) order.
  CompensatedSum<> i1, i2, diag2, diag1;
  for (const auto& k : m.r_terms) {
    for (const auto& j : m.r_terms) {
      const complex w = k.coeff * std::conj(j.coeff);
      i1.add(w.real() * gaussian_weight(L * (k.log_n - j.log_n)));
    }
    diag1.add(std::norm(k.coeff));
  }
  for (const auto& a : m.a_terms) {
    for (const auto& k : m.r_terms) {
      const complex ak = a.coeff * k.coeff;
      for (const auto& j : m.r_terms) {
        const double x = L * (a.log_n + k.log_n - j.log_n);
        if (std::abs(x) > 40.0) continue;  // below 1e-347
        i2.add((ak * std::conj(j.coeff)).real() * gaussian_weight(x));
      }
    }
  }
  for (std::size_t i = 0; i < m.a_terms.size(); ++i) {
    const std::uint64_t ell = m.a_index[i];
    CompensatedSum<> head;
    for (std::uint64_t k = 1; k * ell <= N; ++k) head.add(std::norm(m.r[k]));
    diag2.add((m.a_terms[i].coeff * std::conj(m.r[ell])).real() * head.value());
  }

  MomentEstimates out;
  out.spec = spec;
  out.T = T;
  out.N = N;
  out.I1 = scale * i1.value();
  out.I2 = scale * i2.value();
  out.ratio = out.I2 / out.I1;
  out.lower_bound = ratio_lower_bound(spec, primes);
  out.truncated_lower_bound = scale * diag2.value() / out.I1;

  // Quadrature: panels short enough to hold about a quarter period of the
  // fastest oscillation, integrated with adaptive Gauss–Kronrod.
  const double max_freq = 2.0 * std::log(double(std::max<std::uint64_t>(N, 2)));
  const double half = 40.0 * L;
  const double width = std::min(L / 2.0, std::numbers::pi / (2.0 * max_freq));
  const auto panels = static_cast<std::size_t>(std::ceil(2.0 * half / width));
  const double h = 2.0 * half / double(panels);
  auto integrand = [&](double t) {
    complex R = 0.0, D = 0.0;
    for (const auto& k : m.r_terms) R += k.coeff * std::polar(1.0, -t * k.log_n);
    for (const auto& a : m.a_terms) D += a.coeff * std::polar(1.0, -t * a.log_n);
    const double w = std::norm(R) * gaussian_weight(t / L);
    return complex(w, D.real() * w);
  };
  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (panels + kChunk - 1) / kChunk;
  const auto partial = parallel_map(chunks, threads, [&](std::size_t c) {
    complex acc = 0.0;
    for (std::size_t i = c * kChunk; i < std::min(panels, (c + 1) * kChunk); ++i) {
      const double a = -half + double(i) * h;
      acc += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, a, a + h, 3, 1e-9);
    }
    return acc;
  });
  CompensatedSum<> q1, q2;
  for (const complex& v : partial) {
    q1.add(v.real());
    q2.add(v.imag());
  }
  out.I1_quadrature = q1.value();
  out.I2_quadrature = q2.value();

  double a_abs = 0.0;
  for (const auto& a : m.a_terms) a_abs += std::abs(a.coeff);
  const double d1 = std::abs(out.I1_quadrature - out.I1) / out.I1;
  const double d2 = a_abs > 0.0 ? std::abs(out.I2_quadrature - out.I2) / (a_abs * out.I1) : 0.0;
  out.discrepancy = std::max(d1, d2);
  if (!(out.discrepancy <= kMomentTolerance)) {
    throw IdentityViolation("gaussian_moment_check: quadrature and closed form differ by " +
                            std::to_string(out.discrepancy) + " (relative) for " + kind_name(spec.kind) +
                            " N=" + std::to_string(N) + " T=" + std::to_string(T));
  }
  return out;
}

/// Diagonal extraction for SHORT_THETA. The closed-form I2 over all
/// (p, k, m) is compared with the diagonal identity
///   √(2π)(T/log T) Σ_{p<=X} (log p/p)|r(p)| Σ_{n<=N/p} |r(n)|²,
/// and the largest Gaussian factor among off-diagonal terms is reported.
struct DiagonalCheck {
  double closed_form = 0.0;
  double diagonal = 0.0;
  double relative_discrepancy = 0.0;  ///< relative to √(2π)L·Σ|a_p||r(p)|·Σ|r(n)|²
  double max_offdiag_weight = 0.0;    ///< max Φ(L log(m/(pk))) over pk != m
  double min_log_gap = 0.0;           ///< min |log(m/(pk))| over pk != m
};

inline DiagonalCheck short_theta_diagonal_check(const ResonatorSpec& spec, std::uint64_t N, double T,
                                                const arith::PrimeTable& primes) {
  if (spec.kind != Kind::short_theta) throw UnsupportedKind("diagonal check is specific to SHORT_THETA");
  if (N < 1 || N > kMomentMaxN) throw DomainError("short_theta_diagonal_check needs 1 <= N <= 10^4");
  if (!(T >= 10.0)) throw DomainError("short_theta_diagonal_check needs T >= 10");
  const detail::MomentSetup m = detail::moment_setup(spec, N, primes);
  const double L = T / std::log(T);
  const double scale = std::sqrt(2.0 * std::numbers::pi) * L;

  DiagonalCheck out;
  out.min_log_gap = std::numeric_limits<double>::infinity();
  CompensatedSum<> full, diag, norm;
  for (std::size_t i = 0; i < m.a_terms.size(); ++i) {
    const auto& a = m.a_terms[i];
    const std::uint64_t p = m.a_index[i];
    for (std::uint64_t k = 1; k <= N; ++k) {
      if (m.r[k] == 0.0) continue;
      const complex ak = a.coeff * m.r[k];
      for (std::uint64_t j = 1; j <= N; ++j) {
        if (m.r[j] == 0.0) continue;
        const double contribution = (ak * std::conj(m.r[j])).real();
        if (p * k == j) {
          full.add(contribution);
          continue;
        }
        const double gap = std::abs(a.log_n + std::log(double(k)) - std::log(double(j)));
        out.min_log_gap = std::min(out.min_log_gap, gap);
        const double w = gaussian_weight(L * gap);
        out.max_offdiag_weight = std::max(out.max_offdiag_weight, w);
        full.add(contribution * w);
      }
    }
    CompensatedSum<> head;
    for (std::uint64_t k = 1; k * p <= N; ++k) head.add(std::norm(m.r[k]));
    const double rp = std::abs(spec.at_prime(p));
    diag.add(std::log(double(p)) / double(p) * rp * head.value());
    norm.add(std::abs(a.coeff) * rp);
  }
  CompensatedSum<> mass;
  for (std::uint64_t k = 1; k <= N; ++k) mass.add(std::norm(m.r[k]));
  out.closed_form = scale * full.value();
  out.diagonal = scale * diag.value();
  const double denom = scale * norm.value() * mass.value();
  out.relative_discrepancy = denom > 0.0 ? std::abs(out.closed_form - out.diagonal) / denom
                                         : std::abs(out.closed_form - out.diagonal);
  return out;
}

/// Head and total of Σ|r(n)|² for the Rankin-trick ratio.
struct RankinTail {
  double head = 0.0;   ///< n <= N/X
  double total = 0.0;  ///< n <= N
  double ratio = 1.0;
  std::uint64_t terms = 0;
};

inline constexpr std::uint64_t kRankinMaxN = 10'000'000;
inline constexpr std::uint64_t kRankinMaxTerms = 10'000'000;

/// Enumerates X-smooth n <= N depth first over the primes up to X.
inline RankinTail rankin_tail_check(const ResonatorSpec& spec, std::uint64_t N, const arith::PrimeTable& primes) {
  if (N > kRankinMaxN) throw DomainError("rankin_tail_check needs N <= 10^7");
  RankinTail out;
  if (N < 1) return out;
  std::vector<std::uint64_t> ps;
  std::vector<double> w;  // |r(p)|²
  for (const std::uint32_t p : primes.primes()) {
    if (double(p) > spec.X || p > N) break;
    ps.push_back(p);
    w.push_back(std::norm(spec.at_prime(p)));
  }
  if (std::min(spec.X, double(N)) > double(primes.limit())) {
    throw DomainError("rankin_tail_check: prime table too small for min(X, N)");
  }
  const double head_limit = double(N) / spec.X;
  // Collect values in DFS order, then sum in increasing n for a fixed order.
  std::vector<std::pair<std::uint64_t, double>> values;
  auto dfs = [&](auto&& self, std::size_t start, std::uint64_t n, double v) -> void {
    if (values.size() >= kRankinMaxTerms) throw ResourceError("rankin_tail_check exceeded 10^7 smooth terms");
    values.emplace_back(n, v);
    for (std::size_t i = start; i < ps.size(); ++i) {
      if (n > N / ps[i]) break;
      self(self, i, n * ps[i], v * w[i]);
    }
  };
  dfs(dfs, 0, 1, 1.0);
  std::sort(values.begin(), values.end());
  CompensatedSum<> head, total;
  for (const auto& [n, v] : values) {
    total.add(v);
    if (double(n) <= head_limit) head.add(v);
  }
  out.head = head.value();
  out.total = total.value();
  out.ratio = out.head / out.total;
  out.terms = values.size();
  return out;
}

}  // namespace resonlab::resonator
