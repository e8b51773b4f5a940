#pragma once

// Hurwitz zeta and its s-derivative by Euler–Maclaurin summation, the first
// two generalized Stieltjes constants, and the two routes to ζ'/ζ(σ+it).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "resonlab/arith.hpp"
#include "resonlab/error.hpp"
#include "resonlab/numeric.hpp"

namespace resonlab::special {

struct EulerMaclaurinConfig {
  /// Direct-sum length M. Zero selects 50 + 2|Im s|, raised to ceil(|s|) + 10
  /// when that is larger.
  std::int64_t cutoff = 0;
  int bernoulli_terms = 12;
  double target_abs_error = 1e-12;
};

namespace detail {

inline std::int64_t resolve_cutoff(const EulerMaclaurinConfig& cfg, complex s) {
  if (cfg.bernoulli_terms < 2 || cfg.bernoulli_terms > 30) {
    throw DomainError("bernoulli_terms must lie in [2, 30]");
  }
  const auto floor_m = static_cast<std::int64_t>(std::ceil(std::abs(s))) + 10;
  if (cfg.cutoff == 0) {
    const auto auto_m = static_cast<std::int64_t>(50.0 + 2.0 * std::abs(s.imag()));
    return std::max(auto_m, floor_m);
  }
  if (cfg.cutoff < floor_m) {
    throw DomainError("Euler-Maclaurin cutoff " + std::to_string(cfg.cutoff) + " below ceil(|s|)+10 = " +
                      std::to_string(floor_m));
  }
  return cfg.cutoff;
}

/// B_{2k} / (2k)!
inline double bernoulli_over_factorial(int k) {
  return boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(2 * k);
}

}  // namespace detail

struct HurwitzResult {
  complex value;
  complex derivative;         ///< ∂/∂s ζ(s, x)
  double value_bound = 0.0;   ///< Euler–Maclaurin remainder bound
  double derivative_bound = 0.0;
};

/// ζ(s, x) and ∂_s ζ(s, x) for Re s > 0, s != 1, 0 < x <= 1.
///
/// Direct sum over n < M, then the integral term (M+x)^{1-s}/(s-1), the
/// half-term and `bernoulli_terms` Bernoulli corrections. The value remainder
/// uses the standard bound
///   |R| <= 4 |(s)_{2K}| / (2π)^{2K} · (M+x)^{1-σ-2K} / (σ+2K-1);
/// the derivative bound scales it by log(M+x) + Σ 1/|s+j| and is heuristic.
inline HurwitzResult hurwitz_zeta_with_derivative(complex s, double x, const EulerMaclaurinConfig& cfg = {}) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("hurwitz_zeta needs x in (0, 1]");
  if (!(s.real() > 0.0)) throw DomainError("hurwitz_zeta needs Re(s) > 0");
  if (std::abs(s.imag()) > 1e6) throw DomainError("hurwitz_zeta needs |Im s| <= 10^6");
  if (s == complex(1.0, 0.0)) throw PoleError("hurwitz_zeta at s = 1");

  const std::int64_t M = detail::resolve_cutoff(cfg, s);
  const int K = cfg.bernoulli_terms;
  const double sigma = s.real();
  const double t = s.imag();

  CompensatedSum<double> vr, vi, dr, di;
  for (std::int64_t n = 0; n < M; ++n) {
    const double u = static_cast<double>(n) + x;
    const double lu = std::log(u);
    const double mag = std::exp(-sigma * lu);
    const double ph = t * lu;
    const double wr = mag * std::cos(ph);
    const double wi = -mag * std::sin(ph);
    vr.add(wr);
    vi.add(wi);
    dr.add(-lu * wr);
    di.add(-lu * wi);
  }
  complex value(vr.value(), vi.value());
  complex deriv(dr.value(), di.value());

  const double a = static_cast<double>(M) + x;
  const double la = std::log(a);
  const complex a_pow = std::exp(-s * la);  // a^{-s}
  const complex sm1 = s - 1.0;
  const complex integral = a * a_pow / sm1;
  value += integral + 0.5 * a_pow;
  deriv += integral * (-la - 1.0 / sm1) - 0.5 * la * a_pow;

  complex poch = s;        // s (s+1) ... (s+2k-2)
  complex dpoch = 1.0;     // its s-derivative
  complex pw = a_pow / a;  // a^{-s-2k+1}
  double inv_sum = 1.0 / std::abs(s);
  for (int k = 1; k <= K; ++k) {
    const double coef = detail::bernoulli_over_factorial(k);
    value += coef * poch * pw;
    deriv += coef * (dpoch - la * poch) * pw;
    const complex f1 = s + static_cast<double>(2 * k - 1);
    const complex f2 = s + static_cast<double>(2 * k);
    dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch = poch * f1 * f2;
    pw /= a * a;
    inv_sum += 1.0 / std::abs(f1) + 1.0 / std::abs(f2);
  }
  // (s)_{2K} = s (s+1) ... (s+2K-1) = poch_K (s+2K-1); poch now holds poch_{K+1}.
  const complex poch_2k = poch / (s + static_cast<double>(2 * K));
  const double denom = sigma + 2.0 * K - 1.0;
  const double bound = 4.0 * std::abs(poch_2k) / std::pow(kTwoPi, 2 * K) *
                       std::exp((1.0 - sigma - 2.0 * K) * la) / denom;

  HurwitzResult out;
  out.value = value;
  out.derivative = deriv;
  out.value_bound = bound;
  out.derivative_bound = bound * (la + inv_sum + 1.0 / denom);
  if (!(bound <= cfg.target_abs_error)) {
    throw PrecisionError("Euler-Maclaurin remainder bound " + std::to_string(bound) + " exceeds target " +
                         std::to_string(cfg.target_abs_error));
  }
  return out;
}

inline complex hurwitz_zeta(complex s, double x, const EulerMaclaurinConfig& cfg = {}) {
  return hurwitz_zeta_with_derivative(s, x, cfg).value;
}

inline complex hurwitz_zeta_ds(complex s, double x, const EulerMaclaurinConfig& cfg = {}) {
  return hurwitz_zeta_with_derivative(s, x, cfg).derivative;
}

struct StieltjesPair {
  double gamma0 = 0.0;  ///< -ψ(x)
  double gamma1 = 0.0;
};

/// γ0(x) and γ1(x) from
///   γ_n(x) = lim_{M→∞} [ Σ_{k<=M} log^n(k+x)/(k+x) - log^{n+1}(M+x)/(n+1) ],
/// evaluated by Euler–Maclaurin on f(u) = log^n(u)/u with the closed forms
///   f^{(m)}(u) = (-1)^m m! / u^{m+1}                 (n = 0)
///   f^{(m)}(u) = (-1)^m m! (log u - H_m) / u^{m+1}   (n = 1).
inline StieltjesPair stieltjes_gamma01(double x, const EulerMaclaurinConfig& cfg = {}) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("stieltjes_gamma01 needs x in (0, 1]");
  const std::int64_t M = detail::resolve_cutoff(cfg, complex(1.0, 0.0));
  const int K = cfg.bernoulli_terms;

  CompensatedSum<double> s0, s1;
  for (std::int64_t k = 0; k < M; ++k) {
    const double u = static_cast<double>(k) + x;
    s0.add(1.0 / u);
    s1.add(std::log(u) / u);
  }
  const double a = static_cast<double>(M) + x;
  const double la = std::log(a);
  double g0 = s0.value() - la + 0.5 / a;
  double g1 = s1.value() - 0.5 * la * la + 0.5 * la / a;

  double harmonic = 0.0;  // H_{2j-1}
  double a_pow = a * a;   // a^{2j}
  for (int j = 1; j <= K; ++j) {
    harmonic += (j == 1) ? 1.0 : 1.0 / (2.0 * j - 2.0) + 1.0 / (2.0 * j - 1.0);
    const double b = boost::math::bernoulli_b2n<double>(j);
    g0 += b / (2.0 * j * a_pow);
    g1 += b * (la - harmonic) / (2.0 * j * a_pow);
    a_pow *= a * a;
  }
  const double next = std::abs(boost::math::bernoulli_b2n<double>(K + 1)) / (2.0 * (K + 1) * a_pow);
  const double bound = 2.0 * next * (la + harmonic + 1.0);
  if (!(bound <= cfg.target_abs_error)) {
    throw PrecisionError("Stieltjes remainder bound " + std::to_string(bound) + " exceeds target");
  }
  return {g0, g1};
}

/// Second route to γ1(x): symmetric Richardson extrapolation of
/// ∂_s[ζ(s,x) - 1/(s-1)] at s = 1 ± δ, δ ∈ {h, h/2, h/4}. Smaller h loses
/// digits to the 1/δ² cancellation faster than it gains in truncation.
inline double stieltjes_gamma1_richardson(double x, double h = 0.04, const EulerMaclaurinConfig& cfg = {}) {
  auto g = [&](double d) {
    const double plus = hurwitz_zeta_ds(complex(1.0 + d, 0.0), x, cfg).real() + 1.0 / (d * d);
    const double minus = hurwitz_zeta_ds(complex(1.0 - d, 0.0), x, cfg).real() + 1.0 / (d * d);
    return 0.5 * (plus + minus);  // -γ1 + O(d^2), even in d
  };
  const double a0 = g(h), a1 = g(h / 2), a2 = g(h / 4);
  const double b0 = (4.0 * a1 - a0) / 3.0;
  const double b1 = (4.0 * a2 - a1) / 3.0;
  return -((16.0 * b1 - b0) / 15.0);
}

inline constexpr double kNearZeroGuard = 1e-12;

/// ζ'/ζ(σ+it) from Euler–Maclaurin values of ζ and ζ'.
inline complex zeta_logderiv_oracle(double sigma, double t, const EulerMaclaurinConfig& cfg = {}) {
  if (!(sigma > 0.5 && sigma <= 3.0)) throw DomainError("zeta_logderiv_oracle needs sigma in (1/2, 3]");
  if (std::abs(t) > 1e6) throw DomainError("zeta_logderiv_oracle needs |t| <= 10^6");
  if (sigma == 1.0 && t == 0.0) throw PoleError("zeta has a pole at s = 1");
  const HurwitzResult z = hurwitz_zeta_with_derivative(complex(sigma, t), 1.0, cfg);
  if (std::abs(z.value) < kNearZeroGuard) {
    throw NearZeroError("|zeta(s)| below 1e-12 at s = " + std::to_string(sigma) + " + " + std::to_string(t) + "i");
  }
  return z.derivative / z.value;
}

/// Truncated prime-power approximation to ζ'/ζ(σ+it):
///   -Σ_{n<=Y} Λ(n) n^{-σ} (cos(t log n) - i sin(t log n)),
/// summed over prime powers in the table's canonical order. `Real` selects
/// the working precision of the phase and accumulation.
template <typename Real = double>
std::complex<Real> zeta_logderiv_fast(double sigma, double t, std::uint64_t Y, const arith::PrimeTable& table) {
  if (Y > table.limit()) throw DomainError("zeta_logderiv_fast truncation exceeds prime table");
  const Real rs = sigma;
  const Real rt = t;
  Real re = 0, im = 0;
  Real log_p = 0;
  std::uint64_t last_p = 0;
  table.for_each_prime_power(Y, [&](std::uint64_t n, std::uint64_t p) {
    if (p != last_p) {
      log_p = std::log(static_cast<Real>(p));
      last_p = p;
    }
    const Real ln = std::log(static_cast<Real>(n));
    const Real amp = log_p * std::exp(-rs * ln);
    const Real ph = rt * ln;
    re += amp * std::cos(ph);
    im -= amp * std::sin(ph);
  });
  return {-re, -im};
}

/// Generic Dirichlet polynomial P(t) = Σ a_k e^{-i t ω_k} with frequencies
/// ω_k = log n_k. Grid evaluation advances each phase by a fixed rotation and
/// re-anchors exactly at every call, so callers control drift by chunk size.
class DirichletPolynomial {
 public:
  void add_term(double frequency, complex coeff) {
    freq_.push_back(frequency);
    coeff_.push_back(coeff);
  }

  std::size_t size() const { return freq_.size(); }
  std::span<const double> frequencies() const { return freq_; }
  std::span<const complex> coefficients() const { return coeff_; }

  double max_frequency() const {
    double m = 0.0;
    for (const double f : freq_) m = std::max(m, std::abs(f));
    return m;
  }

  complex evaluate(double t) const {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < freq_.size(); ++k) {
      const double ph = t * freq_[k];
      const double c = std::cos(ph), s = std::sin(ph);
      re += coeff_[k].real() * c + coeff_[k].imag() * s;
      im += coeff_[k].imag() * c - coeff_[k].real() * s;
    }
    return {re, im};
  }

  /// out[i] = P(t0 + i·step) for i < out.size().
  void evaluate_grid(double t0, double step, std::span<complex> out) const {
    const std::size_t n = freq_.size();
    std::vector<double> zr(n), zi(n), rr(n), ri(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double ph = t0 * freq_[k];
      // coefficient times e^{-i t0 ω}
      const double c = std::cos(ph), s = std::sin(ph);
      zr[k] = coeff_[k].real() * c + coeff_[k].imag() * s;
      zi[k] = coeff_[k].imag() * c - coeff_[k].real() * s;
      rr[k] = std::cos(step * freq_[k]);
      ri[k] = -std::sin(step * freq_[k]);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      double re = 0.0, im = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        re += zr[k];
        im += zi[k];
        const double nr = zr[k] * rr[k] - zi[k] * ri[k];
        const double ni = zr[k] * ri[k] + zi[k] * rr[k];
        zr[k] = nr;
        zi[k] = ni;
      }
      out[i] = {re, im};
    }
  }

 private:
  std::vector<double> freq_;
  std::vector<complex> coeff_;
};

/// Polynomial whose value at t is zeta_logderiv_fast(σ, t, Y): coefficients
/// -Λ(n) n^{-σ} at frequencies log n, canonical prime-power order.
inline DirichletPolynomial zeta_logderiv_polynomial(double sigma, std::uint64_t Y, const arith::PrimeTable& table) {
  DirichletPolynomial poly;
  table.for_each_prime_power(Y, [&](std::uint64_t n, std::uint64_t p) {
    const double ln = std::log(static_cast<double>(n));
    poly.add_term(ln, complex(-std::log(static_cast<double>(p)) * std::exp(-sigma * ln), 0.0));
  });
  return poly;
}

/// Finite Euler-product approximation log ζ(σ+it) ≈ Σ_{n<=Y} Λ(n)/(log n · n^{σ+it}).
inline DirichletPolynomial zeta_log_polynomial(double sigma, std::uint64_t Y, const arith::PrimeTable& table) {
  DirichletPolynomial poly;
  table.for_each_prime_power(Y, [&](std::uint64_t n, std::uint64_t p) {
    const double ln = std::log(static_cast<double>(n));
    poly.add_term(ln, complex(std::log(static_cast<double>(p)) / ln * std::exp(-sigma * ln), 0.0));
  });
  return poly;
}

}  // namespace resonlab::special
