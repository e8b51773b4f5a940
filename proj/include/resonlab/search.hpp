#pragma once

// Extreme-value scans over t, sweeps over prime moduli, threshold studies
// and the conjecture ratio reports.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "resonlab/arith.hpp"
#include "resonlab/dirichlet.hpp"
#include "resonlab/error.hpp"
#include "resonlab/numeric.hpp"
#include "resonlab/parallel.hpp"
#include "resonlab/special.hpp"

namespace resonlab::search {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr std::uint64_t kMaxGridPoints = 1'000'000'000;
/// Grid points per work unit. Fixed so the chunking, and with it every
/// rounding, is independent of the thread count.
inline constexpr std::size_t kChunkPoints = 1 << 15;

struct ScanConfig {
  double t_min = 10.0;
  double t_max = 1000.0;
  double grid_step = 0.05;
  int refine_iters = 40;
  std::uint64_t Y = 1000;
  double sigma = 1.0;
  std::vector<double> theta_list;
  double beta = 0.5;  // reporting only
  std::vector<double> x_list;
  std::size_t top_k = 5;

  void validate() const {
    if (!(std::isfinite(t_min) && std::isfinite(t_max) && t_min <= t_max)) {
      throw DomainError("scan needs finite t_min <= t_max");
    }
    if (!(grid_step > 0.0)) throw DomainError("grid_step must be positive");
    if (refine_iters < 0) throw DomainError("refine_iters must be nonnegative");
    if (Y < 100) throw DomainError("scan needs Y >= 100");
    if (!(sigma > 0.5 && sigma <= 1.0)) throw DomainError("scan needs sigma in (1/2, 1]");
    if (top_k < 1) throw DomainError("top_k must be at least 1");
    for (const double th : theta_list) {
      if (!(th >= 0.0 && th < 2.0 * std::numbers::pi)) throw DomainError("theta values must lie in [0, 2pi)");
    }
  }

  std::uint64_t grid_points() const {
    const double n = std::floor((t_max - t_min) / grid_step) + 1.0;
    if (n > double(kMaxGridPoints)) {
      throw ResourceError("scan grid of " + std::to_string(n) + " points exceeds 10^9");
    }
    return static_cast<std::uint64_t>(n);
  }
};

enum class Method { fast, oracle };

inline const char* method_name(Method m) { return m == Method::fast ? "fast" : "oracle"; }

/// One observation of ζ'/ζ(σ+it). Values come from the truncated series;
/// an oracle record additionally carries the Euler–Maclaurin value and
/// |fast - oracle|.
struct ScanRecord {
  double t = 0.0;
  double value_neg_re = 0.0;  ///< -Re ζ'/ζ
  double value_abs = 0.0;     ///< |ζ'/ζ|
  std::vector<double> value_dir;  ///< Re(e^{-iθ} ζ'/ζ) per θ in theta_list
  Method method = Method::fast;
  std::uint64_t Y_used = 0;
  double oracle_neg_re = kNaN;
  double oracle_delta = kNaN;
};

inline std::vector<double> directional(complex v, const std::vector<double>& thetas) {
  std::vector<double> out;
  out.reserve(thetas.size());
  for (const double th : thetas) out.push_back((std::polar(1.0, -th) * v).real());
  return out;
}

namespace detail {

struct Peak {
  double value;
  std::uint64_t index;
};

inline bool peak_before(const Peak& a, const Peak& b) {
  return a.value != b.value ? a.value > b.value : a.index < b.index;
}

/// Evaluates -Re P on the grid in fixed chunks and returns the top-k local
/// maxima (endpoints count when they beat their single neighbour).
inline std::vector<Peak> grid_peaks(const special::DirichletPolynomial& poly, const ScanConfig& cfg,
                                    std::uint64_t points, unsigned threads) {
  const std::size_t chunks = (points + kChunkPoints - 1) / kChunkPoints;
  auto per_chunk = parallel_map(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunkPoints;
    const std::uint64_t hi = std::min<std::uint64_t>(points, lo + kChunkPoints);
    // One guard point on each side so that interior maxima at chunk edges are seen.
    const std::uint64_t glo = lo == 0 ? 0 : lo - 1;
    const std::uint64_t ghi = std::min<std::uint64_t>(points, hi + 1);
    std::vector<complex> vals(ghi - glo);
    poly.evaluate_grid(cfg.t_min + double(glo) * cfg.grid_step, cfg.grid_step, vals);
    std::vector<Peak> peaks;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double v = -vals[i - glo].real();
      const bool left_ok = i == 0 || v >= -vals[i - 1 - glo].real();
      const bool right_ok = i + 1 == points || v > -vals[i + 1 - glo].real();
      if (left_ok && right_ok) peaks.push_back({v, i});
    }
    std::sort(peaks.begin(), peaks.end(), peak_before);
    if (peaks.size() > cfg.top_k) peaks.resize(cfg.top_k);
    return peaks;
  });
  std::vector<Peak> all;
  for (const auto& p : per_chunk) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(), peak_before);
  if (all.size() > cfg.top_k) all.resize(cfg.top_k);
  return all;
}

/// Golden-section search for a maximum of -Re P on [t0 - h, t0 + h]. The
/// returned point is the best of all evaluated points, including t0.
inline double refine(const special::DirichletPolynomial& poly, double t0, double h, int iters, double lo_clip,
                     double hi_clip) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(lo_clip, t0 - h), b = std::min(hi_clip, t0 + h);
  auto f = [&](double t) { return -poly.evaluate(t).real(); };
  double best_t = t0, best_v = f(t0);
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iters; ++it) {
    if (fc > best_v) best_v = fc, best_t = c;
    if (fd > best_v) best_v = fd, best_t = d;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  if (fc > best_v) best_v = fc, best_t = c;
  if (fd > best_v) best_t = d;
  return best_t;
}

inline ScanRecord make_record(const special::DirichletPolynomial& poly, double t, const ScanConfig& cfg) {
  const complex v = poly.evaluate(t);
  ScanRecord r;
  r.t = t;
  r.value_neg_re = -v.real();
  r.value_abs = std::abs(v);
  r.value_dir = directional(v, cfg.theta_list);
  r.Y_used = cfg.Y;
  return r;
}

/// Grid scan, refinement and oracle check shared by the ζ scans.
struct ScanOutcome {
  std::vector<ScanRecord> records;
  double best_grid_value = kNaN;
};

inline ScanOutcome run_scan(const ScanConfig& cfg, const arith::PrimeTable& primes, unsigned threads) {
  cfg.validate();
  if (cfg.Y > primes.limit()) throw DomainError("scan truncation Y exceeds prime table limit");
  const std::uint64_t points = cfg.grid_points();
  const auto poly = special::zeta_logderiv_polynomial(cfg.sigma, cfg.Y, primes);
  const auto peaks = grid_peaks(poly, cfg, points, threads);

  ScanOutcome out;
  out.best_grid_value = peaks.empty() ? kNaN : peaks.front().value;
  auto refined = parallel_map(peaks.size(), threads, [&](std::size_t i) {
    const double t0 = cfg.t_min + double(peaks[i].index) * cfg.grid_step;
    const double t = points == 1 ? t0 : refine(poly, t0, cfg.grid_step, cfg.refine_iters, cfg.t_min, cfg.t_max);
    return make_record(poly, t, cfg);
  });
  std::stable_sort(refined.begin(), refined.end(),
                   [](const ScanRecord& a, const ScanRecord& b) { return a.value_neg_re > b.value_neg_re; });
  // The Euler–Maclaurin oracle is limited to |t| <= 10^6; beyond that the
  // top record stays a fast record.
  if (!refined.empty() && std::abs(refined.front().t) <= 1e6) {
    ScanRecord& top = refined.front();
    const complex fast = poly.evaluate(top.t);
    const complex oracle = special::zeta_logderiv_oracle(cfg.sigma, top.t);
    top.method = Method::oracle;
    top.oracle_neg_re = -oracle.real();
    top.oracle_delta = std::abs(fast - oracle);
  }
  out.records = std::move(refined);
  return out;
}

inline double table_E(const arith::PrimeTable& primes) {
  return arith::prime_square_tail_constant(primes, primes.limit()).value;
}

}  // namespace detail

/// Top-k local maxima of -Re ζ'/ζ(σ+it) over the grid, refined by golden
/// section; the best record is re-evaluated by Euler–Maclaurin.
inline std::vector<ScanRecord> zeta_extreme_scan(const ScanConfig& cfg, const arith::PrimeTable& primes,
                                                 unsigned threads = default_threads()) {
  return detail::run_scan(cfg, primes, threads).records;
}

/// Exceedance statistics at one threshold.
struct ThresholdStudy {
  double scale = 0.0;  ///< T or q
  double x = 0.0;
  double threshold = 0.0;
  double exceed = 0.0;  ///< measure (t side) or count (q side)
  double empirical_exponent = kNaN;  ///< log(exceed)/log(scale); NaN when exceed = 0
  double predicted_exponent = 0.0;
  std::uint64_t below = 0;  ///< q side: nonprincipal characters under the threshold
};

/// J̃_x = log_2 T + log_3 T + C1(β) - x, with T = t_max.
inline double measure_threshold(double T, double beta, double x, double E) {
  return log2_iter(T) + log3_iter(T) + arith::c1_constant(beta, E) - x;
}

/// Measure of {t in [t_min, t_max] : -Re ζ'/ζ(σ+it) >= J̃_x} on the midpoint
/// grid, for every x in cfg.x_list.
inline std::vector<ThresholdStudy> measure_study(const ScanConfig& cfg, const arith::PrimeTable& primes,
                                                 unsigned threads = default_threads()) {
  cfg.validate();
  if (cfg.Y > primes.limit()) throw DomainError("measure_study truncation Y exceeds prime table limit");
  if (!(cfg.beta > 0.0 && cfg.beta < 1.0)) throw DomainError("measure_study needs beta in (0, 1)");
  const double T = cfg.t_max;
  if (!(T > std::exp(std::exp(1.0)))) throw DomainError("measure_study needs t_max > e^e so that log_3 T > 0");
  const double E = detail::table_E(primes);
  std::vector<double> thresholds;
  for (const double x : cfg.x_list) thresholds.push_back(measure_threshold(T, cfg.beta, x, E));

  const double range = cfg.t_max - cfg.t_min;
  const double cells_d = std::floor(range / cfg.grid_step);
  if (cells_d > double(kMaxGridPoints)) throw ResourceError("measure grid exceeds 10^9 points");
  const auto cells = static_cast<std::uint64_t>(cells_d);
  const auto poly = special::zeta_logderiv_polynomial(cfg.sigma, cfg.Y, primes);
  const std::size_t chunks = (cells + kChunkPoints - 1) / kChunkPoints;
  auto counts = parallel_map(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunkPoints;
    const std::uint64_t hi = std::min<std::uint64_t>(cells, lo + kChunkPoints);
    std::vector<complex> vals(hi - lo);
    poly.evaluate_grid(cfg.t_min + (double(lo) + 0.5) * cfg.grid_step, cfg.grid_step, vals);
    std::vector<std::uint64_t> n(thresholds.size(), 0);
    for (const complex& v : vals) {
      for (std::size_t k = 0; k < thresholds.size(); ++k) n[k] += -v.real() >= thresholds[k] ? 1 : 0;
    }
    return n;
  });
  std::vector<ThresholdStudy> out;
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    std::uint64_t n = 0;
    for (const auto& c : counts) n += c[k];
    ThresholdStudy s;
    s.scale = T;
    s.x = cfg.x_list[k];
    s.threshold = thresholds[k];
    s.exceed = double(n) * cfg.grid_step;
    s.empirical_exponent = s.exceed > 0.0 ? std::log(s.exceed) / std::log(T) : kNaN;
    s.predicted_exponent = 1.0 - (1.0 - cfg.beta) * std::exp(-cfg.x_list[k]);
    out.push_back(s);
  }
  return out;
}

/// Extremes over the nonprincipal characters mod one prime q. Character
/// values are the batch sums S(χ) = Σ Λχ(n)/n^σ ≈ -L'/L(σ, χ), so the
/// recorded -Re L'/L is Re S and the directional value is Re(-e^{-iθ} S).
struct SweepRecord {
  std::uint64_t q = 0;
  std::uint64_t j_argmax = 0;
  double max_neg_re = 0.0;
  double max_abs = 0.0;
  std::vector<double> dir_max;  ///< per θ
  std::vector<std::uint64_t> dir_argmax;
  std::uint64_t Y = 0;
  double sigma = 1.0;
  double oracle_neg_re = kNaN;  ///< -Re L'/L at j_argmax by Stieltjes constants
  double oracle_delta = kNaN;
  double euler_kronecker = kNaN;
};

struct SweepOptions {
  bool cross_check = false;     ///< σ = 1 only
  bool euler_kronecker = false;
};

inline SweepRecord sweep_one(std::uint64_t q, double sigma, std::uint64_t Y, const std::vector<double>& thetas,
                             const arith::PrimeTable& primes, const SweepOptions& opt) {
  const dirichlet::CharacterTable table(q);
  const auto S = dirichlet::batch_truncated_sums(table, sigma, Y, primes);
  SweepRecord r;
  r.q = q;
  r.Y = Y;
  r.sigma = sigma;
  r.max_neg_re = -std::numeric_limits<double>::infinity();
  r.dir_max.assign(thetas.size(), -std::numeric_limits<double>::infinity());
  r.dir_argmax.assign(thetas.size(), 0);
  for (std::uint64_t j = 1; j < S.size(); ++j) {
    if (S[j].real() > r.max_neg_re) {
      r.max_neg_re = S[j].real();
      r.j_argmax = j;
    }
    r.max_abs = std::max(r.max_abs, std::abs(S[j]));
    for (std::size_t k = 0; k < thetas.size(); ++k) {
      const double d = (-std::polar(1.0, -thetas[k]) * S[j]).real();
      if (d > r.dir_max[k]) {
        r.dir_max[k] = d;
        r.dir_argmax[k] = j;
      }
    }
  }
  if (opt.cross_check) {
    if (sigma != 1.0) throw DomainError("char_sweep cross-check needs sigma = 1");
    const complex o = dirichlet::llogderiv_oracle(table, {r.j_argmax});
    r.oracle_neg_re = -o.real();
    r.oracle_delta = std::abs(-S[r.j_argmax] - o);
  }
  if (opt.euler_kronecker) r.euler_kronecker = dirichlet::euler_kronecker(q).value;
  return r;
}

/// One record per prime q in [q_min, q_max], in increasing q.
inline std::vector<SweepRecord> char_sweep(std::uint64_t q_min, std::uint64_t q_max, double sigma, std::uint64_t Y,
                                           const std::vector<double>& thetas, const arith::PrimeTable& primes,
                                           const SweepOptions& opt = {}, unsigned threads = default_threads()) {
  if (q_min > q_max) throw DomainError("char_sweep needs q_min <= q_max");
  if (q_max > dirichlet::kMaxModulus) throw DomainError("char_sweep q_max exceeds the character table guard 2^24");
  if (!(sigma > 0.5 && sigma <= 1.0)) throw DomainError("char_sweep needs sigma in (1/2, 1]");
  if (Y > primes.limit()) throw DomainError("char_sweep truncation Y exceeds prime table limit");
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = std::max<std::uint64_t>(q_min, 3); q <= q_max; ++q) {
    if (dirichlet::is_prime_trial(q)) qs.push_back(q);
  }
  return parallel_map(qs.size(), threads,
                      [&](std::size_t i) { return sweep_one(qs[i], sigma, Y, thetas, primes, opt); });
}

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_slope needs two or more points");
  const double n = double(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

/// Threshold log_2 q + log_3 q + C2 - x for the character count.
inline double count_threshold(double q, double x, double E) {
  return log2_iter(q) + log3_iter(q) + arith::c2_constant(E) - x;
}

/// Number of nonprincipal χ mod q with -Re L'/L(σ, χ) (as Re S) at or above
/// the threshold, for every x in x_list.
inline std::vector<ThresholdStudy> count_study(std::uint64_t q, const std::vector<double>& x_list, std::uint64_t Y,
                                               const arith::PrimeTable& primes, double sigma = 1.0) {
  if (q < 17) throw DomainError("count_study needs q >= 17 so that log_3 q > 0");
  if (Y > primes.limit()) throw DomainError("count_study truncation Y exceeds prime table limit");
  const dirichlet::CharacterTable table(q);
  const auto S = dirichlet::batch_truncated_sums(table, sigma, Y, primes);
  const double E = detail::table_E(primes);
  std::vector<ThresholdStudy> out;
  for (const double x : x_list) {
    ThresholdStudy s;
    s.scale = double(q);
    s.x = x;
    s.threshold = count_threshold(double(q), x, E);
    std::uint64_t n = 0;
    for (std::size_t j = 1; j < S.size(); ++j) n += S[j].real() >= s.threshold ? 1 : 0;
    s.exceed = double(n);
    s.below = (q - 2) - n;
    s.empirical_exponent = n > 0 ? std::log(double(n)) / std::log(double(q)) : kNaN;
    s.predicted_exponent = 1.0 - std::exp(-x);
    out.push_back(s);
  }
  return out;
}

/// Scan at a fixed σ in (1/2, 1) together with the predicted floor
/// C3(σ)(log T)^{1-σ}(log_2 T)^{1-σ}, T = t_max.
struct StripScanResult {
  std::vector<ScanRecord> records;
  double T = 0.0;
  double C3 = 0.0;
  double floor = 0.0;
};

inline double strip_floor(double C3, double sigma, double T) {
  return C3 * std::pow(std::log(T) * log2_iter(T), 1.0 - sigma);
}

inline StripScanResult strip_scan(double sigma, ScanConfig cfg, const arith::PrimeTable& primes, double eps = 0.01,
                                  unsigned threads = default_threads()) {
  if (!(sigma > 0.5 && sigma < 1.0)) throw DomainError("strip_scan needs sigma in (1/2, 1)");
  cfg.sigma = sigma;
  const auto constants = arith::constants_report(cfg.beta, sigma, eps, primes, primes.limit());
  StripScanResult out;
  out.records = detail::run_scan(cfg, primes, threads).records;
  out.T = cfg.t_max;
  out.C3 = constants.C3.value;
  out.floor = strip_floor(out.C3, sigma, out.T);
  return out;
}

/// Per-θ maxima for the conjecture ratio report.
struct ConjectureRow {
  double theta = 0.0;
  double max_dir = 0.0;        ///< max Re(e^{-iθ} F'/F)
  double max_abs_deriv = 0.0;  ///< max |F'|
  double max_abs_value = 0.0;  ///< max |F|
  double ratio = 0.0;          ///< max|F'| / max|F|
};

namespace detail {
inline std::vector<ConjectureRow> conjecture_rows(const std::vector<double>& thetas, const std::vector<double>& dir_max,
                                                  double max_deriv, double max_value) {
  std::vector<ConjectureRow> rows;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    rows.push_back({thetas[k], dir_max[k], max_deriv, max_value, max_deriv / max_value});
  }
  return rows;
}
}  // namespace detail

/// Dirichlet mode: L(σ, χ) from the finite Euler product over p^k <= Y and
/// L' = L · (L'/L), maximised over nonprincipal χ mod q.
inline std::vector<ConjectureRow> conjecture_report_dirichlet(std::uint64_t q, double sigma,
                                                              const std::vector<double>& thetas, std::uint64_t Y,
                                                              const arith::PrimeTable& primes) {
  if (!(sigma > 0.5 && sigma <= 1.0)) throw DomainError("conjecture_report needs sigma in (1/2, 1]");
  const dirichlet::CharacterTable table(q);
  const auto S = dirichlet::batch_truncated_sums(table, sigma, Y, primes);
  const auto logL = dirichlet::batch_prime_power_sums(table, Y, primes, [&](std::uint64_t n, std::uint64_t p) {
    return std::log(double(p)) / std::log(double(n)) * std::exp(-sigma * std::log(double(n)));
  });
  std::vector<double> dir_max(thetas.size(), -std::numeric_limits<double>::infinity());
  double max_deriv = 0.0, max_value = 0.0;
  for (std::size_t j = 1; j < S.size(); ++j) {
    const complex ld = -S[j];
    const complex L = std::exp(logL[j]);
    max_value = std::max(max_value, std::abs(L));
    max_deriv = std::max(max_deriv, std::abs(L * ld));
    for (std::size_t k = 0; k < thetas.size(); ++k) {
      dir_max[k] = std::max(dir_max[k], (std::polar(1.0, -thetas[k]) * ld).real());
    }
  }
  return detail::conjecture_rows(thetas, dir_max, max_deriv, max_value);
}

/// ζ mode: the same three maxima over the grid t in [T, 2T] with step h.
inline std::vector<ConjectureRow> conjecture_report_zeta(double T, double sigma, const std::vector<double>& thetas,
                                                         std::uint64_t Y, const arith::PrimeTable& primes,
                                                         double step = 0.05, unsigned threads = default_threads()) {
  if (!(sigma > 0.5 && sigma <= 1.0)) throw DomainError("conjecture_report needs sigma in (1/2, 1]");
  if (!(T >= 1.0 && std::isfinite(T))) throw DomainError("conjecture_report needs T >= 1");
  if (!(step > 0.0)) throw DomainError("conjecture_report needs a positive step");
  if (Y > primes.limit()) throw DomainError("conjecture_report truncation Y exceeds prime table limit");
  const double n_d = std::floor(T / step) + 1.0;
  if (n_d > double(kMaxGridPoints)) throw ResourceError("conjecture grid exceeds 10^9 points");
  const auto points = static_cast<std::uint64_t>(n_d);
  const auto ld_poly = special::zeta_logderiv_polynomial(sigma, Y, primes);
  const auto log_poly = special::zeta_log_polynomial(sigma, Y, primes);
  struct Partial {
    std::vector<double> dir;
    double deriv = 0.0, value = 0.0;
  };
  const std::size_t chunks = (points + kChunkPoints - 1) / kChunkPoints;
  auto parts = parallel_map(chunks, threads, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunkPoints;
    const std::uint64_t hi = std::min<std::uint64_t>(points, lo + kChunkPoints);
    std::vector<complex> ld(hi - lo), lg(hi - lo);
    ld_poly.evaluate_grid(T + double(lo) * step, step, ld);
    log_poly.evaluate_grid(T + double(lo) * step, step, lg);
    Partial p;
    p.dir.assign(thetas.size(), -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < ld.size(); ++i) {
      const complex z = std::exp(lg[i]);
      p.value = std::max(p.value, std::abs(z));
      p.deriv = std::max(p.deriv, std::abs(z * ld[i]));
      for (std::size_t k = 0; k < thetas.size(); ++k) {
        p.dir[k] = std::max(p.dir[k], (std::polar(1.0, -thetas[k]) * ld[i]).real());
      }
    }
    return p;
  });
  std::vector<double> dir_max(thetas.size(), -std::numeric_limits<double>::infinity());
  double max_deriv = 0.0, max_value = 0.0;
  for (const auto& p : parts) {
    max_deriv = std::max(max_deriv, p.deriv);
    max_value = std::max(max_value, p.value);
    for (std::size_t k = 0; k < thetas.size(); ++k) dir_max[k] = std::max(dir_max[k], p.dir[k]);
  }
  return detail::conjecture_rows(thetas, dir_max, max_deriv, max_value);
}

}  // namespace resonlab::search
