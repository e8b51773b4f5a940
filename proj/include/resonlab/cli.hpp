#pragma once

// Command-line front end. run() parses argv, resolves flags over an optional
// key = value config file, dispatches to the library and writes one table.
// Exit codes: 0 success, 1 computation or I/O error, 2 usage error.

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <new>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resonlab/arith.hpp"
#include "resonlab/dirichlet.hpp"
#include "resonlab/parallel.hpp"
#include "resonlab/report.hpp"
#include "resonlab/resonator.hpp"
#include "resonlab/search.hpp"
#include "resonlab/special.hpp"

namespace resonlab::cli {

/// Bad flag value or config key; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frozen tolerance for the prime-sum residual at X = 10^7 (measured
/// residual 6.69e-4 with E summed to 10^7).
inline constexpr double kPrimeSumTolerance = 1e-3;

namespace detail {

enum class Kind { real, integer, list, text };

struct OptionDef {
  std::string name;
  std::string default_value;
  std::string help;
  Kind kind = Kind::real;
};

struct CommandDef {
  std::string name;
  std::string help;
  std::vector<OptionDef> options;
  std::vector<std::pair<std::string, std::string>> flags;  // name, help
};

inline std::vector<CommandDef> commands() {
  using K = Kind;
  const OptionDef prime_limit{"prime-limit", "1e7", "sieve limit (the table covers max(prime-limit, Y))", K::integer};
  const OptionDef theta{"theta", "", "comma-separated directions in [0, 2pi)", K::list};
  return {
      {"constants",
       "explicit constants and admissible resonator budgets",
       {{"beta", "0.5", "beta in (0,1)"},
        {"sigma", "0.75", "sigma in (1/2,1)"},
        {"eps", "0.01", "epsilon in (0,1)"},
        prime_limit},
       {}},
      {"zeta-scan",
       "top-k maxima of -Re zeta'/zeta(sigma+it) on a grid",
       {{"t-min", "10", "start of the t range"},
        {"t-max", "1000", "end of the t range"},
        {"step", "0.05", "grid step"},
        {"refine-iters", "40", "golden-section iterations", K::integer},
        {"Y", "1000", "truncation of the prime-power sum", K::integer},
        {"sigma", "1", "sigma in (1/2,1]"},
        theta,
        {"top-k", "5", "records kept", K::integer},
        prime_limit},
       {}},
      {"strip-scan",
       "zeta scan at fixed sigma with the predicted floor",
       {{"sigma", "0.75", "sigma in (1/2,1)"},
        {"t-min", "10", "start of the t range"},
        {"t-max", "100000", "end of the t range (T)"},
        {"step", "0.05", "grid step"},
        {"refine-iters", "40", "golden-section iterations", K::integer},
        {"Y", "1000", "truncation", K::integer},
        {"beta", "0.5", "beta for the constants"},
        {"eps", "0.01", "epsilon for the constants"},
        theta,
        {"top-k", "5", "records kept", K::integer},
        prime_limit},
       {}},
      {"char-sweep",
       "extremes of -L'/L(sigma, chi) over characters mod each prime q",
       {{"q-min", "3", "smallest modulus", K::integer},
        {"q-max", "100", "largest modulus", K::integer},
        {"sigma", "1", "sigma in (1/2,1]"},
        {"Y", "100000", "truncation", K::integer},
        theta,
        prime_limit},
       {{"cross-check", "compare the argmax character with the Stieltjes oracle (sigma = 1)"},
        {"euler-kronecker", "add the Euler-Kronecker constant of Q(zeta_q)"}}},
      {"count-study",
       "number of characters above log2 q + log3 q + C2 - x",
       {{"q", "1009", "prime modulus", K::integer},
        {"x", "0,1,2", "comma-separated offsets", K::list},
        {"Y", "100000", "truncation", K::integer},
        {"sigma", "1", "sigma in (1/2,1]"},
        prime_limit},
       {}},
      {"measure-study",
       "measure of t with -Re zeta'/zeta above log2 T + log3 T + C1(beta) - x",
       {{"t-min", "10", "start of the t range"},
        {"t-max", "10000", "end of the t range (T)"},
        {"step", "0.05", "grid step"},
        {"Y", "1000", "truncation", K::integer},
        {"sigma", "1", "sigma in (1/2,1]"},
        {"beta", "0.5", "beta in (0,1)"},
        {"x", "0,1,2", "comma-separated offsets", K::list},
        prime_limit},
       {}},
      {"resonate",
       "resonator bounds and moment identity checks",
       {{"kind", "long-1line", "long-1line | long-strip | short-theta", K::text},
        {"X", "", "support cutoff (long kinds; optional override for short-theta)"},
        {"B", "", "budget; sets X = B log T log2 T for the long kinds"},
        {"N", "100000", "short-theta length parameter", K::integer},
        {"sigma", "0.75", "exponent of long-strip"},
        {"theta", "0", "short-theta direction"},
        {"T", "1000", "height for the Gaussian weight"},
        {"terms", "10", "truncation length of R_N in the moment check", K::integer},
        prime_limit},
       {}},
      {"verify",
       "identity and oracle checks; exit 0 iff all pass",
       {{"suite", "asymptotics", "asymptotics | oracles | all", K::text},
        {"X", "1e7", "cutoff for the prime-sum asymptotic", K::integer}},
       {}},
      {"conjectures",
       "max Re(e^{-i theta} F'/F), max |F'|, max |F| and their ratio",
       {{"mode", "dirichlet", "dirichlet | zeta", K::text},
        {"q", "101", "prime modulus (dirichlet mode)", K::integer},
        {"T", "1000", "t range [T, 2T] (zeta mode)"},
        {"sigma", "1", "sigma in (1/2,1]"},
        {"theta", "0", "comma-separated directions in [0, 2pi)", K::list},
        {"Y", "100000", "truncation", K::integer},
        {"step", "0.05", "grid step (zeta mode)"},
        prime_limit},
       {}},
  };
}

/// Resolved string values with typed accessors that report the flag name.
class Params {
 public:
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;

  const std::string& text(const std::string& key) const { return values.at(key); }
  bool has(const std::string& key) const { return !values.at(key).empty(); }
  bool flag(const std::string& key) const { return flags.at(key); }

  double real(const std::string& key) const { return parse_real(key, values.at(key)); }

  std::uint64_t integer(const std::string& key) const {
    const double v = real(key);
    if (!(v >= 0.0 && v <= 9.007199254740992e15 && std::floor(v) == v)) {
      throw UsageError("--" + key + ": expected a nonnegative integer, got '" + values.at(key) + "'");
    }
    return static_cast<std::uint64_t>(v);
  }

  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream ss(values.at(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw UsageError("--" + key + ": empty list element");
      out.push_back(parse_real(key, item));
    }
    return out;
  }

 private:
  static double parse_real(const std::string& key, const std::string& s) {
    std::string t = s;
    while (!t.empty() && t.back() == ' ') t.pop_back();
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v)) {
      throw UsageError("--" + key + ": expected a number, got '" + s + "'");
    }
    return v;
  }
};

/// key = value lines; '#' starts a comment.
inline std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot read " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--config: line " + std::to_string(lineno) + " is not 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (out.count(key)) throw UsageError("--config: duplicate key '" + key + "'");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Context {
  Params p;
  unsigned threads = 1;
};

inline arith::PrimeTable table_for(const Params& p, std::uint64_t Y) {
  const std::uint64_t limit = std::max(p.integer("prime-limit"), Y);
  return arith::PrimeTable(std::max<std::uint64_t>(limit, 10));
}

inline search::ScanConfig scan_config(const Params& p) {
  search::ScanConfig cfg;
  cfg.t_min = p.real("t-min");
  cfg.t_max = p.real("t-max");
  cfg.grid_step = p.real("step");
  cfg.Y = p.integer("Y");
  cfg.sigma = p.real("sigma");
  return cfg;
}

inline report::Table run_constants(const Context& c) {
  const auto& p = c.p;
  const std::uint64_t limit = p.integer("prime-limit");
  return report::constants_table(arith::constants_report(p.real("beta"), p.real("sigma"), p.real("eps"), limit));
}

inline report::Table run_zeta_scan(const Context& c) {
  const auto& p = c.p;
  auto cfg = scan_config(p);
  cfg.refine_iters = static_cast<int>(p.integer("refine-iters"));
  cfg.theta_list = p.list("theta");
  cfg.top_k = p.integer("top-k");
  const auto table = table_for(p, cfg.Y);
  return report::scan_table(search::zeta_extreme_scan(cfg, table, c.threads), cfg.theta_list);
}

inline report::Table run_strip_scan(const Context& c) {
  const auto& p = c.p;
  auto cfg = scan_config(p);
  cfg.refine_iters = static_cast<int>(p.integer("refine-iters"));
  cfg.theta_list = p.list("theta");
  cfg.top_k = p.integer("top-k");
  cfg.beta = p.real("beta");
  const auto table = table_for(p, cfg.Y);
  const auto res = search::strip_scan(p.real("sigma"), cfg, table, p.real("eps"), c.threads);
  return report::strip_table(res, cfg.theta_list);
}

inline report::Table run_char_sweep(const Context& c) {
  const auto& p = c.p;
  const std::uint64_t Y = p.integer("Y");
  const auto table = table_for(p, Y);
  const auto thetas = p.list("theta");
  search::SweepOptions opt;
  opt.cross_check = p.flag("cross-check");
  opt.euler_kronecker = p.flag("euler-kronecker");
  const auto recs =
      search::char_sweep(p.integer("q-min"), p.integer("q-max"), p.real("sigma"), Y, thetas, table, opt, c.threads);
  return report::sweep_table(recs, thetas);
}

inline report::Table run_count_study(const Context& c) {
  const auto& p = c.p;
  const std::uint64_t Y = p.integer("Y");
  const auto table = table_for(p, Y);
  return report::study_table(search::count_study(p.integer("q"), p.list("x"), Y, table, p.real("sigma")));
}

inline report::Table run_measure_study(const Context& c) {
  const auto& p = c.p;
  auto cfg = scan_config(p);
  cfg.beta = p.real("beta");
  cfg.x_list = p.list("x");
  const auto table = table_for(p, cfg.Y);
  return report::study_table(search::measure_study(cfg, table, c.threads));
}

inline resonator::ResonatorSpec resonator_spec(const Params& p) {
  const std::string kind = p.text("kind");
  const double T = p.real("T");
  if (kind == "long-1line" || kind == "long-strip") {
    const bool strip = kind == "long-strip";
    if (p.has("B")) {
      return strip ? resonator::ResonatorSpec::long_strip_from_budget(p.real("sigma"), p.real("B"), T)
                   : resonator::ResonatorSpec::long_1line_from_budget(p.real("B"), T);
    }
    const double X = p.has("X") ? p.real("X") : 100.0;
    return strip ? resonator::ResonatorSpec::long_strip(p.real("sigma"), X) : resonator::ResonatorSpec::long_1line(X);
  }
  if (kind == "short-theta") {
    const std::uint64_t N = p.integer("N");
    return p.has("X") ? resonator::ResonatorSpec::short_theta(p.real("theta"), N, p.real("X"))
                      : resonator::ResonatorSpec::short_theta(p.real("theta"), N);
  }
  throw UsageError("--kind: expected long-1line, long-strip or short-theta, got '" + kind + "'");
}

inline report::Table run_resonate(const Context& c) {
  const auto& p = c.p;
  const auto spec = resonator_spec(p);
  const double T = p.real("T");
  const std::uint64_t terms = p.integer("terms");
  const auto table = table_for(p, std::max<std::uint64_t>(terms, static_cast<std::uint64_t>(std::ceil(spec.X))));
  report::Table t{{"quantity", "value"}, {}};
  t.add({std::string("X"), spec.X});
  t.add({std::string("ratio_lower_bound"), resonator::ratio_lower_bound(spec, table)});
  if (spec.is_long()) t.add({std::string("log_magnitude_bound"), resonator::log_magnitude_bound(spec, table)});
  const auto m = resonator::gaussian_moment_check(spec, terms, T, table, c.threads);
  t.add({std::string("I1"), m.I1});
  t.add({std::string("I2"), m.I2});
  t.add({std::string("ratio"), m.ratio});
  t.add({std::string("truncated_lower_bound"), m.truncated_lower_bound});
  t.add({std::string("moment_discrepancy"), m.discrepancy});
  if (!spec.is_long()) {
    const auto d = resonator::short_theta_diagonal_check(spec, terms, T, table);
    t.add({std::string("diagonal_I2"), d.diagonal});
    t.add({std::string("diagonal_discrepancy"), d.relative_discrepancy});
    t.add({std::string("max_offdiag_weight"), d.max_offdiag_weight});
    const auto r = resonator::rankin_tail_check(spec, spec.N, table);
    t.add({std::string("rankin_ratio"), r.ratio});
  }
  return t;
}

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool pass;
};

inline std::vector<Check> asymptotic_checks(std::uint64_t X, unsigned threads) {
  std::vector<Check> out;
  const arith::PrimeTable table(std::max<std::uint64_t>(X, 10'000'000));
  const auto big = arith::verify_resultcomp(double(X), table);
  const auto small = arith::verify_resultcomp(1e3, table);
  out.push_back({"prime_sum_residual", std::abs(big.residual), kPrimeSumTolerance,
                 std::abs(big.residual) <= kPrimeSumTolerance});
  out.push_back({"prime_sum_residual_decreases", std::abs(big.residual), std::abs(small.residual),
                 std::abs(big.residual) < std::abs(small.residual)});
  const std::vector<resonator::ResonatorSpec> specs = {resonator::ResonatorSpec::long_1line(50.0),
                                                       resonator::ResonatorSpec::long_strip(0.75, 50.0),
                                                       resonator::ResonatorSpec::short_theta(1.0, 100000, 30.0)};
  for (const auto& s : specs) {
    for (std::uint64_t N : {1, 3, 10}) {
      double disc = 0.0;
      bool ok = true;
      try {
        disc = resonator::gaussian_moment_check(s, N, 100.0, table, threads).discrepancy;
      } catch (const IdentityViolation&) {
        ok = false;
        disc = std::numeric_limits<double>::infinity();
      }
      out.push_back({std::string("moment_") + resonator::kind_name(s.kind) + "_N" + std::to_string(N), disc,
                     resonator::kMomentTolerance, ok && disc <= resonator::kMomentTolerance});
    }
  }
  const auto rk = resonator::rankin_tail_check(resonator::ResonatorSpec::short_theta(0.0, 100000), 100000, table);
  out.push_back({"rankin_ratio_N1e5", rk.ratio, 0.9, rk.ratio > 0.9 && rk.ratio <= 1.0});
  return out;
}

inline std::vector<Check> oracle_checks() {
  std::vector<Check> out;
  constexpr double kTol = 1e-2;
  const arith::PrimeTable table(10'000'000);
  // At sigma = 1 the truncation error carries a Y^{1-s}/(1-s) term of size
  // 1/|t|, so small t cannot meet 1e-2 at any Y.
  for (double t : {1000.0, 10000.0}) {
    const complex fast = special::zeta_logderiv_fast(1.0, t, 10'000'000, table);
    const complex oracle = special::zeta_logderiv_oracle(1.0, t);
    const double d = std::abs(fast - oracle);
    out.push_back({"zeta_oracle_t" + report::format_real(t), d, kTol, d <= kTol});
  }
  for (std::uint64_t q : {5, 7, 11}) {
    const dirichlet::CharacterTable ct(q);
    const auto S = dirichlet::batch_truncated_sums(ct, 1.0, 10'000'000, table);
    const auto o = dirichlet::llogderiv_oracle_all(ct);
    double worst = 0.0;
    for (std::size_t j = 1; j < S.size(); ++j) worst = std::max(worst, std::abs(-S[j] - o[j]));
    out.push_back({"l_oracle_q" + std::to_string(q), worst, 5e-3, worst <= 5e-3});
  }
  return out;
}

inline report::Table run_verify(const Context& c, bool& all_pass) {
  const auto& p = c.p;
  const std::string suite = p.text("suite");
  if (suite != "asymptotics" && suite != "oracles" && suite != "all") {
    throw UsageError("--suite: expected asymptotics, oracles or all, got '" + suite + "'");
  }
  std::vector<Check> checks;
  if (suite != "oracles") {
    const std::uint64_t X = p.integer("X");
    if (X < 1000) throw UsageError("--X: must be at least 1000");
    checks = asymptotic_checks(X, c.threads);
  }
  if (suite != "asymptotics") {
    const auto o = oracle_checks();
    checks.insert(checks.end(), o.begin(), o.end());
  }
  report::Table t{{"check", "value", "tolerance", "pass"}, {}};
  all_pass = true;
  for (const auto& ch : checks) {
    t.add({ch.name, ch.value, ch.tolerance, std::string(ch.pass ? "true" : "false")});
    all_pass = all_pass && ch.pass;
  }
  return t;
}

inline report::Table run_conjectures(const Context& c) {
  const auto& p = c.p;
  const std::string mode = p.text("mode");
  const std::uint64_t Y = p.integer("Y");
  const double sigma = p.real("sigma");
  const auto thetas = p.list("theta");
  if (mode == "dirichlet") {
    const auto table = table_for(p, Y);
    const std::uint64_t q = p.integer("q");
    return report::conjecture_table(mode, double(q), sigma, Y,
                                    search::conjecture_report_dirichlet(q, sigma, thetas, Y, table));
  }
  if (mode == "zeta") {
    const auto table = table_for(p, Y);
    const double T = p.real("T");
    return report::conjecture_table(mode, T, sigma, Y,
                                    search::conjecture_report_zeta(T, sigma, thetas, Y, table, p.real("step"), c.threads));
  }
  throw UsageError("--mode: expected dirichlet or zeta, got '" + mode + "'");
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Tables go to `out`
/// when --output is "-" (the default); diagnostics go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"resonlab: resonance-method numerics for zeta'/zeta and L'/L"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string("resonlab ") + report::kVersion);

  const auto defs = detail::commands();
  struct Bound {
    CLI::App* sub;
    const detail::CommandDef* def;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> opts;
    std::map<std::string, bool> flags;
    std::string format = "csv", output = "-", config;
    std::string threads, seed = "0";
    bool no_timestamp = false;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& d : defs) {
    auto b = std::make_unique<Bound>();
    b->def = &d;
    b->sub = app.add_subcommand(d.name, d.help);
    for (const auto& o : d.options) {
      b->values[o.name] = o.default_value;
      b->opts[o.name] = b->sub->add_option("--" + o.name, b->values[o.name], o.help)->capture_default_str();
    }
    for (const auto& [name, help] : d.flags) {
      b->flags[name] = false;
      b->opts[name] = b->sub->add_flag("--" + name, b->flags[name], help)->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    }
    b->sub->add_option("--format", b->format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    b->sub->add_option("--output", b->output, "output path, '-' for stdout")->capture_default_str();
    b->sub->add_option("--threads", b->threads, "worker threads (default: RESONLAB_THREADS or all cores)");
    b->sub->add_option("--seed", b->seed, "seed for randomized selections")->capture_default_str();
    b->sub->add_option("--config", b->config, "key = value file supplying defaults");
    b->sub->add_flag("--no-timestamp", b->no_timestamp, "omit the timestamp from the output header");
    bound.push_back(std::move(b));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() : app.help()) << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Bound* b = nullptr;
  for (auto& x : bound) {
    if (x->sub->parsed()) b = x.get();
  }

  detail::Context ctx;
  try {
    if (!b->config.empty()) {
      for (const auto& [key, value] : detail::read_config_file(b->config)) {
        if (key == "format") {
          if (b->sub->get_option("--format")->count() == 0) b->format = value;
          continue;
        }
        if (key == "seed") {
          if (b->sub->get_option("--seed")->count() == 0) b->seed = value;
          continue;
        }
        const auto it = b->opts.find(key);
        if (it == b->opts.end()) {
          throw UsageError("--config: unknown key '" + key + "' for command " + b->def->name);
        }
        if (it->second->count() > 0) continue;  // flags override the file
        if (b->flags.count(key)) {
          if (value != "true" && value != "false") throw UsageError("--config: " + key + " must be true or false");
          b->flags[key] = value == "true";
        } else {
          b->values[key] = value;
        }
      }
    }
    if (b->format != "csv" && b->format != "json") throw UsageError("--format: expected csv or json");
    ctx.p.values = b->values;
    ctx.p.flags = b->flags;
    if (!b->threads.empty()) {
      detail::Params tp;
      tp.values["threads"] = b->threads;
      const auto n = tp.integer("threads");
      if (n < 1 || n > 1024) throw UsageError("--threads: expected 1..1024");
      ctx.threads = static_cast<unsigned>(n);
    } else {
      ctx.threads = default_threads();
    }
    detail::Params sp;
    sp.values["seed"] = b->seed;
    (void)sp.integer("seed");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  report::Table table;
  report::Metadata meta;
  bool verify_pass = true;
  meta.command = b->def->name;
  meta.config = b->values;
  for (const auto& [k, v] : b->flags) meta.config[k] = v ? "true" : "false";
  meta.config["format"] = b->format;
  meta.config["seed"] = b->seed;
  if (!b->no_timestamp) meta.timestamp = detail::utc_timestamp();

  const std::string& cmd = b->def->name;
  try {
    if (cmd == "constants") table = detail::run_constants(ctx);
    else if (cmd == "zeta-scan") table = detail::run_zeta_scan(ctx);
    else if (cmd == "strip-scan") table = detail::run_strip_scan(ctx);
    else if (cmd == "char-sweep") table = detail::run_char_sweep(ctx);
    else if (cmd == "count-study") table = detail::run_count_study(ctx);
    else if (cmd == "measure-study") table = detail::run_measure_study(ctx);
    else if (cmd == "resonate") table = detail::run_resonate(ctx);
    else if (cmd == "verify") table = detail::run_verify(ctx, verify_pass);
    else if (cmd == "conjectures") table = detail::run_conjectures(ctx);

    const auto fmt = b->format == "json" ? report::Format::json : report::Format::csv;
    if (b->output == "-") {
      out << report::render(table, fmt, &meta) << std::flush;
    } else {
      report::emit(table, fmt, b->output, &meta);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::bad_alloc&) {
    err << "error: resource error: out of memory\n";
    return 1;
  }
  if (!verify_pass) {
    err << "error: verification failed\n";
    return 1;
  }
  return 0;
}

}  // namespace resonlab::cli
