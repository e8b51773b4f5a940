#pragma once

// Tabular output: CSV with 17 significant digits and a JSON mirror.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "resonlab/arith.hpp"
#include "resonlab/error.hpp"
#include "resonlab/search.hpp"

namespace resonlab::report {

inline constexpr const char* kVersion = "1.0.0";

/// Empty, integer, real or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw Error("table row has " + std::to_string(row.size()) + " cells, expected " +
                                                  std::to_string(columns.size()));
    rows.push_back(std::move(row));
  }
};

enum class Format { csv, json };

/// Run description written ahead of the data: the command, its resolved
/// configuration in key order, the version and optionally a timestamp.
struct Metadata {
  std::string command;
  std::map<std::string, std::string> config;
  std::string timestamp;  ///< empty when suppressed
};

/// Shortest-free fixed rendering: 17 significant digits, '.' separator,
/// independent of the global locale.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

inline void write_csv(std::ostream& os, const Table& t, const Metadata* meta = nullptr) {
  if (meta) {
    os << "# resonlab " << kVersion << "\n# command = " << meta->command << "\n";
    for (const auto& [k, v] : meta->config) os << "# " << k << " = " << v << "\n";
    if (!meta->timestamp.empty()) os << "# timestamp = " << meta->timestamp << "\n";
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << "\n";
  }
}

inline nlohmann::json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::int64_t v) const { return v; }
    nlohmann::json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

/// Array of row objects, preceded by {"metadata": {...}} when meta is given.
inline nlohmann::json to_json(const Table& t, const Metadata* meta = nullptr) {
  nlohmann::json out = nlohmann::json::array();
  if (meta) {
    nlohmann::json m;
    m["command"] = meta->command;
    m["config"] = meta->config;
    m["version"] = kVersion;
    if (!meta->timestamp.empty()) m["timestamp"] = meta->timestamp;
    out.push_back({{"metadata", m}});
  }
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

inline std::string render(const Table& t, Format f, const Metadata* meta = nullptr) {
  std::ostringstream os;
  if (f == Format::csv) {
    write_csv(os, t, meta);
  } else {
    os << to_json(t, meta).dump(2) << "\n";
  }
  return os.str();
}

/// Writes the table to `path`, or to stdout when path is "-".
inline void emit(const Table& t, Format f, const std::string& path, const Metadata* meta = nullptr) {
  const std::string text = render(t, f, meta);
  if (path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

// Record-to-table conversions.

inline Table constants_table(const arith::ConstantsReport& r) {
  Table t{{"name", "value", "error_bound"}, {}};
  for (const auto& e : r.entries()) t.add({e.name, e.estimate.value, e.estimate.error_bound});
  return t;
}

namespace detail {
/// One row per θ, or a single row with empty θ cells when no θ is given.
template <typename F>
void for_each_theta(const std::vector<double>& thetas, F&& f) {
  if (thetas.empty()) {
    f(Cell{}, std::size_t(-1));
    return;
  }
  for (std::size_t k = 0; k < thetas.size(); ++k) f(Cell{thetas[k]}, k);
}
}  // namespace detail

inline Table scan_table(const std::vector<search::ScanRecord>& recs, const std::vector<double>& thetas) {
  Table t{{"t", "neg_re", "abs", "theta", "dir_value", "method", "Y", "oracle_delta"}, {}};
  for (const auto& r : recs) {
    detail::for_each_theta(thetas, [&](Cell th, std::size_t k) {
      const Cell dir = k == std::size_t(-1) ? Cell{} : Cell{r.value_dir[k]};
      const Cell delta = std::isnan(r.oracle_delta) ? Cell{} : Cell{r.oracle_delta};
      t.add({r.t, r.value_neg_re, r.value_abs, th, dir, std::string(search::method_name(r.method)),
             std::int64_t(r.Y_used), delta});
    });
  }
  return t;
}

inline Table strip_table(const search::StripScanResult& s, const std::vector<double>& thetas) {
  Table t = scan_table(s.records, thetas);
  t.columns.push_back("floor");
  for (auto& row : t.rows) row.push_back(s.floor);
  return t;
}

inline Table sweep_table(const std::vector<search::SweepRecord>& recs, const std::vector<double>& thetas) {
  Table t{{"q", "j_argmax", "max_neg_re", "max_abs", "theta", "dir_max", "Y", "oracle_delta", "euler_kronecker"}, {}};
  for (const auto& r : recs) {
    detail::for_each_theta(thetas, [&](Cell th, std::size_t k) {
      const Cell dir = k == std::size_t(-1) ? Cell{} : Cell{r.dir_max[k]};
      const Cell delta = std::isnan(r.oracle_delta) ? Cell{} : Cell{r.oracle_delta};
      const Cell ek = std::isnan(r.euler_kronecker) ? Cell{} : Cell{r.euler_kronecker};
      t.add({std::int64_t(r.q), std::int64_t(r.j_argmax), r.max_neg_re, r.max_abs, th, dir, std::int64_t(r.Y), delta,
             ek});
    });
  }
  return t;
}

inline Table study_table(const std::vector<search::ThresholdStudy>& st) {
  Table t{{"scale", "x", "threshold", "exceed", "empirical_exponent", "predicted_exponent"}, {}};
  for (const auto& s : st) {
    const Cell emp = std::isnan(s.empirical_exponent) ? Cell{} : Cell{s.empirical_exponent};
    t.add({s.scale, s.x, s.threshold, s.exceed, emp, s.predicted_exponent});
  }
  return t;
}

inline Table conjecture_table(const std::string& mode, double scale, double sigma, std::uint64_t Y,
                              const std::vector<search::ConjectureRow>& rows) {
  Table t{{"mode", "scale", "sigma", "theta", "max_dir", "max_abs_deriv", "max_abs_value", "ratio", "Y"}, {}};
  for (const auto& r : rows) {
    t.add({mode, scale, sigma, r.theta, r.max_dir, r.max_abs_deriv, r.max_abs_value, r.ratio, std::int64_t(Y)});
  }
  return t;
}

}  // namespace resonlab::report
