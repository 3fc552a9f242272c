#pragma once

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "octupolar/octupolar.hpp"

namespace octupolar::cli {

using nlohmann::json;

/// Decimal radians, or an exact multiple of pi: "pi", "-pi/2", "2pi/3", ...
inline double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-])?(\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double num = m[2].matched ? std::stod(m[2].str()) : 1.0;
    const double den = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (den == 0.0) throw ParameterError("zero denominator in angle '" + text + "'");
    const double v = num * std::numbers::pi / den;
    return m[1].matched && m[1].str() == "-" ? -v : v;
  }
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) throw ParameterError("cannot parse angle '" + text + "'");
  return v;
}

inline double parse_number(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) throw ParameterError("cannot parse number '" + text + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == sep) {
      parts.push_back(text.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

/// "a0,b3,a2"
inline OctupolarParams parse_params(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ParameterError("--params expects alpha0,beta3,alpha2");
  return {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
}

/// "rho,chi,a2"; chi accepts the angle forms of parse_angle.
inline OctupolarParams parse_polar(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ParameterError("--polar expects rho,chi,alpha2");
  const PolarPoint pt = make_polar(parse_number(parts[0]), parse_angle(parts[1]));
  const DiskPoint dp = polar_to_params(pt);
  return {dp.alpha0, dp.beta3, parse_number(parts[2])};
}

/// "RxC"
inline std::pair<int, int> parse_grid(const std::string& text) {
  const auto parts = split(text, 'x');
  if (parts.size() != 2) throw ParameterError("--grid expects RxC");
  int r = 0, c = 0;
  auto as_int = [&](const std::string& s, int& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParameterError("cannot parse grid size '" + s + "'");
  };
  as_int(parts[0], r);
  as_int(parts[1], c);
  if (r < 2 || c < 2) throw ParameterError("grid sizes must be at least 2");
  return {r, c};
}

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::optional<OctupolarParams> params;
  int n_rho = 50, n_chi = 180;
  std::optional<double> xsection_chi;
  int xsection_n = 100;
  std::optional<double> tol;
  std::uint64_t seed = SolverConfig{}.seed;
  std::optional<Format> format;  ///< surfaces default to CSV, the reports are always JSON
  std::optional<std::string> output;
  unsigned threads = 0;
};

inline json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json vec(const Vec3& x) { return json::array({number(x[0]), number(x[1]), number(x[2])}); }

inline void require_valid(const OctupolarParams& p, bool admissible_only) {
  if (!(p.alpha2 >= 0.0)) throw ParameterError("alpha2 must be nonnegative");
  if (admissible_only && !admissible(p.alpha0, p.beta3).inside) {
    throw ParameterError("(alpha0, beta3) lies outside the admissible disk");
  }
}

inline json spectra_report(const RunConfig& cfg) {
  if (!cfg.params) throw ParameterError("spectra needs --params or --polar");
  const OctupolarParams p = *cfg.params;
  require_valid(p, true);
  SolverConfig sc;
  sc.seed = cfg.seed;
  if (cfg.tol) sc.residual_tol = *cfg.tol;

  const std::vector<ZEigenpair> pairs = z_eigenpairs(build_tensor(p), sc);
  json list = json::array();
  int maxima = 0;
  bool degenerate = false;
  for (const ZEigenpair& e : pairs) {
    list.push_back({{"lambda", number(e.lambda)},
                    {"x", vec(e.x)},
                    {"mu2", number(e.mu2)},
                    {"mu3", number(e.mu3)},
                    {"kind", to_string(e.kind)}});
    if (e.lambda > 1e-9) {
      if (e.kind == Kind::Degenerate) degenerate = true;
      if (e.kind == Kind::Maximum) ++maxima;
    }
  }
  json summary = {{"max_lambda", pairs.empty() ? json(nullptr) : number(pairs.front().lambda)},
                  {"n_maxima", degenerate ? json(nullptr) : json(maxima)}};
  return {{"eigenpairs", list}, {"summary", summary}};
}

inline json algebra_report(const RunConfig& cfg) {
  if (!cfg.params) throw ParameterError("algebra needs --params or --polar");
  const OctupolarParams p = *cfg.params;
  require_valid(p, false);
  const double res = resultant_closed_form(p);
  json report;
  report["resultant_closed_form"] = number(res);
  const MacaulayRatio mr = macaulay_ratio(build_macaulay(ax2_forms(p)));
  const bool degenerate = mr.degenerate(1e-12);
  report["resultant_macaulay"] = degenerate ? json(nullptr) : number(mr.value());
  report["macaulay_degenerate"] = degenerate;

  EcharConfig ec;
  if (cfg.tol) ec.residual_tol = *cfg.tol;
  const EcharFit fit = echar_fit(p, ec);
  json coeffs = json::array();
  for (std::size_t k = 0; k < 15; ++k) coeffs.push_back(number(fit.phi.coefficient(k)));
  report["echar_coefficients"] = coeffs;
  const double c0 = fit.cofactor.coefficient(0);
  report["c0_check"] = number(std::abs(c0 - res * res) / std::max(1.0, res * res));
  return report;
}

inline std::string flag_names(unsigned flags) {
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if (!(flags & bit)) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(kOutsideDisk, "outside_disk");
  add(kSpurious, "spurious");
  add(kDegenerate, "degenerate");
  return out;
}

inline constexpr const char* kCsvHeader = "alpha0,beta3,rho,chi,dome_alpha2,sepa_alpha2,flags";

inline std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline std::string csv_row(const SurfaceSample& s) {
  auto opt = [](const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); };
  return csv_number(s.alpha0) + ',' + csv_number(s.beta3) + ',' + csv_number(s.rho) + ',' + csv_number(s.chi) + ',' +
         opt(s.dome_alpha2) + ',' + opt(s.sepa_alpha2) + ',' + flag_names(s.flags);
}

inline json json_row(const SurfaceSample& s) {
  auto opt = [](const std::optional<double>& v) { return v ? number(*v) : json(nullptr); };
  json flags = json::array();
  for (unsigned bit : {kOutsideDisk, kSpurious, kDegenerate})
    if (s.flags & bit) flags.push_back(flag_names(bit));
  return {{"alpha0", number(s.alpha0)}, {"beta3", number(s.beta3)}, {"rho", number(s.rho)}, {"chi", number(s.chi)},
          {"dome_alpha2", opt(s.dome_alpha2)}, {"sepa_alpha2", opt(s.sepa_alpha2)}, {"flags", flags}};
}

/// Closed-form cross-section rows, rho_i = i / (2 (n - 1)).
inline std::vector<SurfaceSample> xsection_rows(double chi, int n) {
  if (n < 2) throw ParameterError("--n must be at least 2");
  std::vector<SurfaceSample> rows;
  for (int i = 0; i < n; ++i) {
    SurfaceSample s;
    s.rho = 0.5 * i / (n - 1);
    s.chi = chi;
    const CrossSection cs = cross_section(chi, s.rho);
    const DiskPoint dp = polar_to_params({s.rho, chi});
    s.alpha0 = dp.alpha0;
    s.beta3 = dp.beta3;
    s.dome_alpha2 = cs.dome;
    s.sepa_alpha2 = cs.sepa;
    rows.push_back(s);
  }
  return rows;
}

inline std::string surfaces_output(const RunConfig& cfg) {
  std::vector<SurfaceSample> rows;
  if (cfg.xsection_chi) {
    rows = xsection_rows(*cfg.xsection_chi, cfg.xsection_n);
  } else {
    SeparatrixConfig sc;
    sc.solver.seed = cfg.seed;
    if (cfg.tol) sc.solver.residual_tol = *cfg.tol;
    rows = sample_disk(cfg.n_rho, cfg.n_chi, sc, cfg.threads);
  }
  if (cfg.format.value_or(Format::Csv) == Format::Csv) {
    std::string out = std::string(kCsvHeader) + '\n';
    for (const SurfaceSample& s : rows) out += csv_row(s) + '\n';
    return out;
  }
  json arr = json::array();
  for (const SurfaceSample& s : rows) arr.push_back(json_row(s));
  return arr.dump(2) + '\n';
}

/// Writes to a sibling temporary file, then renames it over `path`.
inline void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + tmp.string() + "' for writing");
    f << content;
    f.flush();
    if (!f) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

/// Exit codes: 0 success, 2 rejected parameters, 3 numerical failure, 4 I/O failure.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return 4;
  if (dynamic_cast<const NumericalFailure*>(&e) || dynamic_cast<const DegenerateConfiguration*>(&e)) return 3;
  return 2;
}

inline std::string run(const RunConfig& cfg) {
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ParameterError("--tol must be positive");
  if (cfg.command == "spectra" || cfg.command == "algebra") {
    if (cfg.format == Format::Csv) throw ParameterError(cfg.command + " only writes JSON");
    const json report = cfg.command == "spectra" ? spectra_report(cfg) : algebra_report(cfg);
    return report.dump(2) + '\n';
  }
  if (cfg.command == "surfaces") return surfaces_output(cfg);
  throw ParameterError("unknown command '" + cfg.command + "'");
}

}  // namespace octupolar::cli
