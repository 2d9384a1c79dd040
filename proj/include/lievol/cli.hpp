#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lievol/checks.hpp"
#include "lievol/errors.hpp"
#include "lievol/quad.hpp"
#include "lievol/report.hpp"
#include "lievol/rootsys.hpp"
#include "lievol/special.hpp"
#include "lievol/vogel.hpp"
#include "lievol/volume.hpp"

namespace lievol::cli {

enum class Command { volume, phi, scan, table, check };
enum class Format { text, json, csv };

/// Process exit codes; exhaustive and disjoint.
enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2, kDiverges = 3 };

struct CliConfig {
  Command command = Command::volume;
  std::string group;
  std::optional<int> n;
  std::optional<double> alpha, beta, gamma;
  double from = 1.0, to = 4.0, step = 1.0;
  Tolerance tol;
  Format format = Format::text;
  int max_rank = 8;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default tolerance, with the relative part taken from LIEVOL_TOL if set.
inline Tolerance default_tolerance() {
  Tolerance tol;
  if (const char* env = std::getenv("LIEVOL_TOL"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
      throw UsageError(std::string("LIEVOL_TOL must be a positive number, got '") + env + "'");
    tol.rel = v;
  }
  return tol;
}

/// Accepts compact-group series (SU, Spin, Sp) with n the matrix size, Cartan
/// families (A, B, C, D) with n the rank, or an exceptional name.
inline SimpleLieType resolve_group(std::string name, std::optional<int> n) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  static const std::map<std::string, Family> exceptional = {
      {"G2", Family::G2}, {"F4", Family::F4}, {"E6", Family::E6},
      {"E7", Family::E7}, {"E8", Family::E8}};
  if (auto it = exceptional.find(name); it != exceptional.end())
    return make_lie_type(it->second, std::nullopt);
  if (!n) throw UsageError("group " + name + " requires --n");
  if (name == "SU") return lie_type(CompactGroup{Series::SU, *n});
  if (name == "SPIN") return lie_type(CompactGroup{Series::Spin, *n});
  if (name == "SP") return lie_type(CompactGroup{Series::Sp, *n});
  static const std::map<std::string, Family> classical = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D}};
  if (auto it = classical.find(name); it != classical.end()) return make_lie_type(it->second, *n);
  throw UsageError("unknown group '" + name + "'");
}

inline int cmd_volume(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  SimpleLieType type;
  try {
    type = resolve_group(cfg.group, cfg.n);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  const VolumeReport r = cross_check(type, cfg.tol);
  switch (cfg.format) {
    case Format::json: out << dump(to_json(r)) << "\n"; break;
    case Format::csv: out << kVolumeCsvHeader << "\n" << to_csv_row(r) << "\n"; break;
    case Format::text: write_text(out, r); break;
  }
  if (!r.ok()) {
    err << "check failed: " << report_notes(r) << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

inline int cmd_phi(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.alpha || !cfg.beta || !cfg.gamma) {
    err << "usage error: phi requires --alpha, --beta and --gamma\n";
    return kUsage;
  }
  const VogelPoint p{*cfg.alpha, *cfg.beta, *cfg.gamma};
  if (p.t() == 0.0) {
    err << "usage error: alpha + beta + gamma must be nonzero\n";
    return kUsage;
  }
  if (in_divergence_set(p)) {
    err << "integral diverges on Δ\n";
    return kDiverges;
  }
  if (p.alpha * p.beta * p.gamma == 0.0) {
    err << "usage error: alpha, beta and gamma must be nonzero\n";
    return kUsage;
  }
  const PointVolume v = log_volume_at(p, cfg.tol);
  switch (cfg.format) {
    case Format::json: {
      ordered_json j;
      j["alpha"] = p.alpha;
      j["beta"] = p.beta;
      j["gamma"] = p.gamma;
      j["phi"] = v.phi.value;
      j["error_estimate"] = v.phi.error_estimate;
      j["converged"] = v.phi.converged;
      j["dim"] = v.dim;
      j["log_volume"] = v.log_volume;
      out << dump(j) << "\n";
      break;
    }
    case Format::csv:
      out << "alpha,beta,gamma,phi,error_estimate,converged,dim,log_volume\n"
          << format_double(p.alpha) << "," << format_double(p.beta) << ","
          << format_double(p.gamma) << "," << format_double(v.phi.value) << ","
          << format_double(v.phi.error_estimate) << "," << (v.phi.converged ? "true" : "false")
          << "," << format_double(v.dim) << "," << format_double(v.log_volume) << "\n";
      break;
    case Format::text:
      out << "phi          " << format_double(v.phi.value) << "\n"
          << "error        " << format_double(v.phi.error_estimate) << "\n"
          << "converged    " << (v.phi.converged ? "yes" : "no") << "\n"
          << "dim          " << format_double(v.dim) << "\n"
          << "log volume   " << format_double(v.log_volume) << "\n";
      break;
  }
  return v.phi.converged ? kSuccess : kCheckFailed;
}

inline const char* kScanCsvHeader = "gamma,phi,reference,residual";

/// One CSV row per gamma in [from, to]. The reference column is filled on
/// the line alpha + beta = 0, where (-b, b, gamma) ~ (-2, 2, 2 gamma / b).
inline int cmd_scan(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.step > 0.0)) {
    err << "usage error: --step must be positive\n";
    return kUsage;
  }
  if (cfg.to < cfg.from) {
    err << "usage error: --to must not be below --from\n";
    return kUsage;
  }
  const double alpha = cfg.alpha.value_or(-2.0);
  const double beta = cfg.beta.value_or(2.0);
  const bool unitary = alpha == -beta && beta != 0.0;
  const auto count = static_cast<long>(std::floor((cfg.to - cfg.from) / cfg.step + 1e-9)) + 1;
  bool all_converged = true;
  out << kScanCsvHeader << "\n";
  for (long i = 0; i < count; ++i) {
    const double gamma = cfg.from + static_cast<double>(i) * cfg.step;
    const VogelPoint p{alpha, beta, gamma};
    std::string phi, reference, residual;
    const double z = unitary ? 2.0 * gamma / beta : 0.0;
    if (unitary && z > 0.0) reference = format_double(psi_unitary(z, cfg.tol).value);
    if (p.t() == 0.0 || alpha * beta * gamma == 0.0) {
      residual = p.t() != 0.0 && in_divergence_set(p) ? "diverges" : "undefined";
    } else if (in_divergence_set(p)) {
      residual = "diverges";
    } else {
      const QuadResult q = integrate_phi(p, cfg.tol);
      all_converged = all_converged && q.converged;
      phi = format_double(q.value);
      if (!reference.empty()) residual = format_double(q.value - std::stod(reference));
    }
    out << format_double(gamma) << "," << phi << "," << reference << "," << residual << "\n";
  }
  return all_converged ? kSuccess : kCheckFailed;
}

inline int cmd_table(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  bool ok = true;
  ordered_json rows = ordered_json::array();
  if (cfg.format == Format::csv)
    out << "group,cartan,alpha,beta,gamma,t,dim,phi_universal,phi_kp,log_volume\n";
  if (cfg.format == Format::text)
    out << "group     cartan  alpha  beta   gamma  t    dim   phi_universal            "
           "phi_kp                   log_volume\n";
  for (const auto& t : supported_types(cfg.max_rank)) {
    const VogelTableRow row = vogel_row(t);
    const VolumeReport r = cross_check(t, cfg.tol);
    ok = ok && r.ok();
    switch (cfg.format) {
      case Format::json: {
        ordered_json j;
        j["group"] = group_name(t);
        j["cartan"] = cartan_name(t);
        j["alpha"] = row.alpha.str();
        j["beta"] = row.beta.str();
        j["gamma"] = row.gamma.str();
        j["t"] = row.t().str();
        j["dim"] = r.dim;
        j["phi_universal"] = r.phi_universal;
        j["phi_kp"] = r.phi_kp;
        j["log_volume"] = r.log_volume;
        rows.push_back(std::move(j));
        break;
      }
      case Format::csv:
        out << group_name(t) << "," << cartan_name(t) << "," << row.alpha << "," << row.beta
            << "," << row.gamma << "," << row.t() << "," << r.dim << ","
            << format_double(r.phi_universal) << "," << format_double(r.phi_kp) << ","
            << format_double(r.log_volume) << "\n";
        break;
      case Format::text: {
        char line[256];
        std::snprintf(line, sizeof line, "%-9s %-7s %-6s %-6s %-6s %-4s %-5lld %-24s %-24s %s\n",
                      group_name(t).c_str(), cartan_name(t).c_str(), row.alpha.str().c_str(),
                      row.beta.str().c_str(), row.gamma.str().c_str(), row.t().str().c_str(),
                      static_cast<long long>(r.dim), format_double(r.phi_universal).c_str(),
                      format_double(r.phi_kp).c_str(), format_double(r.log_volume).c_str());
        out << line;
        break;
      }
    }
  }
  if (cfg.format == Format::json) out << dump(rows) << "\n";
  return ok ? kSuccess : kCheckFailed;
}

inline int report_checks(const std::vector<CheckItem>& items, Format format, std::ostream& out) {
  bool ok = true;
  ordered_json arr = ordered_json::array();
  if (format == Format::csv) out << "name,passed,deviation,bound,detail\n";
  for (const auto& c : items) {
    ok = ok && c.passed;
    switch (format) {
      case Format::json: arr.push_back(to_json(c)); break;
      case Format::csv:
        out << c.name << "," << (c.passed ? "true" : "false") << "," << format_double(c.deviation)
            << "," << format_double(c.bound) << "," << c.detail << "\n";
        break;
      case Format::text:
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  (deviation "
            << format_double(c.deviation) << ", bound " << format_double(c.bound) << ")";
        if (!c.detail.empty()) out << "  " << c.detail;
        out << "\n";
        break;
    }
  }
  if (format == Format::json) out << dump(arr) << "\n";
  if (format == Format::text) {
    const auto passed = std::count_if(items.begin(), items.end(),
                                      [](const CheckItem& c) { return c.passed; });
    out << passed << "/" << items.size() << " checks passed\n";
  }
  return ok ? kSuccess : kCheckFailed;
}

inline int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  return report_checks(run_checks(cfg.max_rank, cfg.tol), cfg.format, out);
}

inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::volume: return cmd_volume(cfg, out, err);
      case Command::phi: return cmd_phi(cfg, out, err);
      case Command::scan: return cmd_scan(cfg, out, err);
      case Command::table: return cmd_table(cfg, out, err);
      case Command::check: return cmd_check(cfg, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidTypeError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

struct ParseOutcome {
  std::optional<CliConfig> config;
  int exit_code = kSuccess;
};

inline ParseOutcome parse(int argc, const char* const* argv, std::ostream& out,
                          std::ostream& err) {
  CliConfig cfg;
  try {
    cfg.tol = default_tolerance();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return {std::nullopt, kUsage};
  }

  CLI::App app{"Volumes of compact simple Lie groups from universal parameters"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats = {
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--rel-tol", cfg.tol.rel, "Relative quadrature tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--abs-tol", cfg.tol.abs, "Absolute quadrature tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-evals", cfg.tol.max_evaluations, "Integrand evaluation budget")
        ->check(CLI::PositiveNumber);
  };

  auto* volume = app.add_subcommand("volume", "Cross-checked volume report for one group");
  volume->add_option("--group", cfg.group, "SU, Spin, Sp, A, B, C, D, G2, F4, E6, E7 or E8")
      ->required();
  volume->add_option("--n", cfg.n, "Matrix size for SU/Spin/Sp, rank for A/B/C/D");
  common(volume);

  auto* phi = app.add_subcommand("phi", "Evaluate the universal integral at a point");
  phi->add_option("--alpha", cfg.alpha)->required();
  phi->add_option("--beta", cfg.beta)->required();
  phi->add_option("--gamma", cfg.gamma)->required();
  common(phi);

  auto* scan = app.add_subcommand("scan", "CSV scan in gamma at fixed alpha, beta");
  scan->add_option("--alpha", cfg.alpha, "Fixed alpha (default -2)");
  scan->add_option("--beta", cfg.beta, "Fixed beta (default 2)");
  scan->add_option("--from", cfg.from, "First gamma")->required();
  scan->add_option("--to", cfg.to, "Last gamma")->required();
  scan->add_option("--step", cfg.step, "Gamma increment")->required();
  common(scan);

  auto* table = app.add_subcommand("table", "Universal parameter table with volumes");
  table->add_option("--max-rank", cfg.max_rank, "Largest rank listed")->check(CLI::PositiveNumber);
  common(table);

  auto* check = app.add_subcommand("check", "Run the full verification suite");
  check->add_option("--max-rank", cfg.max_rank, "Largest rank checked")->check(CLI::PositiveNumber);
  common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return {std::nullopt, kSuccess};
    }
    err << "usage error: " << e.what() << "\n";
    return {std::nullopt, kUsage};
  }

  if (*volume) cfg.command = Command::volume;
  else if (*phi) cfg.command = Command::phi;
  else if (*scan) cfg.command = Command::scan;
  else if (*table) cfg.command = Command::table;
  else cfg.command = Command::check;
  return {cfg, kSuccess};
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace lievol::cli
