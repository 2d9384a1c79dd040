#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lievol/checks.hpp"
#include "lievol/volume.hpp"

namespace lievol {

using ordered_json = nlohmann::ordered_json;

/// 17 significant digits; enough to round-trip any double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string report_notes(const VolumeReport& r) {
  std::string notes = r.notes;
  for (const auto& f : r.failures) {
    if (!notes.empty()) notes += "; ";
    notes += f;
  }
  return notes;
}

/// Keys, in order: group, dim, phi_universal, phi_kp, log_volume,
/// volume (null when not representable), route_discrepancy, converged, notes.
inline ordered_json to_json(const VolumeReport& r) {
  ordered_json j;
  j["group"] = group_name(r.group);
  j["dim"] = r.dim;
  j["phi_universal"] = r.phi_universal;
  j["phi_kp"] = r.phi_kp;
  j["log_volume"] = r.log_volume;
  j["volume"] = r.volume ? ordered_json(*r.volume) : ordered_json(nullptr);
  j["route_discrepancy"] = r.route_discrepancy;
  j["converged"] = r.converged;
  j["notes"] = report_notes(r);
  return j;
}

inline ordered_json to_json(const CheckItem& c) {
  ordered_json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["deviation"] = c.deviation;
  j["bound"] = c.bound;
  j["detail"] = c.detail;
  return j;
}

/// Canonical JSON text. Parsing it with ordered_json and dumping again gives
/// the same bytes.
inline std::string dump(const ordered_json& j) { return j.dump(2); }

inline const char* kVolumeCsvHeader =
    "group,dim,phi_universal,phi_kp,log_volume,volume,route_discrepancy,converged";

inline std::string to_csv_row(const VolumeReport& r) {
  std::string row = group_name(r.group) + "," + std::to_string(r.dim) + "," +
                    format_double(r.phi_universal) + "," + format_double(r.phi_kp) + "," +
                    format_double(r.log_volume) + "," +
                    (r.volume ? format_double(*r.volume) : std::string()) + "," +
                    format_double(r.route_discrepancy) + "," + (r.converged ? "true" : "false");
  return row;
}

inline void write_text(std::ostream& os, const VolumeReport& r) {
  os << group_name(r.group) << " (" << cartan_name(r.group) << ")\n"
     << "  dim                " << r.dim << "\n"
     << "  phi (universal)    " << format_double(r.phi_universal) << "  +/- "
     << format_double(r.phi_universal_error) << "\n"
     << "  phi (Kac-Peterson) " << format_double(r.phi_kp) << "\n";
  if (r.phi_macdonald) os << "  phi (closed form)  " << format_double(*r.phi_macdonald) << "\n";
  os << "  log volume         " << format_double(r.log_volume) << "\n"
     << "  volume             " << (r.volume ? format_double(*r.volume) : "(not representable)")
     << "\n"
     << "  route discrepancy  " << format_double(r.route_discrepancy) << "\n"
     << "  converged          " << (r.converged ? "yes" : "no") << "\n";
  if (const std::string n = report_notes(r); !n.empty()) os << "  notes              " << n << "\n";
}

}  // namespace lievol
