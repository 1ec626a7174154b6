#include "nijcheck/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nijcheck {

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::ordered_json claim_json(const ClaimResult& r) {
  nlohmann::ordered_json c;
  c["claim_id"] = r.claim_id;
  c["structure"] = r.structure;
  c["points_evaluated"] = r.points_evaluated;
  c["points_excluded"] = r.points_excluded;
  c["max_residual"] = r.max_residual;
  c["mean_residual"] = r.mean_residual;
  c["residual_unit"] = std::string(to_string(r.unit));
  c["verdict"] = std::string(to_string(r.verdict));
  c["notes"] = r.notes;
  c["exclusions"] = nlohmann::ordered_json::object();
  for (const auto& [reason, count] : r.exclusions) c["exclusions"][reason] = count;
  if (!r.sweep.empty()) {
    auto& sweep = c["sweep"] = nlohmann::ordered_json::array();
    for (const SweepSample& s : r.sweep) {
      nlohmann::ordered_json e;
      e["radius"] = s.radius;
      e["residual"] = s.residual ? nlohmann::ordered_json(*s.residual) : nlohmann::ordered_json();
      sweep.push_back(std::move(e));
    }
  }
  if (!r.values.empty()) {
    c["values"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.values) c["values"][k] = v;
  }
  return c;
}

}  // namespace

std::string to_json(const ChainReport& report) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["structure"] = report.structure;
  doc["dim"] = report.dim;
  doc["seed"] = report.seed;
  doc["points"] = report.points;
  doc["tolerances"] = {{"hold", report.tol.hold}, {"fail", report.tol.fail}};
  auto& claims = doc["claims"] = nlohmann::ordered_json::array();
  for (const ClaimResult& r : report.claims) claims.push_back(claim_json(r));
  doc["first_break"] =
      report.first_break ? nlohmann::ordered_json(*report.first_break) : nlohmann::ordered_json();
  nlohmann::ordered_json prov;
  prov["library_version"] = report.library_version;
  prov["sampling"] = report.plan.box ? "uniform-box" : "ambient-gaussian";
  prov["r_min"] = report.plan.r_min;
  prov["r_max"] = report.plan.r_max;
  prov["delta_ball"] = report.plan.delta_ball;
  prov["delta_ring"] = report.plan.delta_ring;
  prov["continuity_sweep"] = report.plan.continuity_sweep;
  prov["fd_step"] = report.fd_step;
  doc["provenance"] = std::move(prov);
  return doc.dump(2) + "\n";
}

std::string to_csv(const ChainReport& report) {
  std::ostringstream os;
  os << "claim_id,structure,points_evaluated,points_excluded,max_residual,mean_residual,verdict\n";
  for (const ClaimResult& r : report.claims) {
    os << r.claim_id << "," << r.structure << "," << r.points_evaluated << ","
       << r.points_excluded << "," << format_double(r.max_residual) << ","
       << format_double(r.mean_residual) << "," << to_string(r.verdict) << "\n";
  }
  return os.str();
}

}  // namespace nijcheck
