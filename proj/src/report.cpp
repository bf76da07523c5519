#include "symcert/report.hpp"

#include "symcert/form.hpp"

#include <sstream>

namespace symcert {

using nlohmann::ordered_json;

CheckStatus overall_status(const VerificationReport& report) {
  bool inconclusive = false;
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

int exit_code(const VerificationReport& report) {
  switch (overall_status(report)) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Fail: return 1;
    case CheckStatus::Inconclusive: return 2;
  }
  return 1;
}

ordered_json config_json(const CheckConfig& cfg) {
  return {{"threshold", to_string(cfg.threshold)}, {"max_depth", cfg.max_depth}, {"max_boxes", cfg.max_boxes},
          {"grid_step", to_string(cfg.grid_step)}, {"samples", cfg.samples},     {"seed", cfg.seed},
          {"workers", cfg.workers}};
}

namespace {

ordered_json record_json(const CheckRecord& r, bool include_timing) {
  ordered_json j;
  j["check_id"] = r.check_id;
  j["status"] = to_string(r.status);
  j["config"] = config_json(r.config);
  if (r.certified_lower_bound)
    j["certified_lower_bound"] = {{"rational", to_string(*r.certified_lower_bound)},
                                  {"decimal", to_decimal(*r.certified_lower_bound)}};
  else
    j["certified_lower_bound"] = nullptr;
  j["discovered_constants"] = r.discovered_constants;
  j["boxes_processed"] = r.boxes_processed;
  j["depth"] = r.depth;
  j["details"] = r.details;
  if (include_timing) j["wall_time_ms"] = static_cast<long long>(r.wall_time_ms);
  return j;
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::Structured) {
    ordered_json j;
    j["header"] = {{"tool", "symcert-verify"},
                   {"version", SYMCERT_VERSION},
                   {"orientation", kOrientation},
                   {"invocation", report.invocation}};
    j["overall_status"] = to_string(overall_status(report));
    j["checks"] = ordered_json::array();
    for (const auto& r : report.checks) j["checks"].push_back(record_json(r, include_timing));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "symcert-verify " << SYMCERT_VERSION << "  (hodge orientation " << kOrientation << ")\n";
  for (const auto& r : report.checks) {
    os << "[" << to_string(r.status) << "] " << r.check_id;
    if (r.certified_lower_bound) os << "  bound=" << to_string(*r.certified_lower_bound) << " (~" << to_decimal(*r.certified_lower_bound) << ")";
    if (r.boxes_processed) os << "  boxes=" << r.boxes_processed << " depth=" << r.depth;
    if (include_timing) os << "  " << static_cast<long long>(r.wall_time_ms) << " ms";
    os << "\n";
    for (const auto& [k, v] : r.discovered_constants.items()) os << "    " << k << ": " << v.dump() << "\n";
    for (const auto& [k, v] : r.details.items()) os << "    " << k << ": " << v.dump() << "\n";
  }
  os << "overall: " << to_string(overall_status(report)) << "\n";
  return os.str();
}

}  // namespace symcert
