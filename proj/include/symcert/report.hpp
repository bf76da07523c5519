#ifndef SYMCERT_REPORT_HPP
#define SYMCERT_REPORT_HPP

#include "symcert/checks.hpp"

#include <string>
#include <vector>

namespace symcert {

struct VerificationReport {
  /// Config echo of the command line (the per-check resolved configs live in each record).
  nlohmann::ordered_json invocation = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
};

/// pass only if every check passes; any fail gives fail; otherwise inconclusive.
CheckStatus overall_status(const VerificationReport& report);

/// 0 = all pass, 1 = any fail, 2 = any inconclusive with none failing.
int exit_code(const VerificationReport& report);

enum class ReportFormat { Text, Structured };

/// Structured output is JSON with a fixed key order; with `include_timing`
/// false the wall_time_ms fields are omitted, making reruns byte-identical.
std::string emit_report(const VerificationReport& report, ReportFormat format, bool include_timing = true);

nlohmann::ordered_json config_json(const CheckConfig& cfg);

}  // namespace symcert

#endif  // SYMCERT_REPORT_HPP
