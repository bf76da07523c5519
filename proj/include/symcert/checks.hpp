#ifndef SYMCERT_CHECKS_HPP
#define SYMCERT_CHECKS_HPP

#include "symcert/construction.hpp"
#include "symcert/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symcert {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);

struct CheckConfig {
  std::string check_id;
  Rational threshold;
  int max_depth = 1;
  std::size_t max_boxes = 1;
  Rational grid_step;
  std::size_t samples = 1;
  std::uint64_t seed = 1;
  unsigned workers = 1;

  /// Throws std::invalid_argument unless counts >= 1 and threshold, grid_step > 0.
  void validate() const;
};

/// CLI-level overrides; unset fields keep the per-check default.
struct ConfigOverrides {
  std::optional<Rational> threshold;
  std::optional<int> max_depth;
  std::optional<std::size_t> max_boxes;
  std::optional<Rational> grid_step;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
};

struct CheckInfo {
  std::string_view id;
  /// The in-scope claim this check covers.
  std::string_view claim;
};

/// Every check id, in pipeline order.
const std::vector<CheckInfo>& check_registry();

/// In-scope computational claims; each must be covered by exactly one check.
const std::vector<std::string_view>& in_scope_claims();

bool is_known_check(std::string_view id);

/// Throws std::invalid_argument for an unknown id.
CheckConfig default_config(std::string_view id);
CheckConfig resolve_config(std::string_view id, const ConfigOverrides& overrides);

struct CertificateArtifact {
  std::string name;
  std::string text;
};

struct CheckRecord {
  std::string check_id;
  CheckStatus status = CheckStatus::Fail;
  CheckConfig config;
  std::optional<Rational> certified_lower_bound;
  nlohmann::ordered_json discovered_constants = nlohmann::ordered_json::object();
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::size_t boxes_processed = 0;
  int depth = 0;
  double wall_time_ms = 0;
  std::vector<CertificateArtifact> certificates;
};

/// Shared construction, built on first use.
const ConstructionSet& shared_construction();

/// True if run_check has an implementation for `id`.
bool has_runner(std::string_view id);
/// Runs one registered check. Throws std::invalid_argument for an unknown id.
CheckRecord run_check(std::string_view id, const CheckConfig& cfg);

/// Reference lower bound for Q quoted with the positivity claim.
Rational reference_q_bound();

}  // namespace symcert

#endif  // SYMCERT_CHECKS_HPP
