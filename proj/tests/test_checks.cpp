#include "symcert/checks.hpp"
#include "symcert/report.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace symcert;

namespace {

CheckRecord record(const std::string& id, CheckStatus s) {
  CheckRecord r;
  r.check_id = id;
  r.status = s;
  r.config = default_config("torus-exact");
  return r;
}

}  // namespace

TEST_CASE("registry covers every in-scope claim exactly once") {
  const auto& reg = check_registry();
  const auto& claims = in_scope_claims();
  CHECK(reg.size() == 9);
  std::set<std::string_view> ids;
  for (const auto& info : reg) {
    CHECK(ids.insert(info.id).second);
    CHECK(has_runner(info.id));
    CHECK(std::count(claims.begin(), claims.end(), info.claim) == 1);
  }
  for (const auto& claim : claims) {
    auto covering = std::count_if(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.claim == claim; });
    CHECK(covering == 1);
  }
  const std::vector<std::string_view> expected{"axioms", "torus-exact", "invariance", "reduction", "rank4",
                                               "q-simplex", "q-ball", "coordinate-slices", "claim1-full"};
  std::vector<std::string_view> got;
  for (const auto& info : reg) got.push_back(info.id);
  CHECK(got == expected);
}

TEST_CASE("config defaults, overrides and validation") {
  auto d = default_config("q-ball");
  CHECK(d.threshold == Rational(1, 200));
  CHECK(d.threshold < reference_q_bound());
  CHECK(default_config("q-simplex").threshold == Rational(1, 200));
  CHECK(default_config("reduction").samples >= 1000);
  CHECK(default_config("invariance").samples >= 20);
  CHECK(default_config("torus-exact").samples >= 100);
  CHECK_THROWS_AS(default_config("nope"), std::invalid_argument);

  ConfigOverrides o;
  o.seed = 9;
  o.max_boxes = 10;
  auto r = resolve_config("claim1-full", o);
  CHECK(r.seed == 9);
  CHECK(r.max_boxes == 10);
  CHECK(r.max_depth == default_config("claim1-full").max_depth);

  ConfigOverrides bad;
  bad.threshold = Rational(0);
  CHECK_THROWS_AS(resolve_config("q-ball", bad), std::invalid_argument);
  ConfigOverrides zero_samples;
  zero_samples.samples = 0;
  CHECK_THROWS_AS(resolve_config("rank4", zero_samples), std::invalid_argument);
  CHECK_THROWS_AS(run_check("nope", d), std::invalid_argument);
}

TEST_CASE("overall status and exit codes") {
  VerificationReport all_pass{{}, {record("a", CheckStatus::Pass), record("b", CheckStatus::Pass)}};
  CHECK(overall_status(all_pass) == CheckStatus::Pass);
  CHECK(exit_code(all_pass) == 0);

  VerificationReport inconclusive{{}, {record("a", CheckStatus::Pass), record("b", CheckStatus::Inconclusive)}};
  CHECK(overall_status(inconclusive) == CheckStatus::Inconclusive);
  CHECK(exit_code(inconclusive) == 2);

  VerificationReport failed{{}, {record("a", CheckStatus::Inconclusive), record("b", CheckStatus::Fail)}};
  CHECK(overall_status(failed) == CheckStatus::Fail);
  CHECK(exit_code(failed) == 1);
}

TEST_CASE("torus-exact check") {
  auto cfg = default_config("torus-exact");
  cfg.samples = 100;
  cfg.seed = 1;
  auto rec = run_check("torus-exact", cfg);
  CHECK(rec.status == CheckStatus::Pass);
  CHECK(rec.details["exact_zero_covectors"] == "100/100");
}

TEST_CASE("rank4 check reports the histogram") {
  auto cfg = default_config("rank4");
  cfg.samples = 20;
  auto rec = run_check("rank4", cfg);
  CHECK(rec.status == CheckStatus::Pass);
  CHECK(rec.details["anchor_rank"] == 4);
}

TEST_CASE("claim1-full with a tiny budget") {
  auto cfg = default_config("claim1-full");
  cfg.max_boxes = 10;
  auto rec = run_check("claim1-full", cfg);
  CHECK(rec.details["certificate"]["status"] == "inconclusive");
  CHECK(rec.details["certificate"]["budget_exhausted"] == true);
  // The exact degeneracy witness decides the check independently of the search.
  CHECK(rec.status == CheckStatus::Fail);
  CHECK(rec.discovered_constants.contains("degenerate_point"));
  CHECK(rec.details.contains("refutation"));
}

TEST_CASE("structured report is deterministic without timing") {
  auto run = [] {
    VerificationReport rep;
    rep.invocation = {{"check", "torus-exact"}};
    auto cfg = default_config("torus-exact");
    cfg.samples = 30;
    rep.checks.push_back(run_check("torus-exact", cfg));
    cfg = default_config("q-simplex");
    cfg.max_boxes = 50;
    rep.checks.push_back(run_check("q-simplex", cfg));
    return rep;
  };
  auto a = run(), b = run();
  const std::string sa = emit_report(a, ReportFormat::Structured, false);
  CHECK(sa == emit_report(b, ReportFormat::Structured, false));
  CHECK(sa.find("wall_time_ms") == std::string::npos);
  CHECK(emit_report(a, ReportFormat::Structured, true).find("wall_time_ms") != std::string::npos);
  auto doc = nlohmann::ordered_json::parse(sa);
  CHECK(doc["header"]["orientation"] == "dx1^dx2^dx3^dy1^dy2^dy3");
  CHECK(doc["checks"].size() == 2);
  CHECK(doc["checks"][1]["status"] == "inconclusive");
  CHECK(doc["overall_status"] == "inconclusive");
  CHECK(!emit_report(a, ReportFormat::Text, false).empty());
}
