// verify: runs the verification checks and writes a report.
//
//   verify <check-id|all> [--threshold R] [--max-depth N] [--max-boxes N]
//          [--grid-step R] [--samples N] [--seed N] [--workers N]
//          [--format text|structured] [--out FILE] [--concurrent] [--no-timing]
//
// Exit code: 0 all pass, 1 any fail, 2 inconclusive with none failing, 64 usage error.

#include "symcert/checks.hpp"
#include "symcert/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kUsageError = 64;

std::optional<symcert::Rational> rational_option(const std::string& text, const char* name) {
  if (text.empty()) return std::nullopt;
  try {
    return symcert::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(name, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the exotic symplectic R^6 construction"};
  std::string target;
  std::string threshold, grid_step, format = "text", out_path;
  std::optional<int> max_depth;
  std::optional<std::size_t> max_boxes, samples;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  bool concurrent = false, no_timing = false;

  std::string ids = "all";
  for (const auto& info : symcert::check_registry()) ids += "|" + std::string(info.id);
  app.add_option("check", target, "Check id: " + ids)->required();
  app.add_option("--threshold", threshold, "Target lower bound, rational literal p/q");
  app.add_option("--max-depth", max_depth, "Maximum bisection depth");
  app.add_option("--max-boxes", max_boxes, "Maximum boxes processed per search");
  app.add_option("--grid-step", grid_step, "Grid oracle step, rational literal p/q");
  app.add_option("--samples", samples, "Sample count for sampling checks");
  app.add_option("--seed", seed, "Sampler seed");
  app.add_option("--workers", workers, "Branch-and-bound worker threads");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", out_path, "Write the report here; certificates are written alongside");
  app.add_flag("--concurrent", concurrent, "Run checks concurrently");
  app.add_flag("--no-timing", no_timing, "Omit wall_time_ms fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  std::vector<std::string> checks;
  if (target == "all") {
    for (const auto& info : symcert::check_registry()) checks.emplace_back(info.id);
  } else if (symcert::is_known_check(target)) {
    checks.push_back(target);
  } else {
    std::cerr << "verify: unknown check id '" << target << "'\n" << app.help();
    return kUsageError;
  }

  symcert::ConfigOverrides overrides;
  std::vector<symcert::CheckConfig> configs;
  try {
    overrides.threshold = rational_option(threshold, "--threshold");
    overrides.grid_step = rational_option(grid_step, "--grid-step");
    overrides.max_depth = max_depth;
    overrides.max_boxes = max_boxes;
    overrides.samples = samples;
    overrides.seed = seed;
    overrides.workers = workers;
    for (const auto& id : checks) configs.push_back(symcert::resolve_config(id, overrides));
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kUsageError;
  }

  symcert::VerificationReport report;
  auto& inv = report.invocation;
  inv["target"] = target;
  if (overrides.threshold) inv["threshold"] = symcert::to_string(*overrides.threshold);
  if (max_depth) inv["max_depth"] = *max_depth;
  if (max_boxes) inv["max_boxes"] = *max_boxes;
  if (overrides.grid_step) inv["grid_step"] = symcert::to_string(*overrides.grid_step);
  if (samples) inv["samples"] = *samples;
  if (seed) inv["seed"] = *seed;
  if (workers) inv["workers"] = *workers;

  if (concurrent) {
    std::vector<std::future<symcert::CheckRecord>> futures;
    for (std::size_t i = 0; i < checks.size(); ++i)
      futures.push_back(std::async(std::launch::async, [&, i] { return symcert::run_check(checks[i], configs[i]); }));
    for (auto& f : futures) report.checks.push_back(f.get());
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      report.checks.push_back(symcert::run_check(checks[i], configs[i]));
      if (!out_path.empty())
        std::cerr << checks[i] << ": " << symcert::to_string(report.checks.back().status) << "\n";
    }
  }

  auto fmt = format == "structured" ? symcert::ReportFormat::Structured : symcert::ReportFormat::Text;
  std::string doc = symcert::emit_report(report, fmt, !no_timing);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(out_path);
    if (!(f << doc)) {
      std::cerr << "verify: cannot write " << out_path << "\n";
      return 1;
    }
    for (const auto& rec : report.checks)
      for (const auto& cert : rec.certificates) {
        std::ofstream cf(out_path + "." + cert.name + ".cert");
        if (!(cf << cert.text)) {
          std::cerr << "verify: cannot write certificate for " << cert.name << "\n";
          return 1;
        }
      }
  }
  return symcert::exit_code(report);
}
