// davenport: exact values, bounds and table reproduction for D(phi, p).
//
//   davenport exact  --p 5 --a 1 --b 1 --c 0 --enumerate
//   davenport table  3 --extended
//   davenport bounds --p 311 --a 1 --b 1 --c 1
//   davenport verify --max-p 7
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 budget exhausted.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "davenport/commands.hpp"
#include "davenport/verify.hpp"

namespace {

using davenport::OutputFormat;

const std::map<std::string, OutputFormat> kFormats = {
    {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

int emit(const davenport::CommandResult& result, OutputFormat fmt) {
  std::cout << davenport::format_records(result.records, fmt);
  // Keep machine-readable stdout clean.
  std::ostream& notes = fmt == OutputFormat::table ? std::cout : std::cerr;
  for (const auto& m : result.messages) notes << m << '\n';
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Davenport phi-constant for quadratic symmetric polynomials over F_p"};
  app.require_subcommand(1);
  OutputFormat fmt = OutputFormat::table;

  davenport::ExactRequest exact;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  auto* exact_cmd = app.add_subcommand("exact", "Exact D(phi,p) by closed form or exhaustive search");
  exact_cmd->add_option("--p", exact.p, "Odd prime")->required();
  exact_cmd->add_option("--a", exact.a, "Coefficient of s1^2")->required();
  exact_cmd->add_option("--b", exact.b, "Coefficient of s2")->required();
  exact_cmd->add_option("--c", exact.c, "Coefficient of s1")->required();
  exact_cmd->add_flag("--enumerate", exact.enumerate, "Enumerate all extremal sequences");
  exact_cmd->add_option("--parallel", exact.parallel, "Worker threads (0 = sequential)");
  exact_cmd->add_option("--budget-nodes", budget_nodes, "Stop after this many search nodes");
  exact_cmd->add_option("--budget-seconds", budget_seconds, "Stop after this much wall time");
  exact_cmd->add_option("--samples", exact.samples, "Extremal sequences to print");
  exact_cmd->add_option("--format", fmt, "table|json|csv")->transform(CLI::CheckedTransformer(kFormats));

  davenport::TableRequest table;
  auto* table_cmd = app.add_subcommand("table", "Recompute a reference table and diff it against the goldens");
  table_cmd->add_option("which", table.which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  table_cmd->add_option("--max-p", table.max_p, "Largest prime for table 3");
  table_cmd->add_flag("--extended", table.extended, "Table 3 up to p = 31");
  table_cmd->add_option("--parallel", table.parallel, "Worker threads (0 = sequential)");
  table_cmd->add_option("--samples", table.samples, "Extremal sequences to print per row");
  table_cmd->add_option("--format", fmt, "table|json|csv")->transform(CLI::CheckedTransformer(kFormats));

  std::uint32_t bp = 0;
  std::int64_t ba = 1;
  std::int64_t bb = 0;
  std::int64_t bc = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Proved bounds and witnesses, no search");
  bounds_cmd->add_option("--p", bp, "Odd prime")->required();
  bounds_cmd->add_option("--a", ba, "Coefficient of s1^2")->required();
  bounds_cmd->add_option("--b", bb, "Coefficient of s2")->required();
  bounds_cmd->add_option("--c", bc, "Coefficient of s1")->required();
  bounds_cmd->add_option("--format", fmt, "table|json|csv")->transform(CLI::CheckedTransformer(kFormats));

  davenport::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms, bounds and the DP against search");
  verify_cmd->add_option("--max-p", verify.max_p, "Largest prime checked (default 7)");
  verify_cmd->add_option("--samples", verify.samples_per_class, "Coefficient triples per class");
  verify_cmd->add_option("--oracle-cases", verify.random_oracle_cases, "Random DP-vs-naive cases per prime");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? davenport::kExitOk : davenport::kExitUsage;
  }

  try {
    if (*exact_cmd) {
      exact.budget_nodes = budget_nodes;
      exact.budget_seconds = budget_seconds;
      if (exact.p > davenport::kDefaultSearchMaxPrime && exact.p <= davenport::search_prime_cap()) {
        std::cerr << "warning: exact search above p=" << davenport::kDefaultSearchMaxPrime
                  << " can take hours or more\n";
      }
      return emit(davenport::cmd_exact(exact), fmt);
    }
    if (*table_cmd) return emit(davenport::cmd_table(table), fmt);
    if (*bounds_cmd) return emit(davenport::cmd_bounds(bp, ba, bb, bc), fmt);
    if (*verify_cmd) {
      // 13 unless DAVENPORT_MAX_P raises it; never past the search default.
      const std::uint32_t limit = std::getenv("DAVENPORT_MAX_P") == nullptr
                                      ? 13
                                      : std::min(davenport::search_prime_cap(), davenport::kDefaultSearchMaxPrime);
      if (verify.max_p < 3 || verify.max_p > limit) {
        std::cerr << "verify: --max-p must lie in [3, " << limit << "]\n";
        return davenport::kExitUsage;
      }
      const auto summary = davenport::run_verification(verify, [](const std::string& s) { std::cerr << s << '\n'; });
      if (summary.ok()) {
        std::cout << "verify: " << summary.checks << " checks passed up to p=" << verify.max_p << '\n';
        return davenport::kExitOk;
      }
      const auto& first = summary.failures.front();
      std::cout << "verify: " << summary.failures.size() << " of " << summary.checks << " checks failed\n"
                << "first failing case [" << first.check << "]: " << first.detail << '\n';
      return davenport::kExitMismatch;
    }
  } catch (const davenport::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return davenport::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return davenport::kExitMismatch;
  }
  return davenport::kExitUsage;
}
