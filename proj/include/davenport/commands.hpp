#pragma once

// The `exact`, `table` and `bounds` commands as library calls. Argument
// parsing and printing live in tools/davenport.cpp.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "davenport/goldens.hpp"
#include "davenport/modp.hpp"
#include "davenport/phi.hpp"
#include "davenport/record.hpp"
#include "davenport/search.hpp"
#include "davenport/theory.hpp"

namespace davenport {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Safety cap on p for exact search: DAVENPORT_MAX_P if set, else 31.
inline std::uint32_t search_prime_cap() {
  if (const char* env = std::getenv("DAVENPORT_MAX_P")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::uint32_t>(v);
  }
  return kDefaultSearchMaxPrime;
}

/// Cap for theory-only commands; DAVENPORT_MAX_P can raise it.
inline std::uint32_t utility_prime_cap() { return std::max(kDefaultUtilityMaxPrime, search_prime_cap()); }

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<OutputRecord> records;
  std::vector<std::string> messages;  // discrepancies and notes
};

struct ExactRequest {
  std::uint32_t p = 0;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  bool enumerate = false;
  std::uint32_t parallel = 0;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  std::uint32_t samples = 5;
};

namespace detail {

inline std::vector<std::string> sample_strings(const std::vector<MultisetSeq>& seqs, std::uint32_t limit) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < seqs.size() && i < limit; ++i) out.push_back(seqs[i].to_string());
  return out;
}

inline std::optional<MultisetSeq> best_witness(const BoundsReport& b) {
  std::optional<MultisetSeq> best;
  for (const auto& lb : b.lower) {
    if (lb.witness && (!best || lb.witness->length() > best->length())) best = lb.witness;
  }
  return best;
}

}  // namespace detail

/// Exact D(phi, p): closed form when one applies, otherwise a full search
/// seeded with the best theory witness and bounded by the best proved upper bound.
inline CommandResult cmd_exact(const ExactRequest& req) {
  const std::uint32_t cap = search_prime_cap();
  const Prime p(req.p, cap);
  const QuadPhi phi(p, req.a, req.b, req.c);
  CommandResult result;
  OutputRecord rec = make_record(phi);

  if (auto form = closed_form(phi)) {
    SearchReport as_report;
    as_report.d_value = form->d_value;
    as_report.extremal = form->members;
    as_report.extremal_count = form->members.size();
    as_report.certified = true;
    fill_bounds(rec, bounds(phi, req.enumerate ? &as_report : nullptr));
    rec.d_exact = form->d_value;
    rec.certified = true;
    if (req.enumerate) rec.extremal_count = form->members.size();
    rec.extremal_samples = detail::sample_strings(form->members, req.enumerate ? req.samples : 1);
    result.messages.push_back("closed form " + form->provenance);
    result.records.push_back(std::move(rec));
    return result;
  }

  const BoundsReport theory = bounds(phi);
  SearchOptions opts;
  opts.max_p = cap;
  opts.enumerate_extremal = req.enumerate;
  opts.parallel_width = req.parallel;
  opts.node_budget = req.budget_nodes;
  if (req.budget_seconds) {
    opts.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(*req.budget_seconds * 1000.0));
  }
  opts.seed_witness = detail::best_witness(theory);
  opts.known_upper = theory.best_upper;

  try {
    const SearchReport report = max_zero_free(phi, opts);
    const BoundsReport full = bounds(phi, &report);
    fill_bounds(rec, full);
    rec.d_exact = report.d_value;
    rec.certified = report.certified;
    rec.extremal_count = report.extremal_count;
    rec.extremal_samples = detail::sample_strings(report.extremal, req.enumerate ? req.samples : 1);
    rec.nodes = report.nodes_visited;
    rec.elapsed_ms = report.elapsed.count();
    if (report.d_value < full.best_lower || report.d_value > full.best_upper) {
      result.exit_code = kExitMismatch;
      result.messages.push_back("D=" + std::to_string(report.d_value) + " outside proved bounds [" +
                                std::to_string(full.best_lower) + ", " + std::to_string(full.best_upper) + "]");
    }
  } catch (const search_budget_exhausted& e) {
    const SearchReport& partial = e.partial();
    fill_bounds(rec, theory);
    std::optional<std::string> w;
    if (!partial.extremal.empty()) w = partial.extremal.front().to_string();
    rec.lower_bounds.push_back({partial.d_value, "search-partial", w});
    rec.certified = false;
    rec.nodes = partial.nodes_visited;
    rec.elapsed_ms = partial.elapsed.count();
    result.exit_code = kExitBudget;
    result.messages.push_back(e.what());
  }
  result.records.push_back(std::move(rec));
  return result;
}

/// Theory-only bounds; no search.
inline CommandResult cmd_bounds(std::uint32_t p_value, std::int64_t a, std::int64_t b, std::int64_t c) {
  const Prime p(p_value, utility_prime_cap());
  const QuadPhi phi(p, a, b, c);
  CommandResult result;
  OutputRecord rec = make_record(phi);
  const BoundsReport br = bounds(phi);
  fill_bounds(rec, br);
  if (br.best_lower == br.best_upper) {
    rec.d_exact = br.best_lower;
    rec.certified = true;
  }
  result.records.push_back(std::move(rec));
  return result;
}

struct TableRequest {
  int which = 1;
  std::uint32_t max_p = 19;  // table 3 only
  bool extended = false;     // table 3: include 23, 29, 31
  std::uint32_t parallel = 0;
  std::uint32_t samples = 3;
};

namespace detail {

inline void compare_samples(const std::string& row, const std::vector<std::string>& golden, const SearchReport& report,
                            Prime p, CommandResult& result) {
  for (const auto& text : golden) {
    const MultisetSeq s = MultisetSeq::parse(text, p);
    if (!std::binary_search(report.extremal.begin(), report.extremal.end(), s)) {
      result.exit_code = kExitMismatch;
      result.messages.push_back(row + ": listed extremal " + text + " not in computed M");
    }
  }
}

inline OutputRecord searched_record(const QuadPhi& phi, const TableRequest& req, SearchReport& report) {
  SearchOptions opts;
  opts.enumerate_extremal = true;
  opts.parallel_width = req.parallel;
  opts.max_p = std::max(search_prime_cap(), phi.prime().value());
  report = max_zero_free(phi, opts);
  OutputRecord rec = make_record(phi);
  fill_bounds(rec, bounds(phi, &report));
  rec.d_exact = report.d_value;
  rec.certified = report.certified;
  rec.extremal_count = report.extremal_count;
  rec.extremal_samples = sample_strings(report.extremal, req.samples);
  rec.nodes = report.nodes_visited;
  rec.elapsed_ms = report.elapsed.count();
  return rec;
}

}  // namespace detail

/// Recomputes one of the reference tables and diffs it against the goldens.
inline CommandResult cmd_table(const TableRequest& req) {
  CommandResult result;
  auto mismatch = [&](const std::string& msg) {
    result.exit_code = kExitMismatch;
    result.messages.push_back(msg);
  };

  if (req.which == 1) {
    for (const auto& row : golden::table1()) {
      const Prime p(row.p);
      const QuadPhi phi(p, 1, row.lambda, 0);
      SearchReport report;
      result.records.push_back(detail::searched_record(phi, req, report));
      const std::string tag = "p=" + std::to_string(row.p) + " lambda=" + std::to_string(row.lambda);
      if (report.d_value != row.d) {
        mismatch(tag + ": D=" + std::to_string(report.d_value) + ", expected " + std::to_string(row.d));
      }
      if (report.extremal_count != row.m_count) {
        mismatch(tag + ": |M|=" + std::to_string(report.extremal_count.value_or(0)) + ", expected " +
                 std::to_string(row.m_count));
      }
      detail::compare_samples(tag, row.samples, report, p, result);
    }
  } else if (req.which == 2) {
    for (const auto& row : golden::table2()) {
      const Prime p(row.p, utility_prime_cap());
      const QuadPhi phi(p, 1, 1, 1);
      OutputRecord rec = make_record(phi);
      const BoundsReport br = bounds(phi);
      fill_bounds(rec, br);
      const auto it = std::find_if(br.lower.begin(), br.lower.end(),
                                   [](const LowerBound& lb) { return lb.provenance == label::kThm46; });
      const std::uint32_t got = it == br.lower.end() ? 0 : it->value;
      if (got != row.lower) {
        mismatch("p=" + std::to_string(row.p) + ": lower bound " + std::to_string(got) + ", expected " +
                 std::to_string(row.lower));
      }
      result.records.push_back(std::move(rec));
    }
  } else if (req.which == 3) {
    const std::uint32_t top = req.extended ? std::max<std::uint32_t>(req.max_p, 31) : req.max_p;
    for (const auto& row : golden::table3()) {
      if (row.p > top) continue;
      const Prime p(row.p, std::max(row.p, kDefaultUtilityMaxPrime));
      const QuadPhi phi(p, 1, 1, 1);
      SearchReport report;
      result.records.push_back(detail::searched_record(phi, req, report));
      const std::string tag = "p=" + std::to_string(row.p);
      if (report.d_value != row.d) {
        mismatch(tag + ": D=" + std::to_string(report.d_value) + ", expected " + std::to_string(row.d));
      }
      if (report.extremal_count != row.m_count) {
        mismatch(tag + ": |M|=" + std::to_string(report.extremal_count.value_or(0)) + ", expected " +
                 std::to_string(row.m_count));
      }
      detail::compare_samples(tag, row.samples, report, p, result);
    }
  } else {
    throw domain_error("table must be 1, 2 or 3");
  }
  if (result.exit_code == kExitOk) {
    result.messages.push_back("table " + std::to_string(req.which) + ": all " + std::to_string(result.records.size()) +
                              " rows match");
  }
  return result;
}

}  // namespace davenport
