#pragma once

// Theory-versus-search consistency harness behind `davenport verify`.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "davenport/modp.hpp"
#include "davenport/phi.hpp"
#include "davenport/search.hpp"
#include "davenport/theory.hpp"
#include "davenport/zero_free.hpp"

namespace davenport {

struct VerifyOptions {
  std::uint32_t max_p = 7;
  std::uint32_t samples_per_class = 20;
  std::uint32_t random_oracle_cases = 2000;
  std::uint64_t seed = 20240229;
};

struct VerifyFailure {
  std::string check;
  std::string detail;
};

struct VerifySummary {
  std::uint64_t checks = 0;
  std::vector<VerifyFailure> failures;
  [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

inline std::string join_seqs(const std::vector<MultisetSeq>& seqs, std::size_t limit = 4) {
  std::string out;
  for (std::size_t i = 0; i < seqs.size() && i < limit; ++i) {
    if (i > 0) out += ", ";
    out += seqs[i].to_string();
  }
  if (seqs.size() > limit) out += ", ...";
  return "{" + out + "}";
}

// Triples of one coefficient class; all of them if at most `limit`, else a
// random sample of `limit`.
inline std::vector<QuadPhi> sample_class(std::vector<QuadPhi> all, std::uint32_t limit, std::mt19937_64& rng) {
  if (all.size() <= limit) return all;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(limit, all.front());
  return all;
}

}  // namespace detail

/// Coefficient triples grouped by the class that admits a closed form.
inline std::vector<std::pair<std::string, std::vector<QuadPhi>>> closed_form_classes(Prime p) {
  const std::uint32_t n = p.value();
  std::vector<QuadPhi> i_class;
  std::vector<QuadPhi> ii_class;
  std::vector<QuadPhi> iii_class;
  std::vector<QuadPhi> degenerate;
  for (residue b = 1; b < n; ++b) {
    for (residue c = 0; c < n; ++c) i_class.emplace_back(p, 0, b, c);
  }
  for (residue a = 1; a < n; ++a) {
    ii_class.emplace_back(p, a, 0, 0);
    for (residue c = 1; c < n; ++c) iii_class.emplace_back(p, a, 0, c);
    degenerate.emplace_back(p, a, p.neg(a), 0);
  }
  return {{"thm2.1(i)", i_class}, {"thm2.1(ii)", ii_class}, {"thm2.1(iii)", iii_class}, {"lambda=p-1", degenerate}};
}

/// Empty string when closed form and enumerating search agree on D and M.
inline std::string compare_closed_form(const QuadPhi& phi) {
  const auto form = closed_form(phi);
  if (!form) return "no closed form for " + phi.to_string();
  SearchOptions opts;
  opts.enumerate_extremal = true;
  const auto report = max_zero_free(phi, opts);
  if (report.d_value != form->d_value) {
    return phi.to_string() + ": closed form D=" + std::to_string(form->d_value) + " but search D=" +
           std::to_string(report.d_value);
  }
  if (report.extremal != form->members) {
    return phi.to_string() + ": closed form M=" + detail::join_seqs(form->members) + " but search M=" +
           detail::join_seqs(report.extremal);
  }
  return {};
}

/// Empty string when best_lower <= D <= best usable upper for a completed search.
inline std::string check_sandwich(const QuadPhi& phi, const SearchReport& report) {
  const auto b = bounds(phi, report.extremal_count ? &report : nullptr);
  if (b.best_lower <= report.d_value && report.d_value <= b.best_upper) return {};
  return phi.to_string() + ": D=" + std::to_string(report.d_value) + " outside [" + std::to_string(b.best_lower) +
         ", " + std::to_string(b.best_upper) + "]";
}

inline VerifySummary run_verification(const VerifyOptions& opts,
                                      const std::function<void(const std::string&)>& progress = {}) {
  VerifySummary summary;
  std::mt19937_64 rng(opts.seed);
  auto fail = [&](std::string check, std::string detail) {
    summary.failures.push_back({std::move(check), std::move(detail)});
  };

  for (std::uint32_t n = 3; n <= opts.max_p; n += 2) {
    if (!is_prime(n)) continue;
    const Prime p(n, std::max(n, kDefaultUtilityMaxPrime));
    if (progress) progress("p=" + std::to_string(n));

    // Closed form against exhaustive search, per class.
    for (auto& [name, triples] : closed_form_classes(p)) {
      for (const auto& phi : detail::sample_class(triples, opts.samples_per_class, rng)) {
        ++summary.checks;
        if (auto err = compare_closed_form(phi); !err.empty()) fail("closed-form " + name, err);
      }
    }
    if (n == 3) {
      for (residue lambda = 1; lambda <= 2; ++lambda) {
        for (residue mu = 1; mu <= 2; ++mu) {
          ++summary.checks;
          if (auto err = compare_closed_form(QuadPhi(p, 1, lambda, mu)); !err.empty()) fail("closed-form lem4.3", err);
        }
      }
    }

    // Bound sandwich and witnesses over the ab != 0 families.
    std::vector<QuadPhi> families;
    for (residue lambda = 1; lambda + 1 < n; ++lambda) families.emplace_back(p, 1, lambda, 0);
    families.emplace_back(p, 1, 1, 1);
    std::uniform_int_distribution<residue> nonzero(1, n - 1);
    for (std::uint32_t i = 0; i < 4; ++i) {
      const residue a = nonzero(rng);
      const residue b = nonzero(rng);
      families.emplace_back(p, a, b, nonzero(rng));
    }
    for (const auto& phi : families) {
      ++summary.checks;
      SearchOptions so;
      so.enumerate_extremal = true;
      const auto report = max_zero_free(phi, so);
      if (auto err = check_sandwich(phi, report); !err.empty()) fail("bound sandwich", err);
      for (const auto& lb : lower_bounds(phi)) {
        if (!lb.witness) continue;
        ++summary.checks;
        const bool fast = is_zero_free(phi, *lb.witness);
        if (!fast || lb.witness->length() + 1 != lb.value) {
          fail("witness " + lb.provenance, phi.to_string() + " " + lb.witness->to_string());
        } else if (n <= 7 && !naive_is_zero_free(phi, *lb.witness)) {
          fail("witness " + lb.provenance + " (naive)", phi.to_string() + " " + lb.witness->to_string());
        }
      }
    }

    // Reach-set DP against explicit sub-multiset enumeration.
    std::uniform_int_distribution<residue> any(0, n - 1);
    std::uniform_int_distribution<std::uint32_t> len(0, 8);
    for (std::uint32_t i = 0; i < opts.random_oracle_cases; ++i) {
      residue a = any(rng);
      residue b = any(rng);
      if (a == 0 && b == 0) b = 1;
      const QuadPhi phi(p, a, b, any(rng));
      MultisetSeq seq(p);
      const std::uint32_t m = len(rng);
      for (std::uint32_t j = 0; j < m; ++j) {
        const residue u = any(rng);
        if (seq.count(u) + 1 < n) seq.add(u);
      }
      ++summary.checks;
      if (is_zero_free(phi, seq) != naive_is_zero_free(phi, seq)) {
        fail("dp-vs-naive", phi.to_string() + " " + seq.to_string());
      }
    }
  }
  return summary;
}

}  // namespace davenport
