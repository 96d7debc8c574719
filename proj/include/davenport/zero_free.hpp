#pragma once

#include <cstdint>
#include <string>

#include "davenport/phi.hpp"
#include "davenport/reach_set.hpp"
#include "davenport/sequence.hpp"

namespace davenport {

/// True when no nonempty sub-multiset of `seq` is phi-zero. Builds the reach
/// set one copy at a time and stops at the first copy that meets the locus.
inline bool is_zero_free(const QuadPhi& phi, const MultisetSeq& seq, const ZeroLocus& locus) {
  if (seq.prime() != phi.prime()) throw domain_error("sequence and phi live over different primes");
  if (seq.count(0) > 0) return false;
  const Prime p = phi.prime();
  ReachSet cur(p);
  ReachSet next(p);
  const auto& mult = seq.multiplicities();
  for (residue u = 1; u < p.value(); ++u) {
    for (std::uint32_t i = 0; i < mult[u]; ++i) {
      if (next.assign_extended(cur, u, &locus)) return false;
      std::swap(cur, next);
    }
  }
  return true;
}

inline bool is_zero_free(const QuadPhi& phi, const MultisetSeq& seq) {
  return is_zero_free(phi, seq, ZeroLocus(phi));
}

inline constexpr std::uint64_t kDefaultNaiveBudget = std::uint64_t{1} << 20;

/// Reference check: walks every nonempty sub-multiset and evaluates phi on it.
inline bool naive_is_zero_free(const QuadPhi& phi, const MultisetSeq& seq,
                               std::uint64_t budget = kDefaultNaiveBudget) {
  if (seq.prime() != phi.prime()) throw domain_error("sequence and phi live over different primes");
  const Prime p = phi.prime();
  const auto support = seq.support();
  std::uint64_t total = 1;
  for (auto u : support) {
    total *= seq.count(u) + 1;
    if (total > budget) {
      throw resource_error("naive enumeration needs more than " + std::to_string(budget) + " sub-multisets");
    }
  }
  std::vector<std::uint32_t> pick(support.size(), 0);
  // Mixed-radix counter over 0 <= pick[i] <= mult[support[i]].
  while (true) {
    std::size_t i = 0;
    while (i < pick.size() && pick[i] == seq.count(support[i])) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
    MultisetSeq sub(p);
    for (std::size_t j = 0; j < pick.size(); ++j) {
      if (pick[j] > 0) sub.add(support[j], pick[j]);
    }
    if (phi_eval(phi, sub) == 0) return false;
  }
  return true;
}

}  // namespace davenport
