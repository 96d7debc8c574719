#pragma once

// Test-only reference implementations. None of these share code paths with
// the library routines they check.

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "davenport/phi.hpp"
#include "davenport/sequence.hpp"

namespace oracle {

using davenport::MultisetSeq;
using davenport::Prime;
using davenport::QuadPhi;

// Jacobi symbol by quadratic reciprocity.
inline int jacobi(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Squares of F_p*, by listing x^2.
inline std::set<std::uint32_t> squares(std::uint32_t p) {
  std::set<std::uint32_t> out;
  for (std::uint32_t x = 1; x < p; ++x) out.insert(x * x % p);
  return out;
}

// Power-sum pairs of every nonempty sub-multiset, listed explicitly.
inline std::set<std::pair<std::uint32_t, std::uint32_t>> brute_reach(const MultisetSeq& seq) {
  const std::uint32_t p = seq.prime().value();
  std::vector<std::uint32_t> items;
  for (std::uint32_t u = 0; u < p; ++u) {
    for (std::uint32_t k = 0; k < seq.count(u); ++k) items.push_back(u);
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  const std::uint64_t subsets = std::uint64_t{1} << items.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) {
        s1 += items[i];
        s2 += std::uint64_t{items[i]} * items[i];
      }
    }
    out.emplace(static_cast<std::uint32_t>(s1 % p), static_cast<std::uint32_t>(s2 % p));
  }
  return out;
}

// Zero-freeness straight from the definition over subsets of positions.
inline bool brute_zero_free(const QuadPhi& phi, const MultisetSeq& seq) {
  const std::uint32_t p = phi.prime().value();
  for (auto [s1, s2] : brute_reach(seq)) {
    const std::uint64_t v = (std::uint64_t{phi.a()} * s1 % p * s1 + std::uint64_t{phi.b()} * s2 + std::uint64_t{phi.c()} * s1) % p;
    if (v == 0) return false;
  }
  return true;
}

// Calls f on every multiset over F_p with length <= max_len and every
// multiplicity below p.
inline void for_each_multiset(Prime p, std::uint32_t max_len, const std::function<void(const MultisetSeq&)>& f) {
  MultisetSeq cur(p);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t u, std::uint32_t left) {
    if (u == p.value()) {
      f(cur);
      return;
    }
    for (std::uint32_t k = 0; k <= left && k < p.value(); ++k) {
      cur.set(u, k);
      rec(u + 1, left - k);
    }
    cur.set(u, 0);
  };
  rec(0, max_len);
}

}  // namespace oracle
