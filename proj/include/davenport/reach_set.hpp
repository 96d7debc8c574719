#pragma once

// Power-sum reachability over F_p x F_p.
//
// A grid has p rows indexed by s1; each row is a p-bit set over s2 packed into
// 64-bit words. Translating a grid by (u, u^2) moves row x to row x+u and
// rotates its bits by u^2, so appending one element to a sequence costs
// O(p * words_per_row) word operations. Primes below 64 take a single-word
// path that the exhaustive search lives in.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "davenport/modp.hpp"
#include "davenport/phi.hpp"

namespace davenport {

class BitGrid {
 public:
  explicit BitGrid(Prime p)
      : p_(p), words_(static_cast<std::uint32_t>((p.value() + 63) / 64)), bits_(std::size_t{p.value()} * words_, 0) {}

  [[nodiscard]] Prime prime() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t words_per_row() const noexcept { return words_; }

  [[nodiscard]] bool test(residue x, residue y) const noexcept {
    return (bits_[std::size_t{x} * words_ + y / 64] >> (y % 64)) & 1U;
  }
  void set(residue x, residue y) noexcept { bits_[std::size_t{x} * words_ + y / 64] |= std::uint64_t{1} << (y % 64); }
  void clear() noexcept { std::fill(bits_.begin(), bits_.end(), 0); }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  [[nodiscard]] bool none() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  }
  [[nodiscard]] bool intersects(const BitGrid& other) const noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & other.bits_[i]) return true;
    }
    return false;
  }
  [[nodiscard]] bool subset_of(const BitGrid& other) const noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] & ~other.bits_[i]) return false;
    }
    return true;
  }

  [[nodiscard]] const std::uint64_t* row(residue x) const noexcept { return bits_.data() + std::size_t{x} * words_; }
  [[nodiscard]] std::uint64_t* row(residue x) noexcept { return bits_.data() + std::size_t{x} * words_; }

  friend bool operator==(const BitGrid& l, const BitGrid& r) { return l.p_ == r.p_ && l.bits_ == r.bits_; }

 private:
  Prime p_;
  std::uint32_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Points (s1, s2) where a*s1^2 + b*s2 + c*s1 = 0. Always contains (0, 0).
class ZeroLocus {
 public:
  explicit ZeroLocus(const QuadPhi& phi) : grid_(phi.prime()) {
    const Prime p = phi.prime();
    for (residue x = 0; x < p.value(); ++x) {
      for (residue y = 0; y < p.value(); ++y) {
        if (phi.at({x, y}) == 0) grid_.set(x, y);
      }
    }
  }

  [[nodiscard]] bool contains(residue s1, residue s2) const noexcept { return grid_.test(s1, s2); }
  [[nodiscard]] std::size_t size() const noexcept { return grid_.count(); }
  [[nodiscard]] const BitGrid& grid() const noexcept { return grid_; }

 private:
  BitGrid grid_;
};

inline ZeroLocus zero_locus(const QuadPhi& phi) { return ZeroLocus(phi); }

namespace detail {

// out := src rotated left by r within a p-bit row of `words` words.
inline void rotate_row(const std::uint64_t* src, std::uint64_t* out, std::uint32_t words, std::uint32_t p,
                       std::uint32_t r) {
  std::fill(out, out + words, 0);
  if (r == 0) {
    std::copy(src, src + words, out);
    return;
  }
  // Low part: src << r (bits that stay below p).
  const std::uint32_t ws = r / 64;
  const std::uint32_t bs = r % 64;
  for (std::uint32_t i = words; i-- > ws;) {
    std::uint64_t v = src[i - ws] << bs;
    if (bs != 0 && i - ws > 0) v |= src[i - ws - 1] >> (64 - bs);
    out[i] |= v;
  }
  // High part: src >> (p - r) wraps around to the bottom.
  const std::uint32_t back = p - r;
  const std::uint32_t wb = back / 64;
  const std::uint32_t bb = back % 64;
  for (std::uint32_t i = 0; i + wb < words; ++i) {
    std::uint64_t v = src[i + wb] >> bb;
    if (bb != 0 && i + wb + 1 < words) v |= src[i + wb + 1] << (64 - bb);
    out[i] |= v;
  }
  const std::uint32_t tail = p % 64;
  if (tail != 0) out[words - 1] &= (std::uint64_t{1} << tail) - 1;
}

}  // namespace detail

/// Set of (s1, s2) achieved by nonempty sub-multisets of a sequence.
/// Never contains the empty-sum point unless some nonempty sub-multiset sums to (0, 0).
class ReachSet {
 public:
  explicit ReachSet(Prime p) : grid_(p) {}

  [[nodiscard]] Prime prime() const noexcept { return grid_.prime(); }
  [[nodiscard]] bool contains(residue s1, residue s2) const noexcept { return grid_.test(s1, s2); }
  [[nodiscard]] std::size_t size() const noexcept { return grid_.count(); }
  [[nodiscard]] bool empty() const noexcept { return grid_.none(); }
  [[nodiscard]] bool meets(const ZeroLocus& locus) const noexcept { return grid_.intersects(locus.grid()); }
  [[nodiscard]] bool subset_of(const ReachSet& other) const noexcept { return grid_.subset_of(other.grid_); }
  [[nodiscard]] const BitGrid& grid() const noexcept { return grid_; }

  /// *this := src ∪ (src + (u, u^2)) ∪ {(u, u^2)}. Returns true when the
  /// result meets `locus` (checked only if a locus is given). `src` must
  /// share this set's prime and must not alias *this.
  bool assign_extended(const ReachSet& src, residue u, const ZeroLocus* locus = nullptr) {
    const Prime p = prime();
    const std::uint32_t n = p.value();
    const std::uint32_t words = grid_.words_per_row();
    u %= n;
    const residue q = p.mul(u, u);
    bool hit = false;

    if (words == 1) {
      const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
      const std::uint64_t* in = src.grid_.row(0);
      std::uint64_t* out = grid_.row(0);
      const std::uint64_t* zero = locus ? locus->grid().row(0) : nullptr;
      residue y = u;
      for (residue x = 0; x < n; ++x) {
        const std::uint64_t v = in[x];
        const std::uint64_t rotated = ((v << q) | (v >> (n - q))) & mask;
        out[y] = in[y] | rotated;
        if (++y == n) y = 0;
      }
      out[u] |= std::uint64_t{1} << q;
      if (zero != nullptr) {
        std::uint64_t acc = 0;
        for (residue x = 0; x < n; ++x) acc |= out[x] & zero[x];
        hit = acc != 0;
      }
      return hit;
    }

    std::vector<std::uint64_t> rotated(words);
    for (residue x = 0; x < n; ++x) {
      const residue y = p.add(x, u);
      detail::rotate_row(src.grid_.row(x), rotated.data(), words, n, q);
      std::uint64_t* out = grid_.row(y);
      const std::uint64_t* in = src.grid_.row(y);
      for (std::uint32_t w = 0; w < words; ++w) out[w] = in[w] | rotated[w];
    }
    grid_.set(u, q);
    if (locus != nullptr) hit = meets(*locus);
    return hit;
  }

  /// Appends one copy of u in place.
  void extend(residue u) {
    ReachSet next(prime());
    next.assign_extended(*this, u);
    *this = std::move(next);
  }

  friend bool operator==(const ReachSet& l, const ReachSet& r) { return l.grid_ == r.grid_; }

 private:
  BitGrid grid_;
};

/// Reach set of S ∪ [u]^count, given the reach set of S.
inline ReachSet reach_extend(ReachSet reach, residue u, std::uint32_t count) {
  for (std::uint32_t i = 0; i < count; ++i) reach.extend(u);
  return reach;
}

inline ReachSet reach_of(const MultisetSeq& seq) {
  ReachSet reach(seq.prime());
  const auto& mult = seq.multiplicities();
  for (residue u = 0; u < seq.prime().value(); ++u) reach = reach_extend(std::move(reach), u, mult[u]);
  return reach;
}

}  // namespace davenport
