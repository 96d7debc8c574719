#pragma once

// Sequences over F_p in multiplicity form [u1]^n1 [u2]^n2 ...

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "davenport/modp.hpp"

namespace davenport {

class MultisetSeq {
 public:
  explicit MultisetSeq(Prime p) : p_(p), mult_(p.value(), 0) {}

  /// Builds from (residue, count) pairs; residues may be given signed.
  MultisetSeq(Prime p, std::initializer_list<std::pair<std::int64_t, std::uint32_t>> terms)
      : MultisetSeq(p) {
    for (auto [u, n] : terms) add(p.reduce(u), n);
  }

  [[nodiscard]] Prime prime() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t length() const noexcept { return length_; }
  [[nodiscard]] bool empty() const noexcept { return length_ == 0; }
  [[nodiscard]] std::uint32_t count(residue u) const { return mult_.at(u); }
  [[nodiscard]] const std::vector<std::uint32_t>& multiplicities() const noexcept { return mult_; }

  // mult[u] < p: p copies of u add (0,0) to both power sums.
  MultisetSeq& add(residue u, std::uint32_t n = 1) {
    if (u >= p_.value()) throw domain_error("residue out of range: " + std::to_string(u));
    if (mult_[u] + n >= p_.value()) {
      throw domain_error("multiplicity of " + std::to_string(u) + " must stay below p");
    }
    mult_[u] += n;
    length_ += n;
    return *this;
  }

  void set(residue u, std::uint32_t n) {
    if (u >= p_.value()) throw domain_error("residue out of range: " + std::to_string(u));
    if (n >= p_.value()) throw domain_error("multiplicity must stay below p");
    length_ = length_ - mult_[u] + n;
    mult_[u] = n;
  }

  [[nodiscard]] std::vector<residue> support() const {
    std::vector<residue> out;
    for (residue u = 0; u < p_.value(); ++u) {
      if (mult_[u] > 0) out.push_back(u);
    }
    return out;
  }

  /// "[u1]^n1 [u2]^n2 ..." with u ascending in [0, p-1]; "[]" for the empty sequence.
  [[nodiscard]] std::string to_string() const {
    if (length_ == 0) return "[]";
    std::string out;
    for (residue u = 0; u < p_.value(); ++u) {
      if (mult_[u] == 0) continue;
      if (!out.empty()) out += ' ';
      out += '[' + std::to_string(u) + "]^" + std::to_string(mult_[u]);
    }
    return out;
  }

  /// Inverse of to_string. Also accepts "[u]" for a single copy, signed
  /// representatives such as "[-1]^4", and juxtaposed terms "[1][-1]^4".
  static MultisetSeq parse(std::string_view text, Prime p) {
    MultisetSeq seq(p);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_int = [&](const char* what) -> std::int64_t {
      skip_ws();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i || (i == start + 1 && (text[start] == '-' || text[start] == '+'))) {
        throw domain_error(std::string("malformed sequence, expected ") + what + ": " +
                           std::string(text));
      }
      return std::strtoll(std::string(text.substr(start, i - start)).c_str(), nullptr, 10);
    };
    skip_ws();
    if (text.substr(i) == "[]") return seq;
    while (true) {
      skip_ws();
      if (i >= text.size()) break;
      if (text[i] != '[') throw domain_error("malformed sequence: " + std::string(text));
      ++i;
      const std::int64_t u = read_int("residue");
      skip_ws();
      if (i >= text.size() || text[i] != ']') {
        throw domain_error("malformed sequence: " + std::string(text));
      }
      ++i;
      std::int64_t n = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        n = read_int("exponent");
        if (n < 0) throw domain_error("negative exponent in: " + std::string(text));
      }
      seq.add(p.reduce(u), static_cast<std::uint32_t>(n));
    }
    return seq;
  }

  friend bool operator==(const MultisetSeq& x, const MultisetSeq& y) {
    return x.p_ == y.p_ && x.mult_ == y.mult_;
  }
  // Canonical order: lexicographic on the multiplicity table.
  friend std::strong_ordering operator<=>(const MultisetSeq& x, const MultisetSeq& y) {
    if (auto c = x.p_.value() <=> y.p_.value(); c != 0) return c;
    return x.mult_ <=> y.mult_;
  }

 private:
  Prime p_;
  std::vector<std::uint32_t> mult_;
  std::uint32_t length_ = 0;
};

}  // namespace davenport
