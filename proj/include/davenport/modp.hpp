#pragma once

// Prime-field arithmetic over F_p for small odd primes.

#include <cstdint>
#include <string>
#include <vector>

#include "davenport/errors.hpp"

namespace davenport {

using residue = std::uint32_t;

inline constexpr std::uint32_t kDefaultUtilityMaxPrime = 1021;

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = result * base % m;
    base = base * base % m;
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin; the witness set {2,3,5,7} is exact below 3.2e9,
// far beyond any prime this library accepts.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2U, 3U, 5U, 7U}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2U, 3U, 5U, 7U}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// An odd prime p with 3 <= p <= max_p, validated at construction.
class Prime {
 public:
  explicit Prime(std::uint32_t p, std::uint32_t max_p = kDefaultUtilityMaxPrime) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
      throw domain_error("not an odd prime: " + std::to_string(p));
    }
    if (p > max_p) {
      throw domain_error("prime " + std::to_string(p) + " exceeds cap " + std::to_string(max_p));
    }
  }

  [[nodiscard]] constexpr std::uint32_t value() const noexcept { return p_; }
  constexpr operator std::uint32_t() const noexcept { return p_; }  // NOLINT: numeric use everywhere

  [[nodiscard]] constexpr residue reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = x % m;
    return static_cast<residue>(r < 0 ? r + m : r);
  }
  [[nodiscard]] constexpr residue add(residue x, residue y) const noexcept {
    const std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] constexpr residue sub(residue x, residue y) const noexcept {
    return x >= y ? x - y : x + p_ - y;
  }
  [[nodiscard]] constexpr residue mul(residue x, residue y) const noexcept {
    return static_cast<residue>(static_cast<std::uint64_t>(x) * y % p_);
  }
  [[nodiscard]] constexpr residue neg(residue x) const noexcept { return x == 0 ? 0 : p_ - x; }
  [[nodiscard]] constexpr residue pow(residue x, std::uint64_t e) const noexcept {
    return static_cast<residue>(pow_mod(x, e, p_));
  }

  friend constexpr bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

inline residue inverse(residue a, Prime p) {
  a %= p.value();
  if (a == 0) throw domain_error("zero has no multiplicative inverse");
  return p.pow(a, p.value() - 2);
}

// Euler's criterion.
inline int legendre(residue a, Prime p) {
  a %= p.value();
  if (a == 0) return 0;
  return p.pow(a, (p.value() - 1) / 2) == 1 ? 1 : -1;
}

/// Largest s such that 1, 2, ..., s are all quadratic residues mod p.
inline std::uint32_t consecutive_qr_run(Prime p) {
  std::uint32_t s = 0;
  while (s + 1 < p.value() && legendre(s + 1, p) == 1) ++s;
  return s;
}

inline std::uint32_t smallest_divisor_above_two(Prime p) {
  if (p.value() < 5) throw domain_error("smallest divisor above two requires p >= 5");
  const std::uint32_t n = p.value() - 1;
  for (std::uint32_t k = 3; k <= n; ++k) {
    if (n % k == 0) return k;
  }
  return n;  // unreachable: n >= 4 divides itself
}

inline std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline residue primitive_root(Prime p) {
  const std::uint32_t n = p.value() - 1;
  const auto factors = distinct_prime_factors(n);
  for (residue g = 2; g < p.value(); ++g) {
    bool generator = true;
    for (auto q : factors) {
      if (p.pow(g, n / q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  return 1;  // p = 3 with n = 2 finds g = 2 above; kept for totality
}

/// Element of multiplicative order exactly k, as g^((p-1)/k) for a primitive root g.
inline residue element_of_order(Prime p, std::uint32_t k) {
  if (k == 0 || (p.value() - 1) % k != 0) {
    throw domain_error("order " + std::to_string(k) + " does not divide p-1 = " +
                       std::to_string(p.value() - 1));
  }
  return p.pow(primitive_root(p), (p.value() - 1) / k);
}

inline std::uint32_t multiplicative_order(residue a, Prime p) {
  a %= p.value();
  if (a == 0) throw domain_error("zero has no multiplicative order");
  std::uint32_t k = 1;
  residue x = a;
  while (x != 1) {
    x = p.mul(x, a);
    ++k;
  }
  return k;
}

}  // namespace davenport
