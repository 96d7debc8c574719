#pragma once

// The quadratic symmetric form phi(S) = a*s1^2 + b*s2 + c*s1 over F_p, where
// s1 and s2 are the first two power sums of S.

#include <cstdint>
#include <string>

#include "davenport/modp.hpp"
#include "davenport/sequence.hpp"

namespace davenport {

struct PowerSums {
  residue s1 = 0;
  residue s2 = 0;
  friend bool operator==(const PowerSums&, const PowerSums&) = default;
};

inline PowerSums power_sums(const MultisetSeq& seq) {
  const Prime p = seq.prime();
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  const auto& mult = seq.multiplicities();
  for (residue u = 0; u < p.value(); ++u) {
    s1 += static_cast<std::uint64_t>(mult[u]) * u;
    s2 += static_cast<std::uint64_t>(mult[u]) * u * u;
  }
  return {static_cast<residue>(s1 % p.value()), static_cast<residue>(s2 % p.value())};
}

class QuadPhi {
 public:
  QuadPhi(Prime p, std::int64_t a, std::int64_t b, std::int64_t c)
      : p_(p), a_(p.reduce(a)), b_(p.reduce(b)), c_(p.reduce(c)) {
    if (a_ == 0 && b_ == 0) throw domain_error("phi needs a or b nonzero");
  }

  [[nodiscard]] Prime prime() const noexcept { return p_; }
  [[nodiscard]] residue a() const noexcept { return a_; }
  [[nodiscard]] residue b() const noexcept { return b_; }
  [[nodiscard]] residue c() const noexcept { return c_; }

  // Scaling by a^-1 preserves the zero locus, so any phi with a != 0 is
  // equivalent to s1^2 + lambda*s2 + mu*s1.
  [[nodiscard]] bool has_normal_form() const noexcept { return a_ != 0; }
  [[nodiscard]] residue lambda() const {
    if (a_ == 0) throw domain_error("lambda is defined only when a != 0");
    return p_.mul(b_, inverse(a_, p_));
  }
  [[nodiscard]] residue mu() const {
    if (a_ == 0) throw domain_error("mu is defined only when a != 0");
    return p_.mul(c_, inverse(a_, p_));
  }
  [[nodiscard]] QuadPhi normalized() const { return {p_, 1, lambda(), mu()}; }

  [[nodiscard]] residue at(PowerSums s) const noexcept {
    return p_.add(p_.add(p_.mul(a_, p_.mul(s.s1, s.s1)), p_.mul(b_, s.s2)), p_.mul(c_, s.s1));
  }

  [[nodiscard]] std::string to_string() const {
    return "(a=" + std::to_string(a_) + ", b=" + std::to_string(b_) + ", c=" + std::to_string(c_) +
           ", p=" + std::to_string(p_.value()) + ")";
  }

  friend bool operator==(const QuadPhi&, const QuadPhi&) = default;

 private:
  Prime p_;
  residue a_;
  residue b_;
  residue c_;
};

inline residue phi_eval(const QuadPhi& phi, const MultisetSeq& seq) {
  if (seq.empty()) throw domain_error("phi is evaluated on nonempty sequences only");
  if (seq.prime() != phi.prime()) throw domain_error("sequence and phi live over different primes");
  return phi.at(power_sums(seq));
}

/// Largest k such that [u]^j is not phi-zero for every 1 <= j <= k.
/// phi([u]^j) = j*u*(a*j*u + b*u + c).
inline std::uint32_t singleton_cap(const QuadPhi& phi, residue u) {
  const Prime p = phi.prime();
  u %= p.value();
  if (u == 0) return 0;
  std::uint32_t k = 0;
  for (std::uint32_t j = 1; j < p.value(); ++j) {
    const residue ju = p.mul(j, u);
    const residue inner = p.add(p.add(p.mul(phi.a(), ju), p.mul(phi.b(), u)), phi.c());
    if (p.mul(ju, inner) == 0) break;
    k = j;
  }
  return k;
}

}  // namespace davenport
