#pragma once

// Closed forms, proved bounds and explicit witnesses for D(phi, p).
//
// Coefficient classes:
//   a = 0, b != 0            D = p       M = {[u]^α [w-u]^(p-1-α)}, w = -c/b
//   a != 0, b = c = 0        D = p       M = {[u]^(p-1)}
//   a != 0, b = 0, c != 0    D = p - 1   M = {[c/a]^(p-2)}
//   ab != 0                  D <= 2p - 1, refined below after normalizing
//                            to s1^2 + λ s2 + μ s1.
//
// Witness constructions scan for a parameter rather than replaying the
// existence arguments; each scan is O(p) and guaranteed to terminate.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "davenport/errors.hpp"
#include "davenport/modp.hpp"
#include "davenport/phi.hpp"
#include "davenport/search.hpp"
#include "davenport/sequence.hpp"
#include "davenport/zero_free.hpp"

namespace davenport {

// Stable provenance labels.
namespace label {
inline constexpr const char* kThm21i = "thm2.1(i)";
inline constexpr const char* kThm21ii = "thm2.1(ii)";
inline constexpr const char* kThm21iii = "thm2.1(iii)";
inline constexpr const char* kThm21iv = "thm2.1(iv)";
inline constexpr const char* kLem33 = "lem3.3";
inline constexpr const char* kLem34 = "lem3.4";
inline constexpr const char* kLem43 = "lem4.3";
inline constexpr const char* kThm46 = "thm4.6";
inline constexpr const char* kThm48 = "thm4.8-conditional";
inline constexpr const char* kCor51 = "cor5.1";
}  // namespace label

struct ClosedForm {
  std::uint32_t d_value = 1;
  std::string provenance;
  std::vector<MultisetSeq> members;  // all of M(phi, p), canonical order, duplicate-free
};

namespace detail {

inline std::vector<MultisetSeq> canonical(std::vector<MultisetSeq> seqs) {
  std::sort(seqs.begin(), seqs.end());
  seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
  return seqs;
}

}  // namespace detail

inline std::optional<ClosedForm> closed_form(const QuadPhi& phi) {
  const Prime p = phi.prime();
  const std::uint32_t n = p.value();
  const residue a = phi.a();
  const residue b = phi.b();
  const residue c = phi.c();

  if (a == 0) {
    // phi is additive in f(u) = b u^2 + c u; f(u) = f(v) iff v ∈ {u, w - u}.
    const residue w = p.neg(p.mul(c, inverse(b, p)));
    std::vector<MultisetSeq> m;
    for (residue u = 1; u < n; ++u) {
      if (u == w) continue;
      const residue partner = p.sub(w, u);
      for (std::uint32_t alpha = 0; alpha <= n - 1; ++alpha) {
        MultisetSeq s(p);
        if (partner == u) {
          s.set(u, n - 1);
        } else {
          if (alpha > 0) s.set(u, alpha);
          if (alpha < n - 1) s.set(partner, n - 1 - alpha);
        }
        m.push_back(std::move(s));
      }
    }
    return ClosedForm{n, label::kThm21i, detail::canonical(std::move(m))};
  }

  if (b == 0 && c == 0) {
    std::vector<MultisetSeq> m;
    for (residue u = 1; u < n; ++u) m.push_back(MultisetSeq(p).add(u, n - 1));
    return ClosedForm{n, label::kThm21ii, detail::canonical(std::move(m))};
  }

  if (b == 0) {
    const residue u = p.mul(c, inverse(a, p));
    std::vector<MultisetSeq> m;
    m.push_back(MultisetSeq(p).add(u, n - 2));
    return ClosedForm{n - 1, label::kThm21iii, std::move(m)};
  }

  const residue lambda = phi.lambda();
  const residue mu = phi.mu();
  if (lambda == n - 1 && mu == 0) {
    // phi([u]) = u^2 - u^2 = 0 for every u.
    return ClosedForm{1, label::kLem33, {MultisetSeq(p)}};
  }
  if (n == 3 && mu != 0) {
    const residue twice_mu = p.mul(2, mu);
    if (lambda == 1) return ClosedForm{3, label::kLem43, {MultisetSeq(p).add(twice_mu, 2)}};
    return ClosedForm{4, label::kLem43, {MultisetSeq(p).add(mu, 2).add(twice_mu, 1)}};
  }
  return std::nullopt;
}

/// Membership in M(phi, p) for the classes closed_form answers, decided from
/// the characterization rather than by generating the set.
inline bool closed_form_admits(const QuadPhi& phi, const ClosedForm& form, const MultisetSeq& seq) {
  if (seq.length() + 1 != form.d_value || seq.count(0) > 0) return false;
  const Prime p = phi.prime();
  const auto support = seq.support();
  if (form.provenance == label::kThm21i) {
    const residue w = p.neg(p.mul(phi.c(), inverse(phi.b(), p)));
    if (std::find(support.begin(), support.end(), w) != support.end()) return false;
    if (support.size() == 1) return true;
    return support.size() == 2 && p.add(support[0], support[1]) == w;
  }
  if (form.provenance == label::kThm21ii) return support.size() == 1;
  return std::find(form.members.begin(), form.members.end(), seq) != form.members.end();
}

/// t ∉ {0, 1} with Δ(t) = (2t + λ)^2 - 4(λ + 1)t^2 a non-residue; then
/// [1]^(p-λ-1) [t] is zero-free under s1^2 + λ s2.
struct LambdaWitness {
  residue t;
  MultisetSeq seq;
};

inline LambdaWitness construct_lambda_witness(Prime p, residue lambda) {
  const std::uint32_t n = p.value();
  if (lambda < 1 || lambda > n - 2) throw domain_error("lambda witness needs 1 <= lambda <= p-2");
  const QuadPhi phi(p, 1, lambda, 0);
  for (residue t = 2; t < n; ++t) {
    const residue lin = p.add(p.mul(2, t), lambda);
    const residue delta = p.sub(p.mul(lin, lin), p.mul(p.mul(4, p.add(lambda, 1)), p.mul(t, t)));
    if (legendre(delta, p) != -1) continue;
    MultisetSeq seq(p);
    seq.add(1, n - lambda - 1).add(t, 1);
    if (!is_zero_free(phi, seq)) {
      throw internal_consistency_error("lambda witness " + seq.to_string() + " is not zero-free");
    }
    return {t, std::move(seq)};
  }
  throw internal_consistency_error("no t with non-residue discriminant for p=" + std::to_string(n));
}

/// Least u in [1, p-1] with -u(λu + μ) a quadratic non-residue.
inline residue find_u_star(const QuadPhi& phi) {
  const Prime p = phi.prime();
  if (p.value() < 5) throw domain_error("u* is guaranteed only for p >= 5");
  const residue lambda = phi.lambda();
  const residue mu = phi.mu();
  if (lambda == 0 || mu == 0) throw domain_error("u* needs lambda*mu != 0");
  for (residue u = 1; u < p.value(); ++u) {
    const residue v = p.neg(p.mul(u, p.add(p.mul(lambda, u), mu)));
    if (legendre(v, p) == -1) return u;
  }
  throw internal_consistency_error("no u* found for " + phi.to_string());
}

/// Residue-class lower bound for s1^2 + s2 + s1, or nullopt if p hits no class.
inline std::optional<std::uint32_t> congruence_lower_bound(Prime p) {
  const std::uint32_t n = p.value();
  auto plus_minus = [n](std::uint32_t m, std::uint32_t r) { return n % m == r || n % m == m - r; };
  if (plus_minus(120, 1) || plus_minus(120, 49)) return n + 6;
  // p+4 needs 2 and 3 to be residues too, which p = ±1 (mod 60) alone does not give (p = 59).
  if (plus_minus(60, 1) && plus_minus(24, 1)) return n + 4;
  if (plus_minus(24, 1)) return n + 2;
  return std::nullopt;
}

enum class Hypothesis { unchecked, holds, fails };

inline const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::holds:
      return "holds";
    case Hypothesis::fails:
      return "fails";
    default:
      return "unchecked";
  }
}

struct LowerBound {
  std::uint32_t value;
  std::string provenance;
  std::optional<MultisetSeq> witness;
};

struct UpperBound {
  std::uint32_t value;
  std::string provenance;
  bool conditional = false;
  Hypothesis status = Hypothesis::unchecked;

  [[nodiscard]] bool usable() const noexcept { return !conditional || status == Hypothesis::holds; }
};

struct BoundsReport {
  std::vector<LowerBound> lower;
  std::vector<UpperBound> upper;
  std::uint32_t best_lower = 1;
  std::uint32_t best_upper = 0;
};

inline std::vector<UpperBound> upper_bounds(const QuadPhi& phi) {
  std::vector<UpperBound> out;
  const Prime p = phi.prime();
  const std::uint32_t n = p.value();
  if (phi.a() == 0 || phi.b() == 0) return out;
  out.push_back({2 * n - 1, label::kThm21iv});

  const residue lambda = phi.lambda();
  const residue mu = phi.mu();
  if (mu == 0 && n >= 5 && (lambda == n - 2 || lambda == n - 3)) {
    // Any k-term geometric progression a, aβ, ..., aβ^(k-1) with β of order k
    // has s1 = s2 = 0, and the singleton caps are 1 (λ = p-2) or 2 (λ = p-3).
    const std::uint32_t k = smallest_divisor_above_two(p);
    const std::uint32_t per_coset = lambda == n - 2 ? k - 1 : 2 * (k - 1);
    out.push_back({per_coset * ((n - 1) / k) + 1, label::kLem34});
  }
  // At p = 3 the bound fails: [2]^2 [1] is zero-free for λ = μ = 2 and holds [ω0]^2.
  if (mu != 0 && n >= 5) out.push_back({(n - 1) + (n - 1) / 2, label::kThm48, true});
  return out;
}

inline std::vector<LowerBound> lower_bounds(const QuadPhi& phi) {
  std::vector<LowerBound> out;
  const Prime p = phi.prime();
  const std::uint32_t n = p.value();
  if (phi.a() == 0 || phi.b() == 0) return out;
  const residue lambda = phi.lambda();
  const residue mu = phi.mu();

  auto checked = [&](std::uint32_t value, const char* provenance, MultisetSeq witness) {
    if (witness.length() + 1 != value || !is_zero_free(phi, witness)) {
      throw internal_consistency_error(std::string(provenance) + " witness " + witness.to_string() +
                                       " fails for " + phi.to_string());
    }
    out.push_back({value, provenance, std::move(witness)});
  };

  if (mu == 0) {
    if (lambda >= 1 && lambda <= n - 2) {
      checked(n - lambda + 1, label::kLem33, construct_lambda_witness(p, lambda).seq);
    }
    return out;
  }
  if (n < 5) return out;

  const std::uint32_t s = consecutive_qr_run(p);
  MultisetSeq witness(p);
  witness.add(omega0(phi), n - 1).add(find_u_star(phi), s);
  checked(n + s, label::kThm46, std::move(witness));
  if (lambda == 1 && mu == 1) {
    if (auto bound = congruence_lower_bound(p)) out.push_back({*bound, label::kCor51, std::nullopt});
  }
  return out;
}

/// Everything known about D(phi, p) from theory. An enumerating search report,
/// when given, settles the hypothesis of the conditional bound.
inline BoundsReport bounds(const QuadPhi& phi, const SearchReport* report = nullptr) {
  BoundsReport r;
  if (auto form = closed_form(phi)) {
    r.lower.push_back({form->d_value, form->provenance, form->members.front()});
    r.upper.push_back({form->d_value, form->provenance});
  }
  for (auto& lb : lower_bounds(phi)) r.lower.push_back(std::move(lb));
  for (auto& ub : upper_bounds(phi)) r.upper.push_back(std::move(ub));

  if (report != nullptr && report->extremal_count) {
    for (auto& ub : r.upper) {
      if (ub.conditional) ub.status = omega_hypothesis_holds(phi, *report) ? Hypothesis::holds : Hypothesis::fails;
    }
  }

  for (const auto& lb : r.lower) r.best_lower = std::max(r.best_lower, lb.value);
  r.best_upper = 2 * phi.prime().value() - 1;
  for (const auto& ub : r.upper) {
    if (ub.usable()) r.best_upper = std::min(r.best_upper, ub.value);
  }
  return r;
}

}  // namespace davenport
