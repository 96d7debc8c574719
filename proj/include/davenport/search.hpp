#pragma once

// Exact D(phi, p) by depth-first branch and bound over multiplicity tables.
//
// Residues u = 1..p-1 are decided in ascending order, each multiplicity tried
// from its largest feasible value down to zero. Zero-freeness is hereditary,
// so a branch dies as soon as its reach set meets the zero locus. Every node
// recomputes, for each undecided residue w, the largest number of copies of w
// the current reach set tolerates; the sum of those caps bounds how long any
// completion can get. Caps only shrink with depth, so a child starts from its
// parent's caps.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "davenport/errors.hpp"
#include "davenport/phi.hpp"
#include "davenport/reach_set.hpp"
#include "davenport/sequence.hpp"
#include "davenport/zero_free.hpp"

namespace davenport {

inline constexpr std::uint32_t kDefaultSearchMaxPrime = 31;

struct SearchOptions {
  std::uint32_t max_p = kDefaultSearchMaxPrime;
  bool enumerate_extremal = false;
  std::uint32_t parallel_width = 0;  // 0 = sequential
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;
  // A known zero-free sequence; its length seeds the incumbent.
  std::optional<MultisetSeq> seed_witness;
  // A proved upper bound on D; lets a non-enumerating search stop early.
  std::optional<std::uint32_t> known_upper;
};

struct SearchReport {
  std::uint32_t d_value = 1;
  std::vector<MultisetSeq> extremal;  // canonical order; one witness when not enumerating
  std::optional<std::uint64_t> extremal_count;  // set only for enumerating runs
  bool certified = false;
  std::uint64_t nodes_visited = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// Thrown when a node or time budget runs out; carries the best-so-far.
class search_budget_exhausted : public resource_error {
 public:
  explicit search_budget_exhausted(SearchReport partial)
      : resource_error("search budget exhausted; D >= " + std::to_string(partial.d_value) + " not certified"),
        partial_(std::move(partial)) {}
  [[nodiscard]] const SearchReport& partial() const noexcept { return partial_; }

 private:
  SearchReport partial_;
};

namespace detail {

struct SearchShared {
  std::atomic<std::uint32_t> best{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint32_t stop_len = 0;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
  std::uint64_t node_limit = UINT64_MAX;
};

struct FrontierNode {
  residue level;
  std::uint32_t len;
  ReachSet reach;
  std::vector<std::uint32_t> caps;
  std::vector<std::uint32_t> mult;
};

class SearchWorker {
 public:
  SearchWorker(const QuadPhi& phi, const ZeroLocus& locus, bool enumerate, SearchShared& shared)
      : phi_(phi), locus_(locus), n_(phi.prime().value()), enumerate_(enumerate), shared_(shared),
        scratch_a_(phi.prime()), scratch_b_(phi.prime()), mult_(n_, 0) {
    chain_.reserve(n_ + 1);
    for (std::uint32_t v = 0; v <= n_; ++v) {
      chain_.emplace_back(v == 0 || v == n_ ? 0 : n_, ReachSet(phi.prime()));
      caps_.emplace_back(n_, 0);
    }
  }

  void run(const FrontierNode& node) {
    mult_ = node.mult;
    dfs(node.level, node.reach, node.len, node.caps.data());
  }

  // Walks the tree down to `split` and hands back the open nodes found there.
  std::vector<FrontierNode> expand_to(residue split, const std::vector<std::uint32_t>& root_caps) {
    split_ = split;
    frontier_.clear();
    ReachSet empty(phi_.prime());
    dfs(1, empty, 0, root_caps.data());
    split_ = 0;
    return std::move(frontier_);
  }

  void flush_nodes() {
    shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
    total_nodes_ += pending_nodes_;
    pending_nodes_ = 0;
  }

  [[nodiscard]] std::uint32_t best_len() const noexcept { return best_len_; }
  [[nodiscard]] const std::vector<MultisetSeq>& found() const noexcept { return found_; }

 private:
  [[nodiscard]] bool worth(std::uint64_t reachable) const noexcept {
    const std::uint32_t best = shared_.best.load(std::memory_order_relaxed);
    return enumerate_ ? reachable >= best : reachable > best;
  }

  bool should_halt() {
    if (shared_.stop.load(std::memory_order_relaxed) || shared_.budget_hit.load(std::memory_order_relaxed)) {
      return true;
    }
    if (++pending_nodes_ >= 1024) {
      flush_nodes();
      if (shared_.nodes.load(std::memory_order_relaxed) > shared_.node_limit ||
          std::chrono::steady_clock::now() > shared_.deadline) {
        shared_.budget_hit.store(true);
        return true;
      }
    }
    return false;
  }

  // Largest k <= limit with reach ⊕ [w]^k clear of the locus.
  std::uint32_t tolerated_copies(const ReachSet& reach, residue w, std::uint32_t limit) {
    const ReachSet* prev = &reach;
    ReachSet* bufs[2] = {&scratch_a_, &scratch_b_};
    std::uint32_t k = 0;
    while (k < limit) {
      ReachSet* next = bufs[k & 1U];
      if (next->assign_extended(*prev, w, &locus_)) break;
      prev = next;
      ++k;
    }
    return k;
  }

  void record(std::uint32_t len) {
    std::uint32_t best = shared_.best.load();
    if (enumerate_ ? len < best : len <= best) return;
    while (len > best && !shared_.best.compare_exchange_weak(best, len)) {
    }
    if (len > best_len_ || found_.empty()) {
      best_len_ = len;
      found_.clear();
    }
    if (len < best_len_) return;
    MultisetSeq seq(phi_.prime());
    for (residue u = 1; u < n_; ++u) {
      if (mult_[u] > 0) seq.set(u, mult_[u]);
    }
    if (enumerate_) {
      found_.push_back(std::move(seq));
    } else {
      found_.assign(1, std::move(seq));
    }
    if (!enumerate_ && len >= shared_.stop_len) shared_.stop.store(true);
  }

  void dfs(residue v, const ReachSet& reach, std::uint32_t len, const std::uint32_t* caps_in) {
    if (should_halt()) return;
    if (v == split_) {
      frontier_.push_back({v, len, reach, std::vector<std::uint32_t>(caps_in, caps_in + n_), mult_});
      return;
    }
    if (v == n_) {
      record(len);
      return;
    }

    std::uint64_t optimistic = 0;
    for (residue w = v; w < n_; ++w) optimistic += caps_in[w];
    if (!worth(len + optimistic)) return;

    std::uint32_t* caps = caps_[v].data();
    std::vector<ReachSet>& chain = chain_[v];

    std::uint32_t top = 0;
    const ReachSet* prev = &reach;
    while (top < caps_in[v]) {
      if (chain[top + 1].assign_extended(*prev, v, &locus_)) break;
      prev = &chain[++top];
    }
    caps[v] = top;
    optimistic -= caps_in[v] - top;
    if (!worth(len + optimistic)) return;

    for (residue w = v + 1; w < n_; ++w) {
      caps[w] = caps_in[w] == 0 ? 0 : tolerated_copies(reach, w, caps_in[w]);
      optimistic -= caps_in[w] - caps[w];
      if (!worth(len + optimistic)) return;
    }

    const std::uint64_t rest = optimistic - top;
    for (std::uint32_t k = top + 1; k-- > 0;) {
      if (!worth(len + k + rest)) break;
      mult_[v] = k;
      dfs(v + 1, k == 0 ? reach : chain[k], len + k, caps);
      if (shared_.stop.load(std::memory_order_relaxed) || shared_.budget_hit.load(std::memory_order_relaxed)) break;
    }
    mult_[v] = 0;
  }

  const QuadPhi& phi_;
  const ZeroLocus& locus_;
  std::uint32_t n_;
  bool enumerate_;
  SearchShared& shared_;
  ReachSet scratch_a_;
  ReachSet scratch_b_;
  std::vector<std::vector<ReachSet>> chain_;  // chain_[v][k]: reach after k copies of v
  std::vector<std::vector<std::uint32_t>> caps_;
  std::vector<std::uint32_t> mult_;
  residue split_ = 0;
  std::vector<FrontierNode> frontier_;

  std::uint32_t best_len_ = 0;
  std::vector<MultisetSeq> found_;
  std::uint64_t pending_nodes_ = 0;
  std::uint64_t total_nodes_ = 0;
};

}  // namespace detail

/// D(phi, p) = 1 + the maximum length of a phi-zero-free multiset over F_p.
/// With enumerate_extremal the report lists all of M(phi, p).
inline SearchReport max_zero_free(const QuadPhi& phi, const SearchOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const Prime p = phi.prime();
  const std::uint32_t n = p.value();
  if (n > opts.max_p) {
    throw domain_error("exact search limited to p <= " + std::to_string(opts.max_p));
  }
  if (opts.node_budget && *opts.node_budget == 0) throw domain_error("node budget must be positive");
  if (opts.time_budget && opts.time_budget->count() <= 0) throw domain_error("time budget must be positive");

  const ZeroLocus locus(phi);
  detail::SearchShared shared;
  // (0,0) lies on every locus, so a zero-free multiset is zero-sum free in
  // Z_p + Z_p and has length at most 2p - 2.
  shared.stop_len = 2 * n - 2;
  if (opts.known_upper) shared.stop_len = std::min(shared.stop_len, *opts.known_upper - 1);
  if (opts.node_budget) shared.node_limit = *opts.node_budget;
  if (opts.time_budget) shared.deadline = start + *opts.time_budget;

  std::optional<MultisetSeq> seed = opts.seed_witness;
  if (seed) {
    if (!is_zero_free(phi, *seed, locus)) throw domain_error("seed witness is not zero-free");
    shared.best = seed->length();
  }

  std::vector<std::uint32_t> root_caps(n, 0);
  for (residue u = 1; u < n; ++u) root_caps[u] = singleton_cap(phi, u);

  std::vector<std::unique_ptr<detail::SearchWorker>> workers;
  if (opts.parallel_width == 0) {
    workers.push_back(std::make_unique<detail::SearchWorker>(phi, locus, opts.enumerate_extremal, shared));
    detail::FrontierNode root{1, 0, ReachSet(p), root_caps, std::vector<std::uint32_t>(n, 0)};
    workers[0]->run(root);
    workers[0]->flush_nodes();
  } else {
    // Split after the first two residues; workers pull frontier nodes in order.
    detail::SearchWorker splitter(phi, locus, opts.enumerate_extremal, shared);
    const residue split = std::min<residue>(3, n);
    std::vector<detail::FrontierNode> frontier = splitter.expand_to(split, root_caps);
    splitter.flush_nodes();
    std::atomic<std::size_t> next{0};
    for (std::uint32_t i = 0; i < opts.parallel_width; ++i) {
      workers.push_back(std::make_unique<detail::SearchWorker>(phi, locus, opts.enumerate_extremal, shared));
    }
    std::vector<std::thread> threads;
    for (auto& worker : workers) {
      threads.emplace_back([&frontier, &next, w = worker.get()] {
        for (std::size_t i = next.fetch_add(1); i < frontier.size(); i = next.fetch_add(1)) w->run(frontier[i]);
        w->flush_nodes();
      });
    }
    for (auto& t : threads) t.join();
  }

  SearchReport report;
  std::uint32_t best = shared.best.load();
  std::vector<MultisetSeq> found;
  for (const auto& w : workers) {
    if (w->found().empty() || w->best_len() != best) continue;
    found.insert(found.end(), w->found().begin(), w->found().end());
  }
  if (found.empty() && seed && seed->length() == best) found.push_back(*seed);
  if (found.empty()) {
    throw internal_consistency_error("search finished without a witness of length " + std::to_string(best));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (!opts.enumerate_extremal) found.erase(found.begin() + 1, found.end());

  report.d_value = best + 1;
  if (opts.enumerate_extremal) report.extremal_count = found.size();
  report.extremal = std::move(found);
  report.nodes_visited = shared.nodes.load();
  report.certified = !shared.budget_hit.load();
  report.elapsed = std::chrono::steady_clock::now() - start;
  if (!report.certified) {
    report.extremal_count.reset();
    throw search_budget_exhausted(std::move(report));
  }
  return report;
}

/// True iff seq has length d_value - 1 and is zero-free.
inline bool verify_extremal(const QuadPhi& phi, const MultisetSeq& seq, std::uint32_t d_value) {
  if (d_value < 1) throw domain_error("D is at least 1");
  return seq.length() + 1 == d_value && is_zero_free(phi, seq);
}

/// omega0 = -mu / lambda for the normalized form s1^2 + lambda*s2 + mu*s1.
inline residue omega0(const QuadPhi& phi) {
  const Prime p = phi.prime();
  if (!phi.has_normal_form()) throw domain_error("omega0 needs a != 0");
  const residue lambda = phi.lambda();
  const residue mu = phi.mu();
  if (lambda == 0 || mu == 0) throw domain_error("omega0 needs lambda*mu != 0");
  return p.neg(p.mul(mu, inverse(lambda, p)));
}

/// Does some extremal sequence contain [omega0]^(p-1)?
inline bool omega_hypothesis_holds(const QuadPhi& phi, const SearchReport& report) {
  if (!report.extremal_count) throw domain_error("omega hypothesis needs an enumerating search report");
  const residue w = omega0(phi);
  const std::uint32_t full = phi.prime().value() - 1;
  return std::any_of(report.extremal.begin(), report.extremal.end(),
                     [&](const MultisetSeq& s) { return s.count(w) == full; });
}

}  // namespace davenport
