#ifndef SHIFTREP_DECIDE_HPP_
#define SHIFTREP_DECIDE_HPP_

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "shiftrep/error.hpp"
#include "shiftrep/graph.hpp"
#include "shiftrep/orientation.hpp"

namespace shiftrep {

// Directs every edge from its earlier endpoint in `order` to its later one.
inline Orientation orientation_from_ordering(const LabeledGraph& g,
                                             const std::vector<VertexLabel>& order) {
  if (order.size() != g.size()) {
    throw ParameterError("ordering has " + std::to_string(order.size()) + " entries for " +
                         std::to_string(g.size()) + " vertices");
  }
  std::vector<std::size_t> rank(g.size(), g.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto id = g.find(order[i]);
    if (!id) throw ParameterError("ordering names unknown vertex " + order[i].to_string());
    if (rank[*id] != g.size()) {
      throw ParameterError("ordering repeats vertex " + order[i].to_string());
    }
    rank[*id] = i;
  }
  std::vector<IndexPair> arcs;
  arcs.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) {
    arcs.emplace_back(rank[a] < rank[b] ? IndexPair{a, b} : IndexPair{b, a});
  }
  return Orientation(g, arcs);
}

enum class Verdict { kRepresentable, kNonRepresentable, kUnknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kRepresentable:
      return "representable";
    case Verdict::kNonRepresentable:
      return "non-representable";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

using OrderingCount = unsigned __int128;

inline std::string to_decimal(OrderingCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

inline OrderingCount factorial(std::size_t n) {
  OrderingCount f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct SearchStats {
  std::uint64_t orderings_examined = 0;  // complete orderings reached
  std::uint64_t nodes = 0;               // prefix extensions
  std::uint64_t prunes = 0;
  OrderingCount pruned_orderings = 0;    // sum of pruned subtree sizes
  double elapsed_ms = 0;

  // Orderings accounted for; equals n! exactly when the tree was exhausted.
  [[nodiscard]] OrderingCount covered() const { return orderings_examined + pruned_orderings; }
};

struct Decision {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Orientation> witness;
  std::vector<VertexLabel> witness_order;
  SearchStats stats;
  bool witness_deterministic = true;
};

struct DecideOptions {
  std::size_t max_vertices = 11;
  bool allow_large = false;
  double max_seconds = 0;       // 0: no time limit
  std::uint64_t max_nodes = 0;  // 0: no node limit
  unsigned workers = 1;
  bool prune = true;
};

// Beyond this the bitmask state and exact coverage counts no longer fit.
inline constexpr std::size_t kDecideHardLimit = 32;

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t v) { return Mask{1} << v; }

// Depth-first search over vertex orderings below a fixed first vertex.
class OrderingSearch {
 public:
  OrderingSearch(const LabeledGraph& g, const DecideOptions& options,
                 std::chrono::steady_clock::time_point deadline, bool has_deadline,
                 std::atomic<bool>& stop, std::atomic<std::uint64_t>& shared_nodes)
      : g_(g),
        n_(g.size()),
        options_(options),
        deadline_(deadline),
        has_deadline_(has_deadline),
        stop_(stop),
        shared_nodes_(shared_nodes),
        adj_(n_, 0),
        reach_(n_, 0),
        subtree_(n_ + 1) {
    for (const auto& [a, b] : g.edges()) {
      adj_[a] |= bit(b);
      adj_[b] |= bit(a);
    }
    for (std::size_t d = 0; d <= n_; ++d) subtree_[d] = factorial(n_ - d);
  }

  // Returns true when a semi-transitive ordering starting at `first` exists.
  bool run_from(VertexId first) {
    order_.clear();
    std::fill(reach_.begin(), reach_.end(), 0);
    placed_ = 0;
    return place(first);
  }

  [[nodiscard]] const SearchStats& stats() const { return stats_; }
  [[nodiscard]] const std::vector<VertexId>& order() const { return order_; }
  [[nodiscard]] bool interrupted() const { return interrupted_; }

 private:
  bool out_of_budget() {
    if (stop_.load(std::memory_order_relaxed)) return true;
    const std::uint64_t total = shared_nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options_.max_nodes != 0 && total > options_.max_nodes) return true;
    if (has_deadline_ && (stats_.nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      return true;
    }
    return false;
  }

  // Adds v as the new last (sink) vertex. Any new shortcut has its chord
  // u -> v for an in-neighbour u of v, so only those arcs are inspected.
  bool sink_is_consistent(VertexId v, Mask in) {
    Mask ancestors = in;
    for (Mask rest = placed_; rest != 0; rest &= rest - 1) {
      const auto x = static_cast<VertexId>(std::countr_zero(rest));
      if (reach_[x] & in) ancestors |= bit(x);
    }
    for (Mask rest = in; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<VertexId>(std::countr_zero(rest));
      const Mask between = reach_[u] & ancestors;
      if ((between & ~adj_[u]) != 0 || (between & ~in) != 0) return false;
      for (Mask inner = between; inner != 0; inner &= inner - 1) {
        const auto w = static_cast<VertexId>(std::countr_zero(inner));
        if ((reach_[w] & between & ~adj_[w]) != 0) return false;
      }
    }
    return true;
  }

  bool place(VertexId v) {
    if (out_of_budget()) {
      interrupted_ = true;
      return false;
    }
    ++stats_.nodes;
    const Mask in = adj_[v] & placed_;
    const std::size_t depth = order_.size() + 1;

    if (options_.prune && !sink_is_consistent(v, in)) {
      ++stats_.prunes;
      stats_.pruned_orderings += subtree_[depth];
      return false;
    }

    std::vector<Mask> saved;
    saved.reserve(depth);
    for (Mask rest = placed_; rest != 0; rest &= rest - 1) {
      const auto x = static_cast<VertexId>(std::countr_zero(rest));
      saved.push_back(reach_[x]);
      if ((reach_[x] & in) != 0 || (in & bit(x)) != 0) reach_[x] |= bit(v);
    }
    placed_ |= bit(v);
    order_.push_back(v);

    bool found = false;
    if (depth == n_) {
      ++stats_.orderings_examined;
      found = options_.prune || full_ordering_is_semi_transitive();
    } else {
      for (VertexId next = 0; next < n_ && !found && !interrupted_; ++next) {
        if ((placed_ & bit(next)) == 0) found = place(next);
      }
    }
    if (found) return true;

    order_.pop_back();
    placed_ &= ~bit(v);
    std::size_t i = 0;
    for (Mask rest = placed_; rest != 0; rest &= rest - 1) {
      reach_[static_cast<VertexId>(std::countr_zero(rest))] = saved[i++];
    }
    return false;
  }

  // Unpruned mode: every complete ordering goes through the general checker.
  bool full_ordering_is_semi_transitive() const {
    std::vector<VertexLabel> labels;
    for (VertexId v : order_) labels.push_back(g_.label(v));
    return is_semi_transitive(orientation_from_ordering(g_, labels));
  }

  const LabeledGraph& g_;
  std::size_t n_;
  const DecideOptions& options_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  std::atomic<bool>& stop_;
  std::atomic<std::uint64_t>& shared_nodes_;
  std::vector<Mask> adj_;
  std::vector<Mask> reach_;
  std::vector<OrderingCount> subtree_;
  Mask placed_ = 0;
  std::vector<VertexId> order_;
  SearchStats stats_;
  bool interrupted_ = false;
};

inline void accumulate(SearchStats& total, const SearchStats& part) {
  total.orderings_examined += part.orderings_examined;
  total.nodes += part.nodes;
  total.prunes += part.prunes;
  total.pruned_orderings += part.pruned_orderings;
}

}  // namespace detail

// Decides word-representability by searching for a vertex ordering whose
// induced acyclic orientation is semi-transitive. Every acyclic orientation
// arises from some ordering, so exhausting the ordering tree proves that no
// semi-transitive orientation exists. A shortcut in a prefix persists in all
// extensions, which justifies pruning the subtree.
inline Decision decide_word_representable(const LabeledGraph& g, DecideOptions options = {}) {
  const auto started = std::chrono::steady_clock::now();
  if (g.size() > kDecideHardLimit) {
    throw LimitError("decide: " + std::to_string(g.size()) +
                     " vertices exceeds the hard limit of " + std::to_string(kDecideHardLimit));
  }
  if (g.size() > options.max_vertices && !options.allow_large) {
    throw LimitError("decide: " + std::to_string(g.size()) + " vertices exceeds the limit of " +
                     std::to_string(options.max_vertices) + "; pass --allow-large to override");
  }

  Decision decision;
  decision.witness_deterministic = options.workers <= 1;
  auto finish = [&] {
    decision.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return decision;
  };
  if (g.size() == 0) {
    decision.verdict = Verdict::kRepresentable;
    decision.witness = Orientation(g, std::span<const IndexPair>{});
    return finish();
  }

  const bool has_deadline = options.max_seconds > 0;
  const auto deadline =
      started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(options.max_seconds));
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> shared_nodes{0};
  std::atomic<std::size_t> next_first{0};
  std::mutex mutex;
  std::optional<std::pair<VertexId, std::vector<VertexId>>> best;
  bool interrupted = false;

  auto worker = [&] {
    detail::OrderingSearch search(g, options, deadline, has_deadline, stop, shared_nodes);
    bool local_interrupted = false;
    std::optional<std::pair<VertexId, std::vector<VertexId>>> local_best;
    while (!stop.load()) {
      const std::size_t first = next_first.fetch_add(1);
      if (first >= g.size()) break;
      if (search.run_from(first)) {
        local_best.emplace(first, search.order());
        stop.store(true);
        break;
      }
      if (search.interrupted()) {
        local_interrupted = true;
        break;
      }
    }
    std::lock_guard lock(mutex);
    detail::accumulate(decision.stats, search.stats());
    interrupted = interrupted || local_interrupted;
    if (local_best && (!best || local_best->first < best->first)) best = std::move(local_best);
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  if (best) {
    decision.verdict = Verdict::kRepresentable;
    for (VertexId v : best->second) decision.witness_order.push_back(g.label(v));
    decision.witness = orientation_from_ordering(g, decision.witness_order);
    if (!is_semi_transitive(*decision.witness)) {
      throw std::logic_error("decide: witness orientation failed the semi-transitivity check");
    }
  } else if (!interrupted && decision.stats.covered() == factorial(g.size())) {
    decision.verdict = Verdict::kNonRepresentable;
  } else {
    decision.verdict = Verdict::kUnknown;
  }
  return finish();
}

}  // namespace shiftrep

#endif  // SHIFTREP_DECIDE_HPP_
