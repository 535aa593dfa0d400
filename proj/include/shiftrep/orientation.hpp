#ifndef SHIFTREP_ORIENTATION_HPP_
#define SHIFTREP_ORIENTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <stdexcept>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "shiftrep/error.hpp"
#include "shiftrep/families.hpp"
#include "shiftrep/graph.hpp"

namespace shiftrep {

// A direction for every edge of a base graph. The digraph shares the base
// graph's vertex set; each edge appears as exactly one arc.
class Orientation {
 public:
  Orientation() = default;

  Orientation(LabeledGraph base, std::span<const IndexPair> arcs)
      : base_(std::move(base)), digraph_(Digraph::from_ids(base_.vertices(), arcs)) {
    if (digraph_.arc_count() != base_.edge_count()) {
      throw ParameterError("orientation has " + std::to_string(digraph_.arc_count()) +
                           " arcs for " + std::to_string(base_.edge_count()) + " edges");
    }
    for (const auto& [a, b] : digraph_.arcs()) {
      if (!base_.adjacent(a, b)) {
        throw ParameterError("arc " + base_.label(a).to_string() + "->" +
                             base_.label(b).to_string() + " is not an edge");
      }
      if (digraph_.has_arc(b, a)) {
        throw ParameterError("edge " + base_.label(a).to_string() + "-" +
                             base_.label(b).to_string() + " oriented both ways");
      }
    }
  }

  Orientation(LabeledGraph base, std::span<const LabelPair> arcs)
      : Orientation(base, to_ids(base, arcs)) {}

  // The orientation of underlying_graph(d); d must have no antiparallel arcs.
  static Orientation of(const Digraph& d) {
    return Orientation(underlying_graph(d), d.arcs());
  }

  [[nodiscard]] const LabeledGraph& base() const noexcept { return base_; }
  [[nodiscard]] const Digraph& digraph() const noexcept { return digraph_; }
  [[nodiscard]] std::size_t size() const noexcept { return base_.size(); }
  [[nodiscard]] const std::vector<IndexPair>& arcs() const noexcept {
    return digraph_.arcs();
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.base_ == b.base_ && a.digraph_ == b.digraph_;
  }

 private:
  static std::vector<IndexPair> to_ids(const LabeledGraph& g,
                                       std::span<const LabelPair> arcs) {
    std::vector<IndexPair> ids;
    ids.reserve(arcs.size());
    for (const auto& [a, b] : arcs) ids.emplace_back(g.id(a), g.id(b));
    return ids;
  }

  LabeledGraph base_;
  Digraph digraph_;
};

inline Orientation reverse_orientation(const Orientation& o) {
  std::vector<IndexPair> arcs;
  arcs.reserve(o.arcs().size());
  for (const auto& [a, b] : o.arcs()) arcs.emplace_back(b, a);
  return Orientation(o.base(), arcs);
}

// Kahn's algorithm: repeatedly remove in-degree-zero vertices.
inline bool is_acyclic(const Digraph& d) {
  std::vector<std::size_t> indegree(d.size());
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < d.size(); ++v) {
    indegree[v] = d.in_neighbors(v).size();
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId w : d.out_neighbors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == d.size();
}

inline bool is_acyclic(const Orientation& o) { return is_acyclic(o.digraph()); }

enum class ViolationKind { kNonAdjacent, kWrongDirection };

// A directed path whose endpoints are joined by an arc (the chord) but whose
// vertices do not induce a transitive tournament. `violation` is a pair on
// the path, earlier vertex first, that lacks the forward arc.
struct ShortcutWitness {
  std::vector<VertexLabel> path;
  LabelPair chord;
  LabelPair violation;
  ViolationKind kind = ViolationKind::kNonAdjacent;
};

struct NaiveCheckOptions {
  std::size_t max_vertices = 12;
};

namespace detail {

inline void require_acyclic(const Orientation& o, const char* who) {
  if (!is_acyclic(o)) throw ParameterError(std::string(who) + ": orientation has a directed cycle");
}

inline ShortcutWitness make_witness(const Orientation& o, const std::vector<VertexId>& path,
                                    VertexId a, VertexId b) {
  const auto& d = o.digraph();
  ShortcutWitness w;
  for (VertexId v : path) w.path.push_back(d.label(v));
  w.chord = {d.label(path.front()), d.label(path.back())};
  w.violation = {d.label(a), d.label(b)};
  w.kind = d.has_arc(b, a) ? ViolationKind::kWrongDirection : ViolationKind::kNonAdjacent;
  return w;
}

struct NaiveSearch {
  const Orientation& o;
  std::vector<VertexId> path;
  std::vector<bool> on_path;
  std::optional<ShortcutWitness> found;

  void check_path() {
    const auto& d = o.digraph();
    if (path.size() < 3 || !d.has_arc(path.front(), path.back())) return;
    for (std::size_t i = 0; i < path.size(); ++i) {
      for (std::size_t j = i + 1; j < path.size(); ++j) {
        if (!d.has_arc(path[i], path[j])) {
          found = make_witness(o, path, path[i], path[j]);
          return;
        }
      }
    }
  }

  void extend() {
    check_path();
    if (found) return;
    for (VertexId next : o.digraph().out_neighbors(path.back())) {
      if (on_path[next]) continue;
      path.push_back(next);
      on_path[next] = true;
      extend();
      on_path[next] = false;
      path.pop_back();
      if (found) return;
    }
  }
};

}  // namespace detail

// Reference checker: enumerates every directed path on >= 3 vertices. Exponential;
// only meant as an oracle for small inputs.
inline std::optional<ShortcutWitness> find_shortcut_naive(const Orientation& o,
                                                          NaiveCheckOptions options = {}) {
  if (o.size() > options.max_vertices) {
    throw LimitError("find_shortcut_naive: " + std::to_string(o.size()) +
                     " vertices exceeds the limit of " + std::to_string(options.max_vertices));
  }
  detail::require_acyclic(o, "find_shortcut_naive");
  detail::NaiveSearch search{o, {}, std::vector<bool>(o.size(), false), std::nullopt};
  for (VertexId start = 0; start < o.size() && !search.found; ++start) {
    search.path = {start};
    search.on_path[start] = true;
    search.extend();
    search.on_path[start] = false;
  }
  return search.found;
}

namespace detail {

using Bitset = boost::dynamic_bitset<>;

// Descendant sets (strict) of every vertex of an acyclic digraph.
inline std::vector<Bitset> descendants(const Digraph& d) {
  const std::size_t n = d.size();
  std::vector<std::size_t> indegree(n);
  std::vector<VertexId> topo;
  for (VertexId v = 0; v < n; ++v) {
    indegree[v] = d.in_neighbors(v).size();
    if (indegree[v] == 0) topo.push_back(v);
  }
  for (std::size_t i = 0; i < topo.size(); ++i) {
    for (VertexId w : d.out_neighbors(topo[i])) {
      if (--indegree[w] == 0) topo.push_back(w);
    }
  }
  std::vector<Bitset> desc(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (VertexId w : d.out_neighbors(*it)) {
      desc[*it].set(w);
      desc[*it] |= desc[w];
    }
  }
  return desc;
}

// Shortest path from `from` to `to` along arcs, smallest vertex ids first on
// ties. Requires `to` reachable from `from`.
inline std::vector<VertexId> directed_path(const Digraph& d, VertexId from, VertexId to) {
  std::vector<VertexId> parent(d.size(), d.size());
  std::deque<VertexId> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] == d.size()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : d.out_neighbors(v)) {
      if (parent[w] != d.size()) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::vector<VertexId> join_paths(std::vector<VertexId> head,
                                        const std::vector<VertexId>& tail) {
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

}  // namespace detail

// Polynomial checker. For each arc u->v let S be the vertices strictly
// between u and v (reachable from u, reaching v). The orientation has a
// shortcut over u->v iff some w in S lacks u->w or w->v, or some w1 in S
// reaching w2 in S lacks w1->w2. Arcs are scanned in lexicographic order.
inline std::optional<ShortcutWitness> find_shortcut_fast(const Orientation& o) {
  detail::require_acyclic(o, "find_shortcut_fast");
  const auto& d = o.digraph();
  const std::size_t n = d.size();
  const auto desc = detail::descendants(d);
  std::vector<detail::Bitset> out(n, detail::Bitset(n));
  std::vector<detail::Bitset> anc(n, detail::Bitset(n));
  for (const auto& [a, b] : d.arcs()) out[a].set(b);
  for (VertexId v = 0; v < n; ++v) {
    for (auto w = desc[v].find_first(); w != detail::Bitset::npos; w = desc[v].find_next(w)) {
      anc[w].set(v);
    }
  }

  for (const auto& [u, v] : d.arcs()) {
    const detail::Bitset between = desc[u] & anc[v];
    if (between.none()) continue;
    auto path_via = [&](VertexId x) {
      return detail::join_paths(detail::directed_path(d, u, x), detail::directed_path(d, x, v));
    };
    if (!between.is_subset_of(out[u])) {
      VertexId w = (between - out[u]).find_first();
      return detail::make_witness(o, path_via(w), u, w);
    }
    for (auto w = between.find_first(); w != detail::Bitset::npos; w = between.find_next(w)) {
      if (!d.has_arc(w, v)) return detail::make_witness(o, path_via(w), w, v);
    }
    for (auto w1 = between.find_first(); w1 != detail::Bitset::npos;
         w1 = between.find_next(w1)) {
      const detail::Bitset later = desc[w1] & between;
      if (later.is_subset_of(out[w1])) continue;
      VertexId w2 = (later - out[w1]).find_first();
      auto path = detail::join_paths(
          detail::join_paths(detail::directed_path(d, u, w1), detail::directed_path(d, w1, w2)),
          detail::directed_path(d, w2, v));
      return detail::make_witness(o, path, w1, w2);
    }
  }
  return std::nullopt;
}

inline bool is_semi_transitive(const Orientation& o) {
  return is_acyclic(o) && !find_shortcut_fast(o);
}

// The explicit orientation of G_m(n,k): u -> v whenever v_i = u_{i+m} for all
// 1 <= i <= k-m. Every arc points to the lexicographically larger tuple. For
// each edge exactly one of the two shift conditions must hold; this is
// checked rather than assumed.
inline Orientation orient_m_shift(int n, int k, int m) {
  LabeledGraph g = m_shift_graph(n, k, m);
  const auto shift = static_cast<std::size_t>(m);
  std::vector<IndexPair> arcs;
  arcs.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) {
    const auto& u = g.label(a).values();
    const auto& v = g.label(b).values();
    const bool forward = detail::is_shift_of(u, v, shift);
    const bool backward = detail::is_shift_of(v, u, shift);
    if (forward == backward) {
      throw std::logic_error("orient_m_shift: edge " + g.label(a).to_string() + "-" +
                             g.label(b).to_string() +
                             " satisfies both or neither shift condition");
    }
    arcs.emplace_back(forward ? IndexPair{a, b} : IndexPair{b, a});
  }
  return Orientation(std::move(g), arcs);
}

}  // namespace shiftrep

#endif  // SHIFTREP_ORIENTATION_HPP_
