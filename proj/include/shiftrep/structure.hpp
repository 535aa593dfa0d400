#ifndef SHIFTREP_STRUCTURE_HPP_
#define SHIFTREP_STRUCTURE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftrep/error.hpp"
#include "shiftrep/graph.hpp"

namespace shiftrep {

inline LabeledGraph induced_subgraph(const LabeledGraph& g,
                                     const std::set<VertexLabel>& keep) {
  std::vector<VertexId> ids;
  ids.reserve(keep.size());
  for (const auto& l : keep) {
    auto id = g.find(l);
    if (!id) throw ParameterError("induced_subgraph: unknown label " + l.to_string());
    ids.push_back(*id);
  }
  // keep is sorted, so ids are sorted and position i in ids is the new id i.
  std::vector<IndexPair> edges;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.adjacent(ids[i], ids[j])) edges.emplace_back(i, j);
    }
  }
  return LabeledGraph::from_ids({keep.begin(), keep.end()}, edges);
}

inline bool is_triangle_free(const LabeledGraph& g) {
  for (const auto& [a, b] : g.edges()) {
    for (VertexId c : g.neighbors(b)) {
      if (c > b && g.adjacent(a, c)) return false;
    }
  }
  return true;
}

// Length of a shortest odd cycle, or nullopt for bipartite graphs.
//
// Breadth-first search over (vertex, parity) states from every start s; the
// first time (s, odd) is reached gives the shortest odd closed walk through s.
// Any odd closed walk contains an odd cycle no longer than itself, and a
// shortest odd cycle is such a walk, so the minimum over s is the odd girth.
inline std::optional<int> odd_girth(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::optional<int> best;
  std::vector<int> dist(2 * n);
  std::deque<std::size_t> queue;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[2 * s] = 0;
    queue.push_back(2 * s);
    while (!queue.empty()) {
      std::size_t state = queue.front();
      queue.pop_front();
      if (best && dist[state] + 1 >= *best) break;
      VertexId v = state / 2;
      std::size_t parity = state % 2;
      for (VertexId w : g.neighbors(v)) {
        std::size_t next = 2 * w + (1 - parity);
        if (dist[next] >= 0) continue;
        dist[next] = dist[state] + 1;
        queue.push_back(next);
      }
      if (dist[2 * s + 1] >= 0) break;
    }
    int walk = dist[2 * s + 1];
    if (walk > 0 && (!best || walk < *best)) best = walk;
  }
  return best;
}

struct ColoringOptions {
  std::size_t max_vertices = 20;
};

namespace detail {

inline bool extend_coloring(const LabeledGraph& g, const std::vector<VertexId>& order,
                            std::size_t pos, int colors, int used,
                            std::vector<int>& color) {
  if (pos == order.size()) return true;
  VertexId v = order[pos];
  // New colors are only introduced in increasing order (symmetry breaking).
  int limit = std::min(colors, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (VertexId w : g.neighbors(v)) {
      if (color[w] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (extend_coloring(g, order, pos + 1, colors, std::max(used, c + 1), color)) {
      return true;
    }
  }
  color[v] = -1;
  return false;
}

}  // namespace detail

// Exact chromatic number by backtracking over k = 1, 2, ...
inline int chromatic_number(const LabeledGraph& g, ColoringOptions options = {}) {
  if (g.size() > options.max_vertices) {
    throw LimitError("chromatic_number: graph has " + std::to_string(g.size()) +
                     " vertices, above the limit of " +
                     std::to_string(options.max_vertices) +
                     "; raise the vertex limit (--max-vertices) to proceed");
  }
  if (g.size() == 0) return 0;
  // Breadth-first order from high-degree vertices keeps constrained vertices
  // early in the search.
  std::vector<VertexId> order;
  std::vector<bool> seen(g.size(), false);
  std::vector<VertexId> by_degree(g.size());
  for (VertexId v = 0; v < g.size(); ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) {
    return g.neighbors(a).size() > g.neighbors(b).size();
  });
  for (VertexId root : by_degree) {
    if (seen[root]) continue;
    std::deque<VertexId> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<int> color(g.size(), -1);
  for (int k = 1;; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (detail::extend_coloring(g, order, 0, k, 0, color)) return k;
  }
}

}  // namespace shiftrep

#endif  // SHIFTREP_STRUCTURE_HPP_
