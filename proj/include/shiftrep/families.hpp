#ifndef SHIFTREP_FAMILIES_HPP_
#define SHIFTREP_FAMILIES_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "shiftrep/error.hpp"
#include "shiftrep/graph.hpp"
#include "shiftrep/structure.hpp"

// Generators for the graph families: shift and m-shift graphs, simplified
// de Bruijn graphs and their spread variant, complete graphs, transitive
// tournaments, line graphs and line digraphs. Every generator emits vertices
// in canonical label order.
namespace shiftrep {

// A strictly increasing k-tuple over {1..n}.
inline VertexLabel make_tuple_vertex(std::vector<int> entries, int n) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1 || entries[i] > n) {
      throw ParameterError("tuple entry " + std::to_string(entries[i]) +
                           " outside {1.." + std::to_string(n) + "}");
    }
    if (i > 0 && entries[i - 1] >= entries[i]) {
      throw ParameterError("tuple entries must be strictly increasing");
    }
  }
  return VertexLabel::tuple(std::move(entries));
}

// All strictly increasing k-tuples over {1..n} in lexicographic order.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t[i] = i + 1;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// All words of length k over {1..n} in lexicographic order.
inline std::vector<std::vector<int>> all_words(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(k), 1);
  while (true) {
    out.push_back(w);
    int i = k - 1;
    while (i >= 0 && w[i] == n) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

inline LabeledGraph complete_graph(int n) {
  if (n < 1) throw ParameterError("complete_graph: need n >= 1");
  std::vector<VertexLabel> vertices;
  std::vector<IndexPair> edges;
  for (int i = 1; i <= n; ++i) vertices.push_back(VertexLabel::index(i));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) edges.emplace_back(i, j);
  }
  return LabeledGraph::from_ids(std::move(vertices), edges);
}

// Graph on vertices 1..n whose edges are selected by the bits of `mask`,
// taken over the pairs (1,2), (1,3), ..., (n-1,n) in that order. Masks
// 0 .. 2^C(n,2)-1 enumerate all labeled graphs on n vertices.
inline LabeledGraph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<VertexLabel> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back(VertexLabel::index(i));
  std::vector<IndexPair> edges;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return LabeledGraph::from_ids(std::move(vertices), edges);
}

// Arc i -> j for every i < j.
inline Digraph transitive_tournament(int n) {
  if (n < 1) throw ParameterError("transitive_tournament: need n >= 1");
  std::vector<VertexLabel> vertices;
  std::vector<IndexPair> arcs;
  for (int i = 1; i <= n; ++i) vertices.push_back(VertexLabel::index(i));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) arcs.emplace_back(i, j);
  }
  return Digraph::from_ids(std::move(vertices), arcs);
}

namespace detail {

inline void check_shift_params(int n, int k, const char* who) {
  if (!(n > k && k >= 2)) {
    throw ParameterError(std::string(who) + ": parameters must satisfy n > k >= 2 (got n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

inline std::vector<VertexLabel> tuple_labels(int n, int k) {
  std::vector<VertexLabel> labels;
  for (auto& t : increasing_tuples(n, k)) labels.push_back(VertexLabel::tuple(std::move(t)));
  return labels;
}

// True iff b is a shifted by m: b_i = a_{i+m} for all 1 <= i <= k-m.
inline bool is_shift_of(const std::vector<int>& a, const std::vector<int>& b,
                        std::size_t m) {
  for (std::size_t i = 0; i + m < a.size(); ++i) {
    if (b[i] != a[i + m]) return false;
  }
  return true;
}

}  // namespace detail

// G(n,k): increasing k-tuples, u ~ v iff u_{i+1} = v_i for all i <= k-1 or
// the same with u and v swapped.
inline LabeledGraph shift_graph(int n, int k) {
  detail::check_shift_params(n, k, "shift_graph");
  auto labels = detail::tuple_labels(n, k);
  std::vector<IndexPair> edges;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    const auto& u = labels[a].values();
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      const auto& v = labels[b].values();
      bool forward = true;
      bool backward = true;
      for (int i = 0; i + 1 < k; ++i) {
        forward = forward && u[i + 1] == v[i];
        backward = backward && v[i + 1] == u[i];
      }
      if (forward || backward) edges.emplace_back(a, b);
    }
  }
  return LabeledGraph::from_ids(std::move(labels), edges);
}

// G_m(n,k): increasing k-tuples, u ~ v iff one is the other shifted by m.
inline LabeledGraph m_shift_graph(int n, int k, int m) {
  detail::check_shift_params(n, k, "m_shift_graph");
  if (!(m >= 1 && m < k)) {
    throw ParameterError("m_shift_graph: m must satisfy 1 <= m < k (got m=" +
                         std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
  auto labels = detail::tuple_labels(n, k);
  std::vector<IndexPair> edges;
  const auto shift = static_cast<std::size_t>(m);
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (detail::is_shift_of(labels[a].values(), labels[b].values(), shift) ||
          detail::is_shift_of(labels[b].values(), labels[a].values(), shift)) {
        edges.emplace_back(a, b);
      }
    }
  }
  return LabeledGraph::from_ids(std::move(labels), edges);
}

// S(n,k): all n^k words of length k; distinct u ~ v iff the last k-1 symbols
// of one are the first k-1 of the other. Loops and repeated adjacencies of
// the de Bruijn graph collapse away.
inline LabeledGraph simplified_de_bruijn(int n, int k) {
  if (n < 2 || k < 2) {
    throw ParameterError("simplified_de_bruijn: need n >= 2 and k >= 2 (got n=" +
                         std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  std::vector<VertexLabel> labels;
  for (auto& w : all_words(n, k)) labels.push_back(VertexLabel::symbols(std::move(w)));
  std::vector<IndexPair> edges;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (detail::is_shift_of(labels[a].values(), labels[b].values(), 1) ||
          detail::is_shift_of(labels[b].values(), labels[a].values(), 1)) {
        edges.emplace_back(a, b);
      }
    }
  }
  return LabeledGraph::from_ids(std::move(labels), edges);
}

// S_m(n,k): induced subgraph of S(n,k) on words whose symbols are pairwise at
// distance >= m.
inline LabeledGraph spread_de_bruijn(int n, int k, int m) {
  if (m < 1) throw ParameterError("spread_de_bruijn: need m >= 1");
  LabeledGraph full = simplified_de_bruijn(n, k);
  std::set<VertexLabel> keep;
  for (const auto& l : full.vertices()) {
    const auto& s = l.values();
    bool spread = true;
    for (std::size_t i = 0; i < s.size() && spread; ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (std::abs(s[i] - s[j]) < m) {
          spread = false;
          break;
        }
      }
    }
    if (spread) keep.insert(l);
  }
  return induced_subgraph(full, keep);
}

namespace detail {

// Label of the vertex standing for the pair (a, b) in a line (di)graph.
// Integer endpoints give the tuple (a,b); anything else a composite name.
inline VertexLabel pair_label(const VertexLabel& a, const VertexLabel& b) {
  if (a.kind() == LabelKind::kIndex && b.kind() == LabelKind::kIndex) {
    return VertexLabel::tuple({a.as_index(), b.as_index()});
  }
  return VertexLabel::name("[" + a.to_string() + "|" + b.to_string() + "]");
}

}  // namespace detail

// L(G): one vertex per edge of g; adjacent iff the edges share an endpoint.
inline LabeledGraph line_graph(const LabeledGraph& g) {
  const auto& base = g.edges();
  std::vector<VertexLabel> labels;
  labels.reserve(base.size());
  for (const auto& [a, b] : base) labels.push_back(detail::pair_label(g.label(a), g.label(b)));
  std::vector<LabelPair> edges;
  for (std::size_t e = 0; e < base.size(); ++e) {
    for (std::size_t f = e + 1; f < base.size(); ++f) {
      const auto& [a, b] = base[e];
      const auto& [c, d] = base[f];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(labels[e], labels[f]);
    }
  }
  return LabeledGraph(std::move(labels), edges);
}

// L(D): one vertex per arc of d; arc (a,b) -> (c,e) iff b == c.
inline Digraph line_digraph(const Digraph& d) {
  const auto& base = d.arcs();
  std::vector<VertexLabel> labels;
  labels.reserve(base.size());
  for (const auto& [a, b] : base) labels.push_back(detail::pair_label(d.label(a), d.label(b)));
  std::vector<LabelPair> arcs;
  for (std::size_t e = 0; e < base.size(); ++e) {
    for (std::size_t f = 0; f < base.size(); ++f) {
      if (e != f && base[e].second == base[f].first) {
        arcs.emplace_back(labels[e], labels[f]);
      }
    }
  }
  return Digraph(std::move(labels), arcs);
}

// Forgets arc directions; antiparallel pairs become a single edge.
inline LabeledGraph underlying_graph(const Digraph& d) {
  std::set<IndexPair> edges;
  for (const auto& [a, b] : d.arcs()) edges.emplace(std::min(a, b), std::max(a, b));
  std::vector<IndexPair> list(edges.begin(), edges.end());
  return LabeledGraph::from_ids(d.vertices(), list);
}

}  // namespace shiftrep

#endif  // SHIFTREP_FAMILIES_HPP_
