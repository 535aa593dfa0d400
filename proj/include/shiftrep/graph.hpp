#ifndef SHIFTREP_GRAPH_HPP_
#define SHIFTREP_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shiftrep/error.hpp"
#include "shiftrep/label.hpp"

namespace shiftrep {

using VertexId = std::size_t;
using IndexPair = std::pair<VertexId, VertexId>;
using LabelPair = std::pair<VertexLabel, VertexLabel>;

namespace detail {

// Shared vertex bookkeeping for LabeledGraph and Digraph: labels sorted into
// canonical order, a reverse index, and a dense adjacency matrix.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<VertexLabel> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i > 0 && labels_[i] == labels_[i - 1]) {
        throw ParameterError("duplicate vertex label " + labels_[i].to_string());
      }
      if (labels_[i].kind() != labels_.front().kind()) {
        throw ParameterError("vertex labels of mixed kinds: " +
                             labels_.front().to_string() + " and " +
                             labels_[i].to_string());
      }
      index_.emplace(labels_[i], i);
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::vector<VertexLabel>& labels() const noexcept {
    return labels_;
  }
  [[nodiscard]] const VertexLabel& label(VertexId v) const { return labels_.at(v); }

  [[nodiscard]] std::optional<VertexId> find(const VertexLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] VertexId at(const VertexLabel& l) const {
    auto id = find(l);
    if (!id) throw ParameterError("unknown vertex label " + l.to_string());
    return *id;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<VertexLabel> labels_;
  std::unordered_map<VertexLabel, VertexId> index_;
};

}  // namespace detail

// Finite simple undirected graph with labeled vertices. Vertices are kept in
// canonical (sorted) label order; VertexId is the position in that order.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  LabeledGraph(std::vector<VertexLabel> vertices, std::span<const LabelPair> edges)
      : vertices_(std::move(vertices)) {
    init_storage();
    for (const auto& [a, b] : edges) add_edge(vertices_.at(a), vertices_.at(b));
    finalize();
  }

  LabeledGraph(std::vector<VertexLabel> vertices,
               std::initializer_list<LabelPair> edges)
      : LabeledGraph(std::move(vertices),
                     std::span<const LabelPair>(edges.begin(), edges.size())) {}

  // Edges given as positions into the canonical (sorted) vertex order.
  static LabeledGraph from_ids(std::vector<VertexLabel> vertices,
                               std::span<const IndexPair> edges) {
    LabeledGraph g;
    g.vertices_ = detail::VertexSet(std::move(vertices));
    g.init_storage();
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    g.finalize();
    return g;
  }

  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<VertexLabel>& vertices() const noexcept {
    return vertices_.labels();
  }
  [[nodiscard]] const VertexLabel& label(VertexId v) const { return vertices_.label(v); }
  [[nodiscard]] std::optional<VertexId> find(const VertexLabel& l) const {
    return vertices_.find(l);
  }
  [[nodiscard]] VertexId id(const VertexLabel& l) const { return vertices_.at(l); }

  [[nodiscard]] bool adjacent(VertexId a, VertexId b) const {
    return matrix_[a * size() + b] != 0;
  }
  [[nodiscard]] bool adjacent(const VertexLabel& a, const VertexLabel& b) const {
    auto ia = find(a);
    auto ib = find(b);
    return ia && ib && adjacent(*ia, *ib);
  }

  [[nodiscard]] const std::vector<VertexId>& neighbors(VertexId v) const {
    return neighbors_.at(v);
  }

  // Edges as (smaller id, larger id), sorted.
  [[nodiscard]] const std::vector<IndexPair>& edges() const noexcept { return edges_; }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void init_storage() {
    matrix_.assign(size() * size(), 0);
    neighbors_.assign(size(), {});
  }

  void add_edge(VertexId a, VertexId b) {
    if (a >= size() || b >= size()) {
      throw ParameterError("edge endpoint out of range");
    }
    if (a == b) throw ParameterError("loop at vertex " + label(a).to_string());
    if (adjacent(a, b)) {
      throw ParameterError("duplicate edge " + label(a).to_string() + "-" +
                           label(b).to_string());
    }
    matrix_[a * size() + b] = matrix_[b * size() + a] = 1;
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }

  void finalize() {
    std::sort(edges_.begin(), edges_.end());
    for (auto& n : neighbors_) std::sort(n.begin(), n.end());
  }

  detail::VertexSet vertices_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<IndexPair> edges_;
};

// Simple digraph: no self-arcs, at most one arc per ordered pair.
class Digraph {
 public:
  Digraph() = default;

  Digraph(std::vector<VertexLabel> vertices, std::span<const LabelPair> arcs)
      : vertices_(std::move(vertices)) {
    init_storage();
    for (const auto& [a, b] : arcs) add_arc(vertices_.at(a), vertices_.at(b));
    finalize();
  }

  Digraph(std::vector<VertexLabel> vertices, std::initializer_list<LabelPair> arcs)
      : Digraph(std::move(vertices),
                std::span<const LabelPair>(arcs.begin(), arcs.size())) {}

  static Digraph from_ids(std::vector<VertexLabel> vertices,
                          std::span<const IndexPair> arcs) {
    Digraph d;
    d.vertices_ = detail::VertexSet(std::move(vertices));
    d.init_storage();
    for (const auto& [a, b] : arcs) d.add_arc(a, b);
    d.finalize();
    return d;
  }

  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t arc_count() const noexcept { return arcs_.size(); }
  [[nodiscard]] const std::vector<VertexLabel>& vertices() const noexcept {
    return vertices_.labels();
  }
  [[nodiscard]] const VertexLabel& label(VertexId v) const { return vertices_.label(v); }
  [[nodiscard]] std::optional<VertexId> find(const VertexLabel& l) const {
    return vertices_.find(l);
  }
  [[nodiscard]] VertexId id(const VertexLabel& l) const { return vertices_.at(l); }

  [[nodiscard]] bool has_arc(VertexId from, VertexId to) const {
    return matrix_[from * size() + to] != 0;
  }
  [[nodiscard]] bool has_arc(const VertexLabel& from, const VertexLabel& to) const {
    auto a = find(from);
    auto b = find(to);
    return a && b && has_arc(*a, *b);
  }

  [[nodiscard]] const std::vector<VertexId>& out_neighbors(VertexId v) const {
    return out_.at(v);
  }
  [[nodiscard]] const std::vector<VertexId>& in_neighbors(VertexId v) const {
    return in_.at(v);
  }

  // Arcs as (tail, head), sorted.
  [[nodiscard]] const std::vector<IndexPair>& arcs() const noexcept { return arcs_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

 private:
  void init_storage() {
    matrix_.assign(size() * size(), 0);
    out_.assign(size(), {});
    in_.assign(size(), {});
  }

  void add_arc(VertexId a, VertexId b) {
    if (a >= size() || b >= size()) throw ParameterError("arc endpoint out of range");
    if (a == b) throw ParameterError("self-arc at vertex " + label(a).to_string());
    if (has_arc(a, b)) {
      throw ParameterError("duplicate arc " + label(a).to_string() + "->" +
                           label(b).to_string());
    }
    matrix_[a * size() + b] = 1;
    out_[a].push_back(b);
    in_[b].push_back(a);
    arcs_.emplace_back(a, b);
  }

  void finalize() {
    std::sort(arcs_.begin(), arcs_.end());
    for (auto& n : out_) std::sort(n.begin(), n.end());
    for (auto& n : in_) std::sort(n.begin(), n.end());
  }

  detail::VertexSet vertices_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::vector<IndexPair> arcs_;
};

}  // namespace shiftrep

#endif  // SHIFTREP_GRAPH_HPP_
