#ifndef SHIFTREP_GRAPH6_HPP_
#define SHIFTREP_GRAPH6_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shiftrep/error.hpp"
#include "shiftrep/graph.hpp"

// Small-format graph6 (fewer than 63 vertices). The vertex order is the
// graph's canonical label order; labels themselves travel in a JSON sidecar
// (see io.hpp).
namespace shiftrep::graph6 {

inline constexpr std::size_t kMaxVertices = 62;
inline constexpr std::string_view kHeader = ">>graph6<<";

inline std::string encode(const LabeledGraph& g) {
  const std::size_t n = g.size();
  if (n > kMaxVertices) {
    throw LimitError("graph6: " + std::to_string(n) +
                     " vertices is unsupported (small format needs n < 63)");
  }
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

// Decodes to a graph labeled 1..n. Accepts an optional ">>graph6<<" header
// and a single trailing newline.
inline LabeledGraph decode(std::string_view bytes) {
  std::size_t pos = 0;
  if (bytes.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);
  if (pos >= bytes.size()) throw ParseError("graph6: missing size byte", pos);

  const int size_byte = static_cast<unsigned char>(bytes[pos]);
  if (size_byte == 126) {
    throw ParseError("graph6: multi-byte size (n >= 63) is unsupported", pos);
  }
  if (size_byte < 63 || size_byte > 125) {
    throw ParseError("graph6: size byte out of range", pos);
  }
  const std::size_t n = static_cast<std::size_t>(size_byte - 63);
  ++pos;

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (bytes.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) +
                         " adjacency bytes for n=" + std::to_string(n) + ", found " +
                         std::to_string(bytes.size() - pos),
                     bytes.size() < pos + expected ? bytes.size() : pos + expected);
  }

  std::vector<IndexPair> edges;
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      const std::size_t offset = pos + bit / 6;
      const int value = static_cast<unsigned char>(bytes[offset]);
      if (value < 63 || value > 126) {
        throw ParseError("graph6: byte out of range", offset);
      }
      if (((value - 63) >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (std::size_t offset = pos; offset < bytes.size(); ++offset) {
    const int value = static_cast<unsigned char>(bytes[offset]);
    if (value < 63 || value > 126) throw ParseError("graph6: byte out of range", offset);
  }

  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(VertexLabel::index(static_cast<int>(i)));
  return LabeledGraph::from_ids(std::move(labels), edges);
}

}  // namespace shiftrep::graph6

#endif  // SHIFTREP_GRAPH6_HPP_
