#ifndef SHIFTREP_DOT_HPP_
#define SHIFTREP_DOT_HPP_

#include <sstream>
#include <string>

#include "shiftrep/graph.hpp"
#include "shiftrep/orientation.hpp"

namespace shiftrep::dot {

namespace detail {

inline std::string quoted(const VertexLabel& l) { return "\"" + l.to_string() + "\""; }

template <typename G, typename Pairs>
std::string render(const G& g, const Pairs& pairs, bool directed) {
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (const auto& l : g.vertices()) out << "  " << quoted(l) << ";\n";
  const char* connector = directed ? " -> " : " -- ";
  for (const auto& [a, b] : pairs) {
    out << "  " << quoted(g.label(a)) << connector << quoted(g.label(b)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace detail

inline std::string encode(const LabeledGraph& g) { return detail::render(g, g.edges(), false); }
inline std::string encode(const Digraph& d) { return detail::render(d, d.arcs(), true); }
inline std::string encode(const Orientation& o) { return encode(o.digraph()); }

}  // namespace shiftrep::dot

#endif  // SHIFTREP_DOT_HPP_
