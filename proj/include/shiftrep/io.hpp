#ifndef SHIFTREP_IO_HPP_
#define SHIFTREP_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "shiftrep/decide.hpp"
#include "shiftrep/error.hpp"
#include "shiftrep/graph.hpp"
#include "shiftrep/orientation.hpp"

// JSON forms: labels (integers stay numbers, other kinds use their rendered
// text), the graph6 label sidecar, orientation arc lists, shortcut witnesses
// and decisions.
namespace shiftrep::io {

using nlohmann::json;

inline json label_to_json(const VertexLabel& l) {
  if (l.kind() == LabelKind::kIndex) return l.as_index();
  return l.to_string();
}

inline VertexLabel label_from_json(const json& j) {
  if (j.is_number_integer()) return VertexLabel::index(j.get<int>());
  if (j.is_string()) return parse_label_text(j.get<std::string>());
  throw ParseError("label must be an integer or a string, got " + j.dump(), 0);
}

// The sidecar accompanying graph6 output: position i holds the label of
// graph6 vertex i.
inline json label_sidecar(const LabeledGraph& g) {
  json out = json::array();
  for (const auto& l : g.vertices()) out.push_back(label_to_json(l));
  return out;
}

// Replaces the 1..n labels of a decoded graph6 graph with sidecar labels.
inline LabeledGraph apply_sidecar(const LabeledGraph& decoded, const json& sidecar) {
  if (!sidecar.is_array() || sidecar.size() != decoded.size()) {
    throw ParseError("label sidecar must be an array of " + std::to_string(decoded.size()) +
                         " labels",
                     0);
  }
  std::vector<VertexLabel> labels;
  for (const auto& entry : sidecar) labels.push_back(label_from_json(entry));
  std::vector<LabelPair> edges;
  for (const auto& [a, b] : decoded.edges()) edges.emplace_back(labels[a], labels[b]);
  return LabeledGraph(std::move(labels), edges);
}

inline json arcs_to_json(const Orientation& o) {
  json arcs = json::array();
  for (const auto& [a, b] : o.arcs()) {
    arcs.push_back({label_to_json(o.digraph().label(a)), label_to_json(o.digraph().label(b))});
  }
  return json{{"arcs", arcs}};
}

// Reads {"arcs": [[tail, head], ...]} against the vertices of g. Labels are
// matched by value, or by rendered text when the JSON form is a string.
inline Orientation orientation_from_json(const LabeledGraph& g, const json& j) {
  if (!j.is_object() || !j.contains("arcs") || !j["arcs"].is_array()) {
    throw ParseError("orientation JSON needs an \"arcs\" array", 0);
  }
  auto resolve = [&](const json& entry) -> VertexLabel {
    VertexLabel l = label_from_json(entry);
    if (g.find(l)) return l;
    if (entry.is_string()) {
      for (const auto& v : g.vertices()) {
        if (v.to_string() == entry.get<std::string>()) return v;
      }
    }
    throw ParameterError("orientation names unknown vertex " + entry.dump());
  };
  std::vector<LabelPair> arcs;
  std::size_t position = 0;
  for (const auto& arc : j["arcs"]) {
    if (!arc.is_array() || arc.size() != 2) {
      throw ParseError("arc entry must be a [tail, head] pair", position);
    }
    arcs.emplace_back(resolve(arc[0]), resolve(arc[1]));
    ++position;
  }
  return Orientation(g, arcs);
}

inline json witness_to_json(const ShortcutWitness& w) {
  json path = json::array();
  for (const auto& l : w.path) path.push_back(label_to_json(l));
  return json{
      {"path", path},
      {"chord", {label_to_json(w.chord.first), label_to_json(w.chord.second)}},
      {"violation", {label_to_json(w.violation.first), label_to_json(w.violation.second)}},
      {"violation_kind",
       w.kind == ViolationKind::kNonAdjacent ? "non-adjacent" : "wrong-direction"},
  };
}

inline json decision_to_json(const Decision& d) {
  json out{
      {"verdict", to_string(d.verdict)},
      {"witness_arcs", nullptr},
      {"orderings_examined", d.stats.orderings_examined},
      {"nodes", d.stats.nodes},
      {"prunes", d.stats.prunes},
      {"pruned_orderings", to_decimal(d.stats.pruned_orderings)},
      {"orderings_covered", to_decimal(d.stats.covered())},
      {"elapsed_ms", d.stats.elapsed_ms},
  };
  if (d.witness) {
    out["witness_arcs"] = arcs_to_json(*d.witness)["arcs"];
    json order = json::array();
    for (const auto& l : d.witness_order) order.push_back(label_to_json(l));
    out["witness_order"] = order;
    out["witness_deterministic"] = d.witness_deterministic;
  }
  return out;
}

}  // namespace shiftrep::io

#endif  // SHIFTREP_IO_HPP_
