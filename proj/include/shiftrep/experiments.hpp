#ifndef SHIFTREP_EXPERIMENTS_HPP_
#define SHIFTREP_EXPERIMENTS_HPP_

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "shiftrep/decide.hpp"
#include "shiftrep/families.hpp"
#include "shiftrep/graph6.hpp"
#include "shiftrep/io.hpp"
#include "shiftrep/orientation.hpp"
#include "shiftrep/structure.hpp"
#include "shiftrep/words.hpp"

// The built-in "paper" suite: one claim per reproducible statement about
// shift graphs, m-shift graphs, de Bruijn graphs and line (di)graphs, each
// checked exactly at desk scale.
namespace shiftrep::experiments {

using nlohmann::json;

inline constexpr const char* kReportSchema = "shiftrep-report/1";
inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum class ClaimStatus { kPass, kFail, kSkipped };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkipped:
      return "skipped";
  }
  return "fail";
}

struct ClaimResult {
  std::string id;
  std::string description;
  json parameters;
  ClaimStatus status = ClaimStatus::kFail;
  double elapsed_ms = 0;
  json artifact;
};

struct SuiteOptions {
  std::set<std::string> skip_tags;  // claims carrying any of these tags are skipped
  std::uint64_t seed = kDefaultSeed;
  // Called after each claim finishes, e.g. to stream progress.
  std::function<void(const ClaimResult&)> on_claim;
};

struct Report {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::vector<ClaimResult> claims;

  [[nodiscard]] bool all_passed() const {
    for (const auto& c : claims) {
      if (c.status == ClaimStatus::kFail) return false;
    }
    return true;
  }

  [[nodiscard]] std::vector<std::string> failed_ids() const {
    std::vector<std::string> ids;
    for (const auto& c : claims) {
      if (c.status == ClaimStatus::kFail) ids.push_back(c.id);
    }
    return ids;
  }
};

inline json to_json(const Report& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"claim_id", c.id},
                      {"description", c.description},
                      {"parameters", c.parameters},
                      {"verdict", to_string(c.status)},
                      {"elapsed_ms", c.elapsed_ms},
                      {"artifact", c.artifact}});
  }
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream stamp;
  stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  return json{{"schema", kReportSchema},
              {"suite", r.suite},
              {"seed", r.seed},
              {"metadata", {{"generated_at", stamp.str()}}},
              {"all_passed", r.all_passed()},
              {"claims", claims}};
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// (n, k, m) with 2 <= k < n <= 9, 1 <= m < k, plus three larger instances.
inline std::vector<std::tuple<int, int, int>> sweep_parameters() {
  std::vector<std::tuple<int, int, int>> out;
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int m = 1; m < k; ++m) out.emplace_back(n, k, m);
    }
  }
  out.emplace_back(12, 2, 1);
  out.emplace_back(10, 3, 1);
  out.emplace_back(10, 3, 2);
  return out;
}

namespace detail {

struct Outcome {
  bool pass = false;
  json artifact = json::object();
};

// Shared state across claims; graphs collected here feed the codec claim.
struct Context {
  std::uint64_t seed;
  std::vector<LabeledGraph> instances;

  void collect(const LabeledGraph& g) {
    if (g.size() <= graph6::kMaxVertices) instances.push_back(g);
  }
};

inline json params_json(int n, int k, int m) { return json{{"n", n}, {"k", k}, {"m", m}}; }

inline Outcome orientation_sweep(Context& ctx) {
  Outcome out{true};
  std::size_t checked = 0;
  for (const auto& [n, k, m] : sweep_parameters()) {
    const Orientation o = orient_m_shift(n, k, m);
    ctx.collect(o.base());
    ++checked;
    if (!is_semi_transitive(o)) {
      out.pass = false;
      out.artifact["counterexample"] = params_json(n, k, m);
      if (is_acyclic(o)) {
        out.artifact["shortcut"] = io::witness_to_json(*find_shortcut_fast(o));
      }
      return out;
    }
  }
  out.artifact["instances_checked"] = checked;
  return out;
}

inline Outcome structural_counts(Context&) {
  Outcome out{true};
  std::size_t checked = 0;
  for (const auto& [n, k, m] : sweep_parameters()) {
    const LabeledGraph g = m_shift_graph(n, k, m);
    ++checked;
    if (g.size() != binomial(n, k) || g.edge_count() != binomial(n, k + m)) {
      out.pass = false;
      out.artifact["counterexample"] = params_json(n, k, m);
      out.artifact["vertices"] = g.size();
      out.artifact["edges"] = g.edge_count();
      return out;
    }
  }
  out.artifact["instances_checked"] = checked;
  return out;
}

inline Outcome m1_coincidence(Context&) {
  Outcome out{true};
  std::set<std::pair<int, int>> seen;
  for (const auto& [n, k, m] : sweep_parameters()) {
    if (!seen.emplace(n, k).second) continue;
    if (!(m_shift_graph(n, k, 1) == shift_graph(n, k))) {
      out.pass = false;
      out.artifact["counterexample"] = json{{"n", n}, {"k", k}};
      return out;
    }
  }
  out.artifact["instances_checked"] = seen.size();
  return out;
}

inline Outcome line_digraph_tournament(Context& ctx) {
  Outcome out{true};
  for (int n = 3; n <= 10; ++n) {
    const LabeledGraph under = underlying_graph(line_digraph(transitive_tournament(n)));
    const LabeledGraph shift = shift_graph(n, 2);
    ctx.collect(under);
    if (!(under == shift)) {
      out.pass = false;
      out.artifact["counterexample"] = json{{"n", n}};
      return out;
    }
  }
  out.artifact["n_range"] = json::array({3, 10});
  return out;
}

inline json decision_summary(const Decision& d) {
  json j = io::decision_to_json(d);
  j.erase("witness_arcs");
  return j;
}

inline Outcome lk5_contrast(Context& ctx) {
  const LabeledGraph k5 = complete_graph(5);
  const LabeledGraph lk5 = line_graph(k5);
  ctx.collect(k5);
  ctx.collect(lk5);
  const Decision line = decide_word_representable(lk5);
  const Decision base = decide_word_representable(k5);
  Outcome out;
  out.pass = line.verdict == Verdict::kNonRepresentable &&
             line.stats.covered() == factorial(lk5.size()) &&
             base.verdict == Verdict::kRepresentable;
  out.artifact["line_graph_K5"] = decision_summary(line);
  out.artifact["K5"] = decision_summary(base);
  return out;
}

inline Outcome de_bruijn_desk(Context& ctx) {
  struct Case {
    std::string name;
    LabeledGraph graph;
    Verdict expected;
  };
  std::vector<Case> cases;
  cases.push_back({"S(3,2)", simplified_de_bruijn(3, 2), Verdict::kNonRepresentable});
  cases.push_back({"S(2,2)", simplified_de_bruijn(2, 2), Verdict::kRepresentable});
  cases.push_back({"S(2,3)", simplified_de_bruijn(2, 3), Verdict::kRepresentable});
  cases.push_back({"S_1(3,2)", spread_de_bruijn(3, 2, 1), Verdict::kRepresentable});
  Outcome out{true};
  for (const auto& c : cases) {
    ctx.collect(c.graph);
    const Decision d = decide_word_representable(c.graph);
    out.artifact[c.name] = decision_summary(d);
    if (d.verdict != c.expected) out.pass = false;
  }
  return out;
}

// Every acyclic orientation of every labeled graph on <= 5 vertices, then
// seeded random acyclic orientations of random 8-vertex graphs.
inline Outcome checker_oracle(Context& ctx) {
  Outcome out{true};
  std::uint64_t exhaustive = 0;
  std::uint64_t with_shortcut = 0;
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const LabeledGraph g = graph_from_edge_mask(n, mask);
      const auto& edges = g.edges();
      for (std::uint64_t dir = 0; dir < (std::uint64_t{1} << edges.size()); ++dir) {
        std::vector<IndexPair> arcs;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          const auto [a, b] = edges[e];
          arcs.emplace_back(((dir >> e) & 1U) ? IndexPair{b, a} : IndexPair{a, b});
        }
        const Orientation o(g, arcs);
        if (!is_acyclic(o)) continue;
        ++exhaustive;
        const bool naive = find_shortcut_naive(o).has_value();
        const bool fast = find_shortcut_fast(o).has_value();
        with_shortcut += naive ? 1 : 0;
        if (naive != fast) {
          out.pass = false;
          out.artifact["disagreement"] = io::arcs_to_json(o);
          return out;
        }
      }
    }
  }

  std::mt19937_64 rng(ctx.seed);
  std::bernoulli_distribution coin(0.5);
  std::uint64_t random_shortcuts = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t mask = 0;
    for (int b = 0; b < 28; ++b) mask |= static_cast<std::uint64_t>(coin(rng)) << b;
    const LabeledGraph g = graph_from_edge_mask(8, mask);
    std::vector<VertexLabel> order = g.vertices();
    std::shuffle(order.begin(), order.end(), rng);
    const Orientation o = orientation_from_ordering(g, order);
    const bool naive = find_shortcut_naive(o).has_value();
    const bool fast = find_shortcut_fast(o).has_value();
    random_shortcuts += naive ? 1 : 0;
    if (trial < 25) ctx.collect(g);
    if (naive != fast) {
      out.pass = false;
      out.artifact["disagreement"] = io::arcs_to_json(o);
      out.artifact["trial"] = trial;
      return out;
    }
  }
  out.artifact["exhaustive_orientations"] = exhaustive;
  out.artifact["exhaustive_with_shortcut"] = with_shortcut;
  out.artifact["random_orientations"] = 1000;
  out.artifact["random_with_shortcut"] = random_shortcuts;
  return out;
}

inline Outcome five_vertex_completeness(Context& ctx) {
  Outcome out{true};
  std::array<std::uint64_t, 4> by_uniformity{};
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const LabeledGraph g = graph_from_edge_mask(5, mask);
    ctx.collect(g);
    const Decision d = decide_word_representable(g);
    std::optional<int> uniformity;
    for (int k = 1; k <= 3 && !uniformity; ++k) {
      const UniformWordResult w = find_uniform_word(g, k);
      if (w.status == SearchStatus::kFound && represents(w.word, g)) uniformity = k;
    }
    if (d.verdict != Verdict::kRepresentable || !uniformity) {
      out.pass = false;
      out.artifact["counterexample_mask"] = mask;
      out.artifact["verdict"] = to_string(d.verdict);
      return out;
    }
    ++by_uniformity[static_cast<std::size_t>(*uniformity)];
  }
  out.artifact["graphs"] = 1024;
  out.artifact["least_uniform_k_histogram"] = {
      {"1", by_uniformity[1]}, {"2", by_uniformity[2]}, {"3", by_uniformity[3]}};
  return out;
}

inline Outcome shift_structure(Context& ctx) {
  Outcome out{true};
  for (int n = 3; n <= 12; ++n) {
    const LabeledGraph g = shift_graph(n, 2);
    ctx.collect(g);
    if (!is_triangle_free(g)) {
      out.pass = false;
      out.artifact["triangle_in"] = json{{"n", n}};
    }
  }
  const auto girth = odd_girth(shift_graph(5, 2));
  out.artifact["odd_girth_G(5,2)"] = girth ? json(*girth) : json(nullptr);
  if (girth != 5) out.pass = false;

  json chromatic = json::object();
  for (int n = 3; n <= 8; ++n) {
    const int chi = chromatic_number(shift_graph(n, 2), {.max_vertices = 64});
    const int expected = static_cast<int>(std::ceil(std::log2(n)));
    chromatic[std::to_string(n)] = chi;
    if (chi != expected) out.pass = false;
  }
  out.artifact["chromatic_number_G(n,2)"] = chromatic;
  return out;
}

inline Outcome codec_roundtrip(Context& ctx) {
  Outcome out{true};
  for (const auto& g : ctx.instances) {
    const LabeledGraph decoded = graph6::decode(graph6::encode(g));
    const LabeledGraph relabeled = io::apply_sidecar(decoded, io::label_sidecar(g));
    if (!(relabeled == g)) {
      out.pass = false;
      out.artifact["counterexample"] = graph6::encode(g);
      return out;
    }
  }
  out.artifact["instances_checked"] = ctx.instances.size();
  return out;
}

struct Claim {
  std::string id;
  std::string description;
  json parameters;
  std::set<std::string> tags;
  std::function<Outcome(Context&)> run;
  std::optional<std::string> never_run_reason;
};

inline std::vector<Claim> paper_claims() {
  std::vector<Claim> claims;
  claims.push_back({"m-shift-orientation-sweep",
                    "lex-upward orientation of G_m(n,k) is semi-transitive",
                    {{"n_max", 9}, {"extra", {{12, 2, 1}, {10, 3, 1}, {10, 3, 2}}}},
                    {},
                    orientation_sweep,
                    std::nullopt});
  claims.push_back({"m-shift-counts", "|V(G_m(n,k))| = C(n,k) and |E(G_m(n,k))| = C(n,k+m)",
                    {{"n_max", 9}}, {}, structural_counts, std::nullopt});
  claims.push_back({"m1-equals-shift", "G_1(n,k) is label-identical to G(n,k)", {{"n_max", 9}},
                    {}, m1_coincidence, std::nullopt});
  claims.push_back({"line-digraph-of-tournament",
                    "underlying graph of L(transitive tournament on n) equals G(n,2)",
                    {{"n_min", 3}, {"n_max", 10}}, {}, line_digraph_tournament, std::nullopt});
  claims.push_back({"line-graph-K5-contrast",
                    "L(K5) is non-representable (exhaustive) while K5 is representable",
                    {{"n", 5}}, {"slow"}, lk5_contrast, std::nullopt});
  claims.push_back({"de-bruijn-desk-scale",
                    "S(3,2) non-representable; S(2,2), S(2,3), S_1(3,2) representable",
                    json::object(), {}, de_bruijn_desk, std::nullopt});
  claims.push_back({"de-bruijn-S-n-3",
                    "S(n,3) non-representable for n >= 3",
                    {{"n", 3}, {"k", 3}}, {}, nullptr,
                    std::string("27-vertex instance is beyond exhaustive desk-scale search")});
  claims.push_back({"checker-oracle-equivalence",
                    "fast and naive shortcut checkers agree on every small acyclic orientation",
                    {{"exhaustive_n_max", 5}, {"random_trials", 1000}, {"random_n", 8}}, {},
                    checker_oracle, std::nullopt});
  claims.push_back({"five-vertex-completeness",
                    "all 1024 labeled graphs on 5 vertices are representable, with a "
                    "k-uniform word for some k <= 3",
                    {{"n", 5}, {"k_max", 3}}, {}, five_vertex_completeness, std::nullopt});
  claims.push_back({"shift-graph-structure",
                    "G(n,2) triangle-free (n <= 12), odd girth of G(5,2) is 5, "
                    "chromatic number of G(n,2) is ceil(log2 n) for n <= 8",
                    {{"triangle_free_n_max", 12}, {"chromatic_n_max", 8}}, {}, shift_structure,
                    std::nullopt});
  claims.push_back({"graph6-roundtrip",
                    "graph6 encode/decode is the identity on every generated instance",
                    json::object(), {}, codec_roundtrip, std::nullopt});
  return claims;
}

}  // namespace detail

inline std::vector<std::string> known_suites() { return {"paper"}; }

inline Report run_suite(const std::string& suite, const SuiteOptions& options = {}) {
  if (suite != "paper") throw ParameterError("unknown suite '" + suite + "'");
  Report report;
  report.suite = suite;
  report.seed = options.seed;
  detail::Context ctx{options.seed, {}};
  for (const auto& claim : detail::paper_claims()) {
    ClaimResult result;
    result.id = claim.id;
    result.description = claim.description;
    result.parameters = claim.parameters;
    bool skip = claim.never_run_reason.has_value();
    for (const auto& tag : claim.tags) skip = skip || options.skip_tags.count(tag) > 0;
    if (skip) {
      result.status = ClaimStatus::kSkipped;
      result.artifact = json{
          {"reason", claim.never_run_reason.value_or("skipped by request")}};
    } else {
      const auto start = std::chrono::steady_clock::now();
      try {
        detail::Outcome outcome = claim.run(ctx);
        result.status = outcome.pass ? ClaimStatus::kPass : ClaimStatus::kFail;
        result.artifact = std::move(outcome.artifact);
      } catch (const std::exception& e) {
        result.status = ClaimStatus::kFail;
        result.artifact = json{{"error", e.what()}};
      }
      result.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    }
    if (options.on_claim) options.on_claim(result);
    report.claims.push_back(std::move(result));
  }
  return report;
}

}  // namespace shiftrep::experiments

#endif  // SHIFTREP_EXPERIMENTS_HPP_
