// shiftrep: command-line front end for the shift-graph representability
// toolkit.
//
// Exit codes: 0 success, 1 claim or verification failure, 2 usage error,
// 3 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shiftrep/decide.hpp"
#include "shiftrep/dot.hpp"
#include "shiftrep/experiments.hpp"
#include "shiftrep/families.hpp"
#include "shiftrep/graph6.hpp"
#include "shiftrep/io.hpp"
#include "shiftrep/orientation.hpp"
#include "shiftrep/words.hpp"

namespace {

using nlohmann::json;
using namespace shiftrep;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Reads the first graph of a graph6 file and applies the label sidecar when
// one is given.
LabeledGraph load_graph(const std::string& path, const std::string& labels_path) {
  std::string text = read_file(path);
  const auto newline = text.find('\n');
  if (newline != std::string::npos) text.resize(newline);
  LabeledGraph g = graph6::decode(text);
  if (!labels_path.empty()) g = io::apply_sidecar(g, json::parse(read_file(labels_path)));
  return g;
}

struct FamilyArgs {
  std::string family;
  std::string of;
  int n = 0;
  int k = 0;
  int m = 0;
  std::string input;
  std::string input_labels;
};

using Generated = std::variant<LabeledGraph, Digraph>;

Generated build_family(const FamilyArgs& a, const std::string& family) {
  if (family == "shift") return shift_graph(a.n, a.k);
  if (family == "mshift") return m_shift_graph(a.n, a.k, a.m);
  if (family == "debruijn") return simplified_de_bruijn(a.n, a.k);
  if (family == "spread-debruijn") return spread_de_bruijn(a.n, a.k, a.m);
  if (family == "complete") return complete_graph(a.n);
  if (family == "tournament") return transitive_tournament(a.n);
  if (family == "linegraph-of") {
    if (!a.input.empty()) return line_graph(load_graph(a.input, a.input_labels));
    if (a.of.empty() || a.of == "linegraph-of" || a.of == "linedigraph-of") {
      throw UsageError("linegraph-of needs --input FILE.g6 or --of FAMILY");
    }
    Generated base = build_family(a, a.of);
    if (auto* g = std::get_if<LabeledGraph>(&base)) return line_graph(*g);
    return line_graph(underlying_graph(std::get<Digraph>(base)));
  }
  if (family == "linedigraph-of") {
    const std::string of = a.of.empty() ? "tournament" : a.of;
    if (of != "tournament") throw UsageError("linedigraph-of supports --of tournament only");
    return line_digraph(transitive_tournament(a.n));
  }
  throw UsageError("unknown family '" + family + "'");
}

int cmd_generate(const FamilyArgs& args, const std::string& format, const std::string& out,
                 const std::string& labels_out) {
  const Generated result = build_family(args, args.family);
  if (format == "dot") {
    write_output(out, std::visit([](const auto& g) { return dot::encode(g); }, result));
    return kExitOk;
  }
  // graph6 carries the undirected graph; digraphs contribute their underlying graph.
  const LabeledGraph g = std::holds_alternative<LabeledGraph>(result)
                             ? std::get<LabeledGraph>(result)
                             : underlying_graph(std::get<Digraph>(result));
  write_output(out, graph6::encode(g) + "\n");
  std::string sidecar_path = labels_out;
  if (sidecar_path.empty() && !out.empty() && out != "-") sidecar_path = out + ".labels.json";
  if (!sidecar_path.empty()) write_output(sidecar_path, io::label_sidecar(g).dump() + "\n");
  return kExitOk;
}

int cmd_orient(int n, int k, int m, bool verify, const std::string& format,
               const std::string& out) {
  const Orientation o = orient_m_shift(n, k, m);
  if (format == "dot") {
    write_output(out, dot::encode(o));
  } else {
    json j = io::arcs_to_json(o);
    j["n"] = n;
    j["k"] = k;
    j["m"] = m;
    j["vertices"] = o.size();
    j["arc_count"] = o.arcs().size();
    if (verify) j["verified"] = is_semi_transitive(o);
    write_output(out, j.dump() + "\n");
  }
  if (verify && !is_semi_transitive(o)) {
    std::cerr << "orient: construction failed semi-transitivity for n=" << n << " k=" << k
              << " m=" << m << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_check(const std::string& graph_path, const std::string& labels_path,
              const std::string& orientation_path, bool naive) {
  const LabeledGraph g = load_graph(graph_path, labels_path);
  const Orientation o = io::orientation_from_json(g, json::parse(read_file(orientation_path)));
  json report{{"acyclic", is_acyclic(o)}, {"semi_transitive", false}, {"shortcut", nullptr}};
  if (is_acyclic(o)) {
    const auto witness = naive ? find_shortcut_naive(o) : find_shortcut_fast(o);
    report["semi_transitive"] = !witness.has_value();
    if (witness) report["shortcut"] = io::witness_to_json(*witness);
  }
  std::cout << report.dump() << "\n";
  return report["semi_transitive"].get<bool>() ? kExitOk : kExitFailure;
}

int cmd_decide(const std::string& input, const std::string& labels_path,
               const DecideOptions& options) {
  const LabeledGraph g = load_graph(input, labels_path);
  const Decision d = decide_word_representable(g, options);
  std::cout << io::decision_to_json(d).dump() << "\n";
  return d.verdict == Verdict::kUnknown ? kExitBudget : kExitOk;
}

int cmd_word_find(const std::string& input, const std::string& labels_path, int k, int k_max,
                  std::uint64_t budget) {
  const LabeledGraph g = load_graph(input, labels_path);
  const int first = k > 0 ? k : 1;
  const int last = k > 0 ? k : k_max;
  json report{{"status", "none"}, {"word", nullptr}, {"k", nullptr}, {"prefixes", 0}};
  std::uint64_t prefixes = 0;
  for (int uniform = first; uniform <= last; ++uniform) {
    const UniformWordResult r = find_uniform_word(g, uniform, {.budget = budget});
    prefixes += r.prefixes;
    report["k"] = uniform;
    if (r.status == SearchStatus::kFound) {
      report["status"] = "found";
      report["word"] = format_word(r.word);
      report["verified"] = represents(r.word, g);
      break;
    }
    if (r.status == SearchStatus::kBudgetExhausted) {
      report["status"] = "budget-exhausted";
      break;
    }
  }
  report["prefixes"] = prefixes;
  std::cout << report.dump() << "\n";
  return report["status"] == "budget-exhausted" ? kExitBudget : kExitOk;
}

int cmd_word_verify(const std::string& input, const std::string& labels_path,
                    const std::string& word_text) {
  const LabeledGraph g = load_graph(input, labels_path);
  const Word w = parse_word(word_text, g);
  const bool ok = represents(w, g);
  std::cout << json{{"represents", ok}, {"length", w.size()}}.dump() << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_experiments(const std::string& suite, const std::string& out,
                    const std::vector<std::string>& skip, std::uint64_t seed) {
  const auto suites = experiments::known_suites();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  experiments::SuiteOptions options;
  options.skip_tags = {skip.begin(), skip.end()};
  options.seed = seed;
  options.on_claim = [](const experiments::ClaimResult& c) {
    std::cerr << "[" << experiments::to_string(c.status) << "] " << c.id << " ("
              << static_cast<long long>(c.elapsed_ms) << " ms)\n";
  };
  const experiments::Report report = experiments::run_suite(suite, options);
  write_output(out, experiments::to_json(report).dump(2) + "\n");
  if (!report.all_passed()) {
    std::cerr << "failing claims:";
    for (const auto& id : report.failed_ids()) std::cerr << " " << id;
    std::cerr << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shift graphs, semi-transitive orientations and word-representability"};
  app.require_subcommand(1);

  FamilyArgs family;
  std::string format = "graph6";
  std::string out;
  std::string labels_out;
  auto* generate = app.add_subcommand("generate", "Generate a graph family");
  generate->add_option("--family", family.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"shift", "mshift", "debruijn", "spread-debruijn", "complete",
                             "tournament", "linegraph-of", "linedigraph-of"}));
  generate->add_option("--of", family.of, "Base family for linegraph-of / linedigraph-of");
  generate->add_option("--n", family.n, "n parameter");
  generate->add_option("--k", family.k, "k parameter");
  generate->add_option("--m", family.m, "m parameter");
  generate->add_option("--input", family.input, "Base graph (graph6) for linegraph-of");
  generate->add_option("--input-labels", family.input_labels, "Label sidecar for --input");
  generate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"graph6", "dot"}));
  generate->add_option("--out", out, "Output file (default stdout)");
  generate->add_option("--labels", labels_out, "Label sidecar output path");

  int n = 0;
  int k = 0;
  int m = 1;
  bool verify = false;
  std::string orient_format = "json";
  auto* orient = app.add_subcommand("orient", "Emit the explicit orientation of G_m(n,k)");
  orient->add_option("--n", n)->required();
  orient->add_option("--k", k)->required();
  orient->add_option("--m", m, "Shift amount (1 gives G(n,k))");
  orient->add_flag("--verify", verify, "Check semi-transitivity of the result");
  orient->add_option("--format", orient_format)->check(CLI::IsMember({"json", "dot"}));
  orient->add_option("--out", out, "Output file (default stdout)");

  std::string graph_path;
  std::string labels_path;
  std::string orientation_path;
  bool naive = false;
  auto* check = app.add_subcommand("check", "Check an orientation for semi-transitivity");
  check->add_option("--graph", graph_path, "Graph (graph6)")->required();
  check->add_option("--labels", labels_path, "Label sidecar for the graph");
  check->add_option("--orientation", orientation_path, "Orientation JSON arc list")->required();
  check->add_flag("--naive", naive, "Use the path-enumeration checker (<= 12 vertices)");

  DecideOptions decide_options;
  std::uint64_t max_nodes = 0;
  auto* decide = app.add_subcommand("decide", "Decide word-representability exhaustively");
  decide->add_option("--input", graph_path, "Graph (graph6)")->required();
  decide->add_option("--labels", labels_path, "Label sidecar for the graph");
  decide->add_option("--max-seconds", decide_options.max_seconds, "Time budget (0: none)");
  decide->add_option("--max-nodes", max_nodes, "Search-node budget (0: none)");
  decide->add_option("--max-vertices", decide_options.max_vertices, "Vertex limit");
  decide->add_flag("--allow-large", decide_options.allow_large, "Lift the vertex limit");
  decide->add_option("--workers", decide_options.workers, "Parallel workers");
  bool no_prune = false;
  decide->add_flag("--no-prune", no_prune, "Disable prefix pruning");

  auto* word = app.add_subcommand("word", "Word search and verification");
  word->require_subcommand(1);
  int word_k = 0;
  int word_k_max = 3;
  std::uint64_t budget = UniformWordOptions{}.budget;
  auto* word_find = word->add_subcommand("find", "Find a k-uniform representing word");
  word_find->add_option("--input", graph_path, "Graph (graph6)")->required();
  word_find->add_option("--labels", labels_path, "Label sidecar for the graph");
  word_find->add_option("--k", word_k, "Exact uniformity (default: try 1..k-max)");
  word_find->add_option("--k-max", word_k_max, "Largest uniformity tried");
  word_find->add_option("--budget", budget, "Prefix-extension budget per k");
  std::string word_text;
  auto* word_verify = word->add_subcommand("verify", "Check that a word represents a graph");
  word_verify->add_option("--input", graph_path, "Graph (graph6)")->required();
  word_verify->add_option("--labels", labels_path, "Label sidecar for the graph");
  word_verify->add_option("--word", word_text, "Comma-separated letters")->required();

  std::string suite;
  std::vector<std::string> skip;
  std::uint64_t seed = experiments::kDefaultSeed;
  auto* exp = app.add_subcommand("experiments", "Run the built-in claim suite");
  exp->add_option("--suite", suite, "Suite name")->required();
  exp->add_option("--out", out, "Report path (default stdout)");
  exp->add_option("--skip", skip, "Skip claims with these tags (e.g. slow)");
  exp->add_option("--seed", seed, "Seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(family, format, out, labels_out);
    if (*orient) return cmd_orient(n, k, m, verify, orient_format, out);
    if (*check) return cmd_check(graph_path, labels_path, orientation_path, naive);
    if (*decide) {
      decide_options.max_nodes = max_nodes;
      decide_options.prune = !no_prune;
      return cmd_decide(graph_path, labels_path, decide_options);
    }
    if (*word_find) return cmd_word_find(graph_path, labels_path, word_k, word_k_max, budget);
    if (*word_verify) return cmd_word_verify(graph_path, labels_path, word_text);
    if (*exp) return cmd_experiments(suite, out, skip, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
