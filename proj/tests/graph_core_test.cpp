#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "shiftrep/dot.hpp"
#include "shiftrep/families.hpp"
#include "shiftrep/graph.hpp"
#include "shiftrep/graph6.hpp"
#include "shiftrep/io.hpp"
#include "shiftrep/structure.hpp"
#include "test_support.hpp"

using namespace shiftrep;
using namespace shiftrep::testing;

TEST(LabeledGraph, RejectsLoopsDuplicatesAndUnknownEndpoints) {
  EXPECT_THROW(LabeledGraph(indices(2), {{L(1), L(1)}}), ParameterError);
  EXPECT_THROW(LabeledGraph(indices(2), {{L(1), L(2)}, {L(2), L(1)}}), ParameterError);
  EXPECT_THROW(LabeledGraph(indices(2), {{L(1), L(3)}}), ParameterError);
  EXPECT_THROW(LabeledGraph({L(1), L(1)}, {}), ParameterError);
  EXPECT_THROW(LabeledGraph({L(1), N("a")}, {}), ParameterError);
}

TEST(LabeledGraph, VerticesAreKeptInCanonicalOrder) {
  LabeledGraph g({T({2, 3}), T({1, 3}), T({1, 2})}, {{T({1, 2}), T({2, 3})}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.label(0), T({1, 2}));
  EXPECT_EQ(g.label(2), T({2, 3}));
  EXPECT_TRUE(g.adjacent(T({2, 3}), T({1, 2})));
  EXPECT_FALSE(g.adjacent(T({1, 3}), T({1, 2})));
}

TEST(Digraph, RejectsSelfArcsAndDuplicates) {
  EXPECT_THROW(Digraph(indices(2), {{L(1), L(1)}}), ParameterError);
  EXPECT_THROW(Digraph(indices(2), {{L(1), L(2)}, {L(1), L(2)}}), ParameterError);
  Digraph two_cycle(indices(2), {{L(1), L(2)}, {L(2), L(1)}});
  EXPECT_EQ(two_cycle.arc_count(), 2u);
}

TEST(InducedSubgraph, RestrictsCompleteGraph) {
  const LabeledGraph k4 = complete_graph(4);
  EXPECT_EQ(induced_subgraph(k4, {L(1), L(2), L(3)}), complete_graph(3));
  EXPECT_EQ(induced_subgraph(k4, {}).size(), 0u);
  EXPECT_EQ(induced_subgraph(k4, std::set<VertexLabel>(k4.vertices().begin(),
                                                       k4.vertices().end())),
            k4);
}

TEST(InducedSubgraph, UnknownLabelIsNamedInError) {
  try {
    induced_subgraph(complete_graph(3), {L(7)});
    FAIL() << "expected an error";
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find("7"), std::string::npos);
  }
}

TEST(InducedSubgraph, IncreasingWordsOfDeBruijnGiveShiftGraph) {
  const LabeledGraph s = simplified_de_bruijn(5, 2);
  std::set<VertexLabel> increasing;
  for (const auto& l : s.vertices()) {
    if (l.values()[0] < l.values()[1]) increasing.insert(l);
  }
  const LabeledGraph sub = induced_subgraph(s, increasing);
  const LabeledGraph shift = shift_graph(5, 2);
  ASSERT_EQ(sub.size(), shift.size());
  // Labels differ in kind (word vs tuple); the map keeps entries and order.
  for (VertexId v = 0; v < sub.size(); ++v) {
    EXPECT_EQ(sub.label(v).values(), shift.label(v).values());
  }
  EXPECT_EQ(sub.edges(), shift.edges());
}

TEST(TriangleFree, SmallCases) {
  EXPECT_FALSE(is_triangle_free(complete_graph(3)));
  EXPECT_TRUE(is_triangle_free(path(3)));
  EXPECT_TRUE(brute_triangle_free(shift_graph(8, 2)));
  EXPECT_TRUE(is_triangle_free(shift_graph(8, 2)));
}

TEST(OddGirth, SmallCases) {
  EXPECT_EQ(odd_girth(cycle(5)), 5);
  EXPECT_EQ(odd_girth(path(3)), std::nullopt);
  EXPECT_EQ(odd_girth(complete_graph(4)), 3);
  EXPECT_EQ(odd_girth(cycle(6)), std::nullopt);
}

TEST(OddGirth, ShiftGraphMatchesCycleEnumeration) {
  const LabeledGraph g = shift_graph(5, 2);
  ASSERT_EQ(brute_odd_girth(g, 9), 5);
  EXPECT_EQ(odd_girth(g), 5);
}

TEST(OddGirth, AgreesWithCycleEnumerationOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const LabeledGraph g = random_graph(8, 0.3, rng);
    EXPECT_EQ(odd_girth(g), brute_odd_girth(g, 8)) << graph6::encode(g);
  }
}

TEST(ChromaticNumber, SmallCases) {
  EXPECT_EQ(chromatic_number(complete_graph(4)), 4);
  EXPECT_EQ(chromatic_number(cycle(5)), 3);
  EXPECT_EQ(chromatic_number(path(1)), 1);
}

TEST(ChromaticNumber, ShiftGraphEightIsThreeChromatic) {
  const LabeledGraph g = shift_graph(8, 2);
  // Not 2-colourable: it has an odd cycle (found by enumeration).
  ASSERT_TRUE(brute_odd_girth(g, 5).has_value());
  // 3-colourable: colour (i,j) by the highest bit where i-1 and j-1 differ,
  // capped to three classes for n = 8.
  std::vector<int> color(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    const int diff = (g.label(v).values()[0] - 1) ^ (g.label(v).values()[1] - 1);
    color[v] = diff >= 4 ? 2 : (diff >= 2 ? 1 : 0);
  }
  ASSERT_TRUE(is_proper_coloring(g, color));
  EXPECT_EQ(chromatic_number(g, {.max_vertices = 64}), 3);
}

TEST(ChromaticNumber, AgreesWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const LabeledGraph g = random_graph(7, 0.45, rng);
    EXPECT_EQ(chromatic_number(g), brute_chromatic_number(g)) << graph6::encode(g);
  }
}

TEST(ChromaticNumber, SizeLimitAdvisesFlag) {
  try {
    chromatic_number(shift_graph(8, 2));
    FAIL() << "expected a limit error";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("--max-vertices"), std::string::npos);
  }
}

TEST(StructureInvariants, BipartitenessAndTriangles) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const LabeledGraph g = random_graph(7, 0.25, rng);
    const auto girth = odd_girth(g);
    EXPECT_EQ(chromatic_number(g) == 2, !girth && g.edge_count() >= 1);
    EXPECT_EQ(is_triangle_free(g), girth != 3);
  }
}

TEST(Graph6, EncodesReferenceStrings) {
  EXPECT_EQ(graph6::encode(complete_graph(3)), "Bw");
  EXPECT_EQ(graph6::encode(path(3)), "Bg");
  EXPECT_EQ(graph6::encode(complete_graph(1)), "@");
  // Reference strings below were produced by networkx.to_graph6_bytes.
  EXPECT_EQ(graph6::encode(shift_graph(4, 2)), "EC`O");
  EXPECT_EQ(graph6::encode(complete_graph(5)), "D~{");
  EXPECT_EQ(graph6::encode(line_graph(complete_graph(5))), "I~qkzXZLw");
  // networkx cycle_graph(5): 0-1-2-3-4-0.
  EXPECT_EQ(graph6::encode(cycle(5)), "Dhc");
  // networkx petersen_graph: outer 0..4 cycle, spokes i-(i+5), inner pentagram.
  std::vector<LabelPair> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(L(i + 1), L((i + 1) % 5 + 1));
    petersen.emplace_back(L(i + 1), L(i + 6));
    petersen.emplace_back(L(i + 6), L((i + 2) % 5 + 6));
  }
  EXPECT_EQ(graph6::encode(LabeledGraph(indices(10), petersen)), "IheA@GUAo");
}

TEST(Graph6, DecodesWithAndWithoutHeader) {
  EXPECT_EQ(graph6::decode("Bw"), complete_graph(3));
  EXPECT_EQ(graph6::decode(">>graph6<<Bw\n"), complete_graph(3));
  EXPECT_EQ(graph6::decode("@").size(), 1u);
  EXPECT_EQ(graph6::decode("?").size(), 0u);
}

TEST(Graph6, MalformedInputReportsOffset) {
  EXPECT_THROW(graph6::decode(""), ParseError);
  EXPECT_THROW(graph6::decode("D~"), ParseError);       // truncated
  EXPECT_THROW(graph6::decode("Bww"), ParseError);      // trailing byte
  EXPECT_THROW(graph6::decode("~?A"), ParseError);      // large format
  try {
    graph6::decode("B!");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
}

TEST(Graph6, RejectsLargeGraphs) {
  EXPECT_THROW(graph6::encode(complete_graph(63)), LimitError);
  EXPECT_NO_THROW(graph6::encode(complete_graph(62)));
}

// Round trip through graph6 plus the label sidecar, over random graphs and
// generated families.
TEST(Graph6, RoundTripProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 40) + 1;
    const LabeledGraph g = random_graph(n, 0.2, rng);
    EXPECT_EQ(graph6::decode(graph6::encode(g)), g);
  }
  for (const LabeledGraph& g : {shift_graph(8, 3), m_shift_graph(7, 4, 2),
                                simplified_de_bruijn(3, 3), spread_de_bruijn(5, 2, 2),
                                line_graph(complete_graph(6))}) {
    const LabeledGraph back =
        io::apply_sidecar(graph6::decode(graph6::encode(g)), io::label_sidecar(g));
    EXPECT_EQ(back, g);
  }
}

TEST(Dot, UndirectedAndDirected) {
  const std::string k2 = dot::encode(complete_graph(2));
  EXPECT_EQ(k2, "graph G {\n  \"1\";\n  \"2\";\n  \"1\" -- \"2\";\n}\n");
  const Digraph arc({T({1, 2}), T({2, 3})}, {{T({1, 2}), T({2, 3})}});
  EXPECT_EQ(dot::encode(arc),
            "digraph G {\n  \"(1,2)\";\n  \"(2,3)\";\n  \"(1,2)\" -> \"(2,3)\";\n}\n");
}

TEST(Dot, ShiftGraphCounts) {
  const std::string text = dot::encode(shift_graph(4, 2));
  std::size_t edges = 0;
  for (std::size_t pos = text.find(" -- "); pos != std::string::npos;
       pos = text.find(" -- ", pos + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, 4u);
  EXPECT_NE(text.find("\"(1,4)\";"), std::string::npos);
}

TEST(Labels, RenderAndParse) {
  EXPECT_EQ(T({1, 2, 3}).to_string(), "(1,2,3)");
  EXPECT_EQ(VertexLabel::symbols({1, 2, 1}).to_string(), "121");
  EXPECT_EQ(VertexLabel::symbols({10, 2}).to_string(), "10,2");
  EXPECT_EQ(parse_label_text("(1,2,3)"), T({1, 2, 3}));
  EXPECT_EQ(parse_label_text("121"), VertexLabel::symbols({1, 2, 1}));
  EXPECT_EQ(parse_label_text("10,2"), VertexLabel::symbols({10, 2}));
  EXPECT_EQ(parse_label_text("a"), N("a"));
  EXPECT_LT(T({1, 9}), T({2, 3}));
  EXPECT_LT(T({2, 3}), T({10, 11}));
}
