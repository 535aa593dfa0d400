#include <gtest/gtest.h>

#include <set>

#include "shiftrep/families.hpp"
#include "shiftrep/structure.hpp"
#include "test_support.hpp"

using namespace shiftrep;
using namespace shiftrep::testing;

namespace {

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Direct transcription of the m-shift adjacency with 1-based indices.
bool shift_adjacent(const std::vector<int>& x, const std::vector<int>& y, int m) {
  const int k = static_cast<int>(x.size());
  bool xy = true;
  bool yx = true;
  for (int i = 1; i <= k - m; ++i) {
    xy = xy && x[i + m - 1] == y[i - 1];
    yx = yx && y[i + m - 1] == x[i - 1];
  }
  return xy || yx;
}

}  // namespace

TEST(CompleteGraph, Sizes) {
  EXPECT_EQ(complete_graph(1).size(), 1u);
  EXPECT_EQ(complete_graph(1).edge_count(), 0u);
  EXPECT_EQ(complete_graph(3).edge_count(), 3u);
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_THROW(complete_graph(0), ParameterError);
}

TEST(TransitiveTournament, Arcs) {
  const Digraph t2 = transitive_tournament(2);
  ASSERT_EQ(t2.arc_count(), 1u);
  EXPECT_TRUE(t2.has_arc(L(1), L(2)));
  const Digraph t3 = transitive_tournament(3);
  EXPECT_EQ(t3, Digraph(indices(3), {{L(1), L(2)}, {L(1), L(3)}, {L(2), L(3)}}));
  EXPECT_EQ(transitive_tournament(5).arc_count(), 10u);
}

TEST(ShiftGraph, SmallInstances) {
  const LabeledGraph g32 = shift_graph(3, 2);
  EXPECT_EQ(g32, LabeledGraph({T({1, 2}), T({1, 3}), T({2, 3})}, {{T({1, 2}), T({2, 3})}}));

  const LabeledGraph g42 = shift_graph(4, 2);
  const LabeledGraph expected(
      {T({1, 2}), T({1, 3}), T({1, 4}), T({2, 3}), T({2, 4}), T({3, 4})},
      {{T({1, 2}), T({2, 3})}, {T({1, 2}), T({2, 4})}, {T({1, 3}), T({3, 4})},
       {T({2, 3}), T({3, 4})}});
  EXPECT_EQ(g42, expected);
  EXPECT_TRUE(g42.neighbors(g42.id(T({1, 4}))).empty());

  const LabeledGraph g53 = shift_graph(5, 3);
  EXPECT_EQ(g53.size(), 10u);
  EXPECT_EQ(g53.edge_count(), 5u);
}

TEST(ShiftGraph, RejectsBadParameters) {
  EXPECT_THROW(shift_graph(2, 2), ParameterError);
  EXPECT_THROW(shift_graph(5, 1), ParameterError);
  EXPECT_THROW(shift_graph(3, 4), ParameterError);
}

TEST(ShiftGraph, MatchesDefinitionAndCounts) {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k < n; ++k) {
      const LabeledGraph g = shift_graph(n, k);
      ASSERT_EQ(g.size(), choose(n, k));
      EXPECT_EQ(g.edge_count(), choose(n, k + 1)) << n << "," << k;
      for (VertexId a = 0; a < g.size(); ++a) {
        for (VertexId b = a + 1; b < g.size(); ++b) {
          ASSERT_EQ(g.adjacent(a, b), shift_adjacent(g.label(a).values(), g.label(b).values(), 1));
        }
      }
    }
  }
}

TEST(MShiftGraph, SmallInstances) {
  EXPECT_EQ(m_shift_graph(5, 2, 1), shift_graph(5, 2));
  const LabeledGraph g = m_shift_graph(5, 3, 2);
  EXPECT_EQ(g.size(), 10u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(T({1, 2, 3}), T({3, 4, 5})));
  EXPECT_EQ(m_shift_graph(6, 3, 2).edge_count(), 6u);
  EXPECT_THROW(m_shift_graph(5, 3, 3), ParameterError);
  EXPECT_THROW(m_shift_graph(5, 3, 0), ParameterError);
}

TEST(MShiftGraph, EdgeCountIsBinomialAndExactlyOneDirectionHolds) {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int m = 1; m < k; ++m) {
        const LabeledGraph g = m_shift_graph(n, k, m);
        EXPECT_EQ(g.edge_count(), choose(n, k + m)) << n << "," << k << "," << m;
        for (const auto& [a, b] : g.edges()) {
          const auto& x = g.label(a).values();
          const auto& y = g.label(b).values();
          bool xy = true;
          bool yx = true;
          for (int i = 0; i + m < k; ++i) {
            xy = xy && y[i] == x[i + m];
            yx = yx && x[i] == y[i + m];
          }
          ASSERT_NE(xy, yx);
        }
      }
    }
  }
}

TEST(SimplifiedDeBruijn, TwoTwo) {
  const auto w = [](std::initializer_list<int> s) { return VertexLabel::symbols(s); };
  const LabeledGraph s22 = simplified_de_bruijn(2, 2);
  const LabeledGraph expected({w({1, 1}), w({1, 2}), w({2, 1}), w({2, 2})},
                              {{w({1, 1}), w({1, 2})},
                               {w({1, 1}), w({2, 1})},
                               {w({1, 2}), w({2, 1})},
                               {w({1, 2}), w({2, 2})},
                               {w({2, 1}), w({2, 2})}});
  EXPECT_EQ(s22, expected);
  EXPECT_EQ(simplified_de_bruijn(3, 2).size(), 9u);
  const LabeledGraph s23 = simplified_de_bruijn(2, 3);
  EXPECT_TRUE(s23.adjacent(w({1, 1, 2}), w({1, 2, 1})));
  EXPECT_FALSE(s23.adjacent(w({1, 1, 1}), w({2, 2, 2})));
  EXPECT_THROW(simplified_de_bruijn(1, 2), ParameterError);
  EXPECT_THROW(simplified_de_bruijn(2, 1), ParameterError);
}

TEST(SpreadDeBruijn, Filters) {
  const auto w = [](std::initializer_list<int> s) { return VertexLabel::symbols(s); };
  EXPECT_EQ(spread_de_bruijn(3, 2, 1).size(), 6u);
  const LabeledGraph s = spread_de_bruijn(4, 2, 2);
  const std::vector<VertexLabel> expected{w({1, 3}), w({1, 4}), w({2, 4}),
                                          w({3, 1}), w({4, 1}), w({4, 2})};
  EXPECT_EQ(s.vertices(), expected);
  // m = 1 keeps exactly the repeat-free words.
  const LabeledGraph full = simplified_de_bruijn(3, 3);
  std::set<VertexLabel> repeat_free;
  for (const auto& l : full.vertices()) {
    const auto& v = l.values();
    if (std::set<int>(v.begin(), v.end()).size() == v.size()) repeat_free.insert(l);
  }
  EXPECT_EQ(spread_de_bruijn(3, 3, 1), induced_subgraph(full, repeat_free));
}

TEST(SimplifiedDeBruijn, IncreasingWordsInduceShiftGraph) {
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k <= 3 && k < n; ++k) {
      const LabeledGraph s = simplified_de_bruijn(n, k);
      std::set<VertexLabel> increasing;
      for (const auto& l : s.vertices()) {
        const auto& v = l.values();
        if (std::is_sorted(v.begin(), v.end()) && std::adjacent_find(v.begin(), v.end()) == v.end()) {
          increasing.insert(l);
        }
      }
      const LabeledGraph sub = induced_subgraph(s, increasing);
      const LabeledGraph shift = shift_graph(n, k);
      ASSERT_EQ(sub.size(), shift.size());
      for (VertexId v = 0; v < sub.size(); ++v) {
        ASSERT_EQ(sub.label(v).values(), shift.label(v).values());
      }
      EXPECT_EQ(sub.edges(), shift.edges());
    }
  }
}

TEST(LineGraph, SmallCases) {
  EXPECT_EQ(line_graph(complete_graph(3)).edge_count(), 3u);
  EXPECT_EQ(line_graph(complete_graph(3)).size(), 3u);
  const LabeledGraph lp = line_graph(path(3));
  EXPECT_EQ(lp, LabeledGraph({T({1, 2}), T({2, 3})}, {{T({1, 2}), T({2, 3})}}));
  const LabeledGraph lk4 = line_graph(complete_graph(4));
  EXPECT_EQ(lk4.size(), 6u);
  EXPECT_EQ(lk4.edge_count(), 12u);
}

TEST(LineDigraph, SmallCases) {
  const Digraph p(indices(3), {{L(1), L(2)}, {L(2), L(3)}});
  const Digraph lp = line_digraph(p);
  EXPECT_EQ(lp, Digraph({T({1, 2}), T({2, 3})}, {{T({1, 2}), T({2, 3})}}));

  const Digraph single(indices(2), {{L(1), L(2)}});
  EXPECT_EQ(line_digraph(single).size(), 1u);
  EXPECT_EQ(line_digraph(single).arc_count(), 0u);

  const Digraph lt3 = line_digraph(transitive_tournament(3));
  EXPECT_EQ(lt3.vertices(), (std::vector<VertexLabel>{T({1, 2}), T({1, 3}), T({2, 3})}));
  ASSERT_EQ(lt3.arc_count(), 1u);
  EXPECT_TRUE(lt3.has_arc(T({1, 2}), T({2, 3})));
}

TEST(UnderlyingGraph, CollapsesAntiparallelArcs) {
  EXPECT_EQ(underlying_graph(Digraph(indices(2), {{L(1), L(2)}})), complete_graph(2));
  EXPECT_EQ(underlying_graph(Digraph(indices(2), {{L(1), L(2)}, {L(2), L(1)}})),
            complete_graph(2));
}

TEST(UnderlyingGraph, LineDigraphOfTournamentIsShiftGraph) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(underlying_graph(line_digraph(transitive_tournament(n))), shift_graph(n, 2));
    EXPECT_TRUE(is_triangle_free(shift_graph(n, 2)));
  }
}

TEST(GraphFromEdgeMask, EnumeratesAllGraphs) {
  std::set<std::vector<IndexPair>> seen;
  for (std::uint64_t mask = 0; mask < 64; ++mask) seen.insert(graph_from_edge_mask(4, mask).edges());
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_EQ(graph_from_edge_mask(4, 63), complete_graph(4));
}
