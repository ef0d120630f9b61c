#include <algorithm>

#include <gtest/gtest.h>

#include "brute.hpp"
#include "linres/error.hpp"
#include "linres/generate.hpp"
#include "linres/graph.hpp"
#include "linres/io.hpp"

using namespace linres;

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v, ++bit) {
      if ((mask >> bit) & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST(Graph, NormalizesAndRejects) {
  Graph g(3, {{3, 1}, {2, 1}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}}));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.neighbors(1), (VertexList{2, 3}));
  EXPECT_THROW(Graph(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph(3, {{1, 2}, {2, 1}}), Error);
  EXPECT_THROW(Graph(3, {{1, 4}}), Error);
}

TEST(Graph, HypergraphValidation) {
  EXPECT_THROW(UniformHypergraph(4, 3, {{1, 2}}), Error);
  EXPECT_THROW(UniformHypergraph(4, 3, {{1, 2, 2}}), Error);
  EXPECT_THROW(UniformHypergraph(4, 3, {{1, 2, 3}, {3, 2, 1}}), Error);
  EXPECT_THROW(UniformHypergraph(2, 3, {{1, 2, 3}}), Error);
  EXPECT_THROW(UniformHypergraph(3, 0, {}), Error);
  EXPECT_EQ(UniformHypergraph::from_graph(Graph::empty(1)).n(), 1);
  const UniformHypergraph h = UniformHypergraph::from_graph(path_graph(3));
  EXPECT_EQ(h.m(), 2);
  EXPECT_EQ(h.as_graph(), path_graph(3));
}

TEST(Graph, ComplementMatchesBruteForce) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = graph_from_mask(4, mask);
    EXPECT_EQ(complement(g), brute::complement(g));
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Graph, FourCycleIsNotChordalButItsComplementIs) {
  const Graph c4 = cycle_graph(4);
  EXPECT_FALSE(is_chordal(c4).chordal);
  EXPECT_FALSE(is_chordal(c4).peo.has_value());
  EXPECT_TRUE(is_chordal(complement(c4)).chordal);
  EXPECT_FALSE(is_chordal(cycle_graph(5)).chordal);
  EXPECT_FALSE(is_chordal(complement(cycle_graph(5))).chordal);
}

TEST(Graph, ChordalityAgreesWithInducedCycleSearchOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const ChordalityResult r = is_chordal(g);
      ASSERT_EQ(r.chordal, brute::is_chordal(g)) << format_graph(g);
      if (r.chordal) EXPECT_TRUE(is_perfect_elimination_order(g, r.peo->order));
    }
  }
}

TEST(Graph, LexBfsIsAPermutationWithSmallestFirst) {
  const Graph g = random_graph(9, 400, 3);
  VertexList order = lex_bfs_order(g);
  EXPECT_EQ(order.front(), 1);
  std::sort(order.begin(), order.end());
  for (int v = 1; v <= 9; ++v) EXPECT_EQ(order[v - 1], v);
}

TEST(Graph, PerfectEliminationOrderCheck) {
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(is_perfect_elimination_order(p3, {1, 2, 3}));
  EXPECT_FALSE(is_perfect_elimination_order(p3, {2, 1, 3}));
  EXPECT_FALSE(is_perfect_elimination_order(p3, {1, 2}));
  EXPECT_FALSE(is_perfect_elimination_order(p3, {1, 1, 3}));
}

TEST(Graph, MaximalCliquesMatchSubsetEnumeration) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_chordal_graph(8, seed);
    const auto r = is_chordal(g);
    ASSERT_TRUE(r.chordal);
    EXPECT_EQ(maximal_cliques_chordal(g, *r.peo), brute::maximal_cliques(g));
  }
}

TEST(Graph, LeafOrderPassesIndependentChecker) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_chordal_graph(10, seed);
    const LeafOrder lo = leaf_order(g);
    EXPECT_TRUE(verify_leaf_order(lo));
    EXPECT_TRUE(brute::is_leaf_order(lo.facets));
    std::vector<VertexList> sorted = lo.facets;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, brute::maximal_cliques(g));
  }
}

TEST(Graph, VerifyLeafOrderAgreesOnEveryOrdering) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_chordal_graph(7, seed);
    std::vector<VertexList> facets = brute::maximal_cliques(g);
    if (facets.size() > 5) continue;
    std::sort(facets.begin(), facets.end());
    do {
      ASSERT_EQ(verify_leaf_order(LeafOrder{facets}), brute::is_leaf_order(facets));
      ++checked;
    } while (std::next_permutation(facets.begin(), facets.end()));
  }
  EXPECT_GT(checked, 100);
}

TEST(Graph, LeafOrderRejectsNonChordal) {
  EXPECT_THROW(leaf_order(cycle_graph(4)), Error);
  try {
    leaf_order(cycle_graph(6));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotChordal);
  }
}

TEST(Graph, RandomChordalIsChordalAndReproducible) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_chordal_graph(12, seed);
    EXPECT_TRUE(is_chordal(g).chordal);
    EXPECT_EQ(g, random_chordal_graph(12, seed));
  }
  EXPECT_EQ(format_graph(random_chordal_graph(9, 7)), format_graph(random_chordal_graph(9, 7)));
  EXPECT_THROW(random_chordal_graph(0, 1), Error);
}

TEST(Graph, Families) {
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  EXPECT_EQ(complete_bipartite_graph(2, 2), Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  // K_{2,2} is the four-cycle up to relabeling.
  EXPECT_FALSE(is_chordal(complete_bipartite_graph(2, 2)).chordal);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_THROW(cycle_graph(2), Error);
}

TEST(Graph, BorelClosureIsClosed) {
  const UniformHypergraph h = squarefree_borel_closure(6, 3, {{2, 4, 6}});
  for (const auto& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int s = 1; s < e[k]; ++s) {
        if (std::count(e.begin(), e.end(), s)) continue;
        VertexList moved = e;
        moved[k] = s;
        std::sort(moved.begin(), moved.end());
        EXPECT_TRUE(std::binary_search(h.edges().begin(), h.edges().end(), moved));
      }
    }
  }
}

TEST(Io, ParsesGraphsAndHypergraphs) {
  const ParsedInput p = parse_input("# comment\nn 4\n\n1 2\n3 4\n");
  EXPECT_EQ(p.hypergraph.n(), 4);
  EXPECT_EQ(p.hypergraph.m(), 2);
  EXPECT_FALSE(p.relabeled);
  const ParsedInput q = parse_input("n 4 m 3\n1 2 3\n2 3 4\n");
  EXPECT_EQ(q.hypergraph.m(), 3);
  EXPECT_EQ(q.hypergraph.edges().size(), 2u);
}

TEST(Io, CanonicalizesLabels) {
  const ParsedInput p = parse_input("n 3\nb a\nc b\n");
  EXPECT_TRUE(p.relabeled);
  EXPECT_EQ(p.labels, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p.hypergraph.as_graph(), path_graph(3));
  const ParsedInput q = parse_input("n 3\n10 2\n2 7\n");
  EXPECT_EQ(q.labels, (std::vector<std::string>{"2", "7", "10"}));
}

TEST(Io, ErrorsNameTheLine) {
  auto message = [](std::string_view text) {
    try {
      parse_input(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("n 3\n1 2\n1 2 3\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("n 3\n1 2\n2 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("x 3\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("n 2\n1 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("n 2 m 3\n1 2 2\n").find("line 2"), std::string::npos);
}

TEST(Io, SingleVertexWithoutEdges) {
  const ParsedInput p = parse_input("n 1\n");
  EXPECT_EQ(p.hypergraph.n(), 1);
  EXPECT_TRUE(p.hypergraph.edges().empty());
}

TEST(Io, FormatRoundTrips) {
  const Graph g = random_graph(7, 500, 11);
  EXPECT_EQ(parse_input(format_graph(g)).hypergraph.as_graph(), g);
  const UniformHypergraph h = random_uniform_hypergraph(7, 3, 300, 5);
  EXPECT_EQ(parse_input(format_hypergraph(h)).hypergraph.edges(), h.edges());
}
