#include <gtest/gtest.h>

#include <limits>
#include <queue>
#include <sstream>

#include "test_support.hpp"

using namespace mics;
using testing_support::random_corpus;

namespace {

// Shortest cycle length by BFS from every vertex; infinity for forests.
int girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (Vertex s = 0; s < g.n(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1), parent(static_cast<std::size_t>(g.n()), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}, {1, 2}, {0, 1}});
  EXPECT_EQ(g.m(), 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(check_graph_invariants(g), "");
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(2, std::vector<std::pair<Vertex, Vertex>>{{1, 1}}), ValidationError);
  EXPECT_THROW(Graph(2, std::vector<std::pair<Vertex, Vertex>>{{0, 2}}), ValidationError);
  EXPECT_THROW(Graph(2, std::vector<std::pair<Vertex, Vertex>>{{-1, 0}}), ValidationError);
}

TEST(Graph, InvariantsHoldOnRandomGraphs) {
  for (const auto& c : random_corpus(60, 12, 11)) {
    ASSERT_EQ(check_graph_invariants(c.graph), "") << "seed " << c.seed;
    long long degree_sum = 0;
    for (Vertex v = 0; v < c.graph.n(); ++v) degree_sum += c.graph.degree(v);
    EXPECT_EQ(degree_sum, 2LL * c.graph.m());
  }
}

TEST(GraphIo, DimacsPath) {
  Graph g = parse_graph("c a path\np tw 3 2\n1 2\n2 3\n", GraphFormat::Dimacs);
  EXPECT_EQ(g, gen::path(3));
  EXPECT_EQ(g.m(), 2);
}

TEST(GraphIo, EmptyEdgeList) {
  Graph g = parse_graph("4\n", GraphFormat::EdgeList);
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 0);
}

TEST(GraphIo, SelfLoopLineIsRejected) {
  EXPECT_THROW(parse_graph("p tw 2 1\n1 1\n", GraphFormat::Dimacs), ValidationError);
  EXPECT_THROW(parse_graph("2\n1 1\n", GraphFormat::EdgeList), ValidationError);
}

TEST(GraphIo, MalformedLinesReportLineNumbers) {
  try {
    parse_graph("p tw 3 2\n1 2\n2 x\n", GraphFormat::Dimacs);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_graph("p td 3 2\n", GraphFormat::Dimacs), ParseError);
  EXPECT_THROW(parse_graph("p tw 3 2\n1 2\n", GraphFormat::Dimacs), ParseError);
  EXPECT_THROW(parse_graph("p tw 3 1\n1 4\n", GraphFormat::Dimacs), ValidationError);
}

TEST(GraphIo, WritersRoundTripExactly) {
  for (const auto& c : random_corpus(30, 12, 5)) {
    for (GraphFormat f : {GraphFormat::Dimacs, GraphFormat::EdgeList}) {
      std::string text = to_text(c.graph, f);
      Graph back = parse_graph(text, f);
      EXPECT_EQ(back, c.graph);
      EXPECT_EQ(to_text(back, f), text);
    }
  }
}

TEST(InducedSubgraph, Examples) {
  std::vector<Vertex> w{1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(gen::cycle(5), w).graph, gen::path(4));
  Graph g = gen::petersen();
  std::vector<Vertex> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  EXPECT_EQ(induced_subgraph(g, all).graph, g);
  std::vector<Vertex> two{0, 3};
  EXPECT_EQ(induced_subgraph(gen::complete(4), two).graph.m(), 1);
  std::vector<Vertex> bad{0, 7};
  EXPECT_THROW(induced_subgraph(gen::complete(4), bad), ValidationError);
}

TEST(InducedSubgraph, KeepsExactlyInnerEdges) {
  for (const auto& c : random_corpus(40, 12, 77)) {
    std::vector<Vertex> w;
    for (Vertex v = 0; v < c.graph.n(); v += 2) w.push_back(v);
    InducedSubgraph sub = induced_subgraph(c.graph, w);
    for (Vertex i = 0; i < sub.graph.n(); ++i) {
      for (Vertex j = 0; j < sub.graph.n(); ++j) {
        if (i == j) continue;
        EXPECT_EQ(sub.graph.adjacent(i, j), c.graph.adjacent(sub.original_id[i], sub.original_id[j]));
      }
    }
  }
}

TEST(Subdivide, Examples) {
  EXPECT_EQ(subdivide_edges(gen::cycle(3), 1).m(), 6);
  EXPECT_EQ(girth(subdivide_edges(gen::cycle(3), 1)), 6);
  EXPECT_EQ(degeneracy(subdivide_edges(gen::cycle(3), 1)).degeneracy, 2);
  Graph g = gen::petersen();
  EXPECT_EQ(subdivide_edges(g, 0), g);
  Graph p5 = subdivide_edges(gen::path(2), 3);
  EXPECT_EQ(p5.n(), 5);
  EXPECT_TRUE(is_forest(p5));
  EXPECT_EQ(p5.max_degree(), 2);
  EXPECT_EQ(p5.m(), 4);
}

TEST(Subdivide, CountsAndGirth) {
  for (const auto& c : random_corpus(40, 8, 300)) {
    for (int s = 0; s <= 4; ++s) {
      Graph gs = subdivide_edges(c.graph, s);
      EXPECT_EQ(gs.n(), c.graph.n() + s * c.graph.m());
      EXPECT_EQ(gs.m(), (s + 1) * c.graph.m());
      if (c.graph.m() > 0) {
        EXPECT_GT(girth(gs), s);
      }
    }
  }
}

TEST(LineGraph, Examples) {
  EXPECT_EQ(line_graph(gen::path(4)).graph, gen::path(3));
  EXPECT_EQ(line_graph(gen::complete(3)).graph, gen::complete(3));
  EXPECT_EQ(line_graph(gen::star(3)).graph, gen::complete(3));
}

TEST(LineGraph, DegreeIdentity) {
  for (const auto& c : random_corpus(40, 10, 900)) {
    LineGraph lg = line_graph(c.graph);
    ASSERT_EQ(lg.graph.n(), c.graph.m());
    for (Vertex e = 0; e < lg.graph.n(); ++e) {
      auto [u, v] = lg.edge_of[e];
      EXPECT_EQ(lg.graph.degree(e), c.graph.degree(u) + c.graph.degree(v) - 2);
    }
  }
}

TEST(Generators, Examples) {
  EXPECT_EQ(gen::cycle(3), gen::complete(3));
  EXPECT_EQ(gen::random(9, 0.0, 4).m(), 0);
  EXPECT_EQ(gen::random(9, 1.0, 4), gen::complete(9));
  EXPECT_EQ(gen::random(12, 0.5, 99), gen::random(12, 0.5, 99));
  EXPECT_EQ(gen::grid(3, 4).m(), 3 * 3 + 2 * 4);
  Graph p = gen::petersen();
  EXPECT_EQ(p.m(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(girth(p), 5);
}

TEST(Components, CountsPieces) {
  Graph g(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {3, 4}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3U);
  EXPECT_EQ(comps[0], (VertexSet{0, 1}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(gen::petersen()));
}

TEST(Rational, ArithmeticAndParsing) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1) - Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("0.5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("1"), Rational(1));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-2, -6).to_string(), "1/3");
}

TEST(Rational, ExactPowers) {
  EXPECT_EQ(ceil_power(8, Rational(1, 3)), 2);
  EXPECT_EQ(ceil_power(9, Rational(1, 3)), 3);
  EXPECT_EQ(ceil_power(27, Rational(2, 3)), 9);
  EXPECT_EQ(ceil_power(28, Rational(2, 3)), 10);
  EXPECT_EQ(ceil_power(1, Rational(1, 4)), 1);
  EXPECT_EQ(floor_scaled_power(Rational(2, 3), 12, Rational(1)), 8);
  EXPECT_EQ(floor_scaled_power(Rational(1), 1000000, Rational(1, 2)), 1000);
  EXPECT_EQ(floor_scaled_power(Rational(1), 999999, Rational(1, 2)), 999);
}
