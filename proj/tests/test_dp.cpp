#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace mics;
using namespace testing_support;

namespace {

DpOptions full_space() {
  DpOptions o;
  o.key_space = KeySpace::Full;
  return o;
}

// Builds a nice decomposition top-down; the first node added is the root.
struct NiceBuilder {
  NiceTreeDecomposition nice;
  explicit NiceBuilder(int n) { nice.td.num_vertices = n; }
  int add(NodeKind kind, Vertex v, VertexSet bag, int parent) {
    int id = nice.td.add_node(std::move(bag), parent);
    nice.nodes.push_back({kind, v});
    return id;
  }
};

struct EdgeFixture {
  // a = 0, u = 1: leaf -> introduce a -> introduce u -> forget u -> forget a.
  NiceTreeDecomposition nice;
  int root, forget_u, intro_u, intro_a, leaf;
  EdgeFixture() {
    NiceBuilder b(2);
    root = b.add(NodeKind::Forget, 0, {}, -1);
    forget_u = b.add(NodeKind::Forget, 1, {0}, root);
    intro_u = b.add(NodeKind::Introduce, 1, {0, 1}, forget_u);
    intro_a = b.add(NodeKind::Introduce, 0, {0}, intro_u);
    leaf = b.add(NodeKind::Leaf, -1, {}, intro_a);
    nice = b.nice;
  }
};

Graph single_edge() { return gen::path(2); }

// Does X ∪ Y admit an ordering extending sigma in which every y in Y has at
// most d smaller neighbors in X ∪ Y and every a in X has at most f(a)
// smaller neighbors in Y?
bool ordering_exists(const Graph& g, const std::vector<Vertex>& sigma, const std::vector<int>& f,
                     const std::vector<Vertex>& y, int d) {
  std::vector<Vertex> all = sigma;
  all.insert(all.end(), y.begin(), y.end());
  std::sort(all.begin(), all.end());
  auto in_y = [&](Vertex v) { return std::find(y.begin(), y.end(), v) != y.end(); };
  do {
    std::vector<Vertex> restricted;
    for (Vertex v : all) {
      if (!in_y(v)) restricted.push_back(v);
    }
    if (restricted != sigma) continue;
    bool ok = true;
    for (std::size_t i = 0; i < all.size() && ok; ++i) {
      int smaller_all = 0, smaller_y = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (!g.adjacent(all[i], all[j])) continue;
        ++smaller_all;
        smaller_y += in_y(all[j]);
      }
      if (in_y(all[i])) {
        ok = smaller_all <= d;
      } else {
        auto pos = std::find(sigma.begin(), sigma.end(), all[i]) - sigma.begin();
        ok = smaller_y <= f[pos];
      }
    }
    if (ok) return true;
  } while (std::next_permutation(all.begin(), all.end()));
  return false;
}

int reference_phi_degenerate(const Graph& g, const TreeDecomposition& td, int x, const DegenerateKey& key, int d) {
  VertexSet alpha = ref_component(td, x);
  const int k = static_cast<int>(alpha.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    if (std::popcount(mask) <= best) continue;
    std::vector<Vertex> y;
    for (int i = 0; i < k; ++i) {
      if (mask & (1U << i)) y.push_back(alpha[i]);
    }
    if (ordering_exists(g, key.order, key.quota, y, d)) best = std::popcount(mask);
  }
  return best;
}

int reference_phi_degree(const Graph& g, const TreeDecomposition& td, int x, const DegreeKey& key, int d) {
  VertexSet alpha = ref_component(td, x);
  const int k = static_cast<int>(alpha.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    if (std::popcount(mask) <= best) continue;
    std::vector<Vertex> y;
    for (int i = 0; i < k; ++i) {
      if (mask & (1U << i)) y.push_back(alpha[i]);
    }
    std::vector<Vertex> xy = key.members;
    xy.insert(xy.end(), y.begin(), y.end());
    bool ok = true;
    for (Vertex v : y) {
      int deg = 0;
      for (Vertex w : xy) deg += g.adjacent(v, w);
      ok = ok && deg <= d;
    }
    for (std::size_t i = 0; i < key.members.size(); ++i) {
      int deg = 0;
      for (Vertex w : y) deg += g.adjacent(key.members[i], w);
      ok = ok && deg <= key.quota[i];
    }
    if (ok) best = std::popcount(mask);
  }
  return best;
}

template <typename Run>
int alpha_size(const Run& run, int x) {
  return static_cast<int>(ref_component(run.decomposition().td, x).size());
}

// Phi never decreases when one quota grows by one, and never exceeds |alpha(x)|.
template <typename Run>
void expect_monotone_and_bounded(const Run& run) {
  for (int x = 0; x < static_cast<int>(run.tables().size()); ++x) {
    const dp::Table& t = run.table(x);
    const int cap = alpha_size(run, x);
    for (const auto& [k, e] : t.entries) {
      ASSERT_LE(e.value, cap);
      ASSERT_GE(e.value, 0);
      for (int i = 0; i < k.len; ++i) {
        dp::PackedKey up = k;
        if (k.quota_at(i) == dp::kMaxQuota) continue;
        up.set_quota(i, k.quota_at(i) + 1);
        if (const dp::Entry* ue = t.find(up)) {
          ASSERT_LE(e.value, ue->value) << "node " << x;
        }
      }
    }
  }
}

std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1U << i)) edges.push_back(pairs[i]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

NiceTreeDecomposition nice_of(const Graph& g) { return make_nice(heuristic_decomposition(g), g); }

}  // namespace

TEST(DegenerateTransitions, Leaf) {
  for (int d = 0; d <= 3; ++d) {
    dp::Table t = dp_leaf();
    ASSERT_EQ(t.entries.size(), 1U);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{}), 0);
    EXPECT_EQ(t.entries.begin()->second.choice, -1);
  }
}

TEST(DegenerateTransitions, IntroduceOnSingleEdge) {
  EdgeFixture f;
  Graph g = single_edge();
  for (int d = 0; d <= 2; ++d) {
    DegenerateDp run(g, f.nice, d, full_space());
    const dp::Table& t = run.table(f.intro_u);
    for (int q0 = 0; q0 <= d; ++q0) {
      for (int q1 = 0; q1 <= d; ++q1) {
        EXPECT_EQ(dp::value_at(t, DegenerateKey{{0, 1}, {q0, q1}}), 0);
        EXPECT_EQ(dp::value_at(t, DegenerateKey{{1, 0}, {q0, q1}}), 0);
      }
      EXPECT_EQ(dp::value_at(t, DegenerateKey{{0}, {q0}}), dp::value_at(run.table(f.intro_a), DegenerateKey{{0}, {q0}}));
    }
    EXPECT_EQ(static_cast<long long>(t.entries.size()), dp::full_ordered_key_count(2, d));
    EXPECT_EQ(static_cast<long long>(run.table(f.intro_a).entries.size()), dp::full_ordered_key_count(1, d));
  }
}

TEST(DegenerateTransitions, ForgetOnSingleEdge) {
  EdgeFixture f;
  Graph g = single_edge();
  {
    DegenerateDp run(g, f.nice, 1, full_space());
    const dp::Table& t = run.table(f.forget_u);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{{0}, {1}}), 1);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{{0}, {0}}), 1);  // u placed after a, l = 1 <= d
    EXPECT_EQ(dp::value_at(t, DegenerateKey{}), 1);
    EXPECT_EQ(run.value(), 2);
  }
  {
    DegenerateDp run(g, f.nice, 0, full_space());
    const dp::Table& t = run.table(f.forget_u);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{{0}, {0}}), 0);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{}), 1);
    EXPECT_EQ(run.value(), 1);
  }
}

TEST(DegenerateTransitions, ForgetIsolatedVertexAddsOne) {
  EdgeFixture f;
  Graph g(2);
  for (int d = 0; d <= 2; ++d) {
    DegenerateDp run(g, f.nice, d, full_space());
    const dp::Table& below = run.table(f.intro_u);
    for (const auto& [k, e] : run.table(f.forget_u).entries) {
      DegenerateKey key = dp::unpack(run.table(f.forget_u), k);
      EXPECT_EQ(e.value, dp::value_at(below, key) + 1);
    }
  }
}

TEST(DegenerateTransitions, ForgetUsesTheDirectFunction) {
  Graph g = single_edge();
  for (int d = 0; d <= 2; ++d) {
    dp::Table t = dp_leaf();
    t = dp_introduce(t, 0, g, d, full_space());
    t = dp_introduce(t, 1, g, d, full_space());
    dp::Table forgot = dp_forget(t, 1, g, d, full_space());
    EXPECT_EQ(forgot.bag, (VertexSet{0}));
    EXPECT_EQ(dp::value_at(forgot, DegenerateKey{}), 1);
    EXPECT_THROW(dp_forget(forgot, 1, g, d), std::logic_error);
    EXPECT_THROW(dp_introduce(t, 1, g, d), std::logic_error);
  }
}

TEST(DegenerateTransitions, JoinOnPathCenteredAtOne) {
  // Path 0-1-2; both leaves hang off a join over bag {1}.
  NiceBuilder b(3);
  int root = b.add(NodeKind::Forget, 1, {}, -1);
  int join = b.add(NodeKind::Join, -1, {1}, root);
  int children[2];
  for (int side = 0; side < 2; ++side) {
    Vertex leafv = side == 0 ? 0 : 2;
    int fg = b.add(NodeKind::Forget, leafv, {1}, join);
    int in2 = b.add(NodeKind::Introduce, leafv, make_vertex_set({1, leafv}), fg);
    int in1 = b.add(NodeKind::Introduce, 1, {1}, in2);
    b.add(NodeKind::Leaf, -1, {}, in1);
    children[side] = fg;
  }
  Graph g = gen::path(3);
  {
    DegenerateDp run(g, b.nice, 1, full_space());
    const dp::Table& t = run.table(join);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{}), 2);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{{1}, {0}}), 2);
    EXPECT_EQ(dp::value_at(t, DegenerateKey{{1}, {1}}), 2);
    EXPECT_EQ(dp::value_at(run.table(children[0]), DegenerateKey{{1}, {1}}), 1);
    EXPECT_EQ(run.value(), 3);
  }
  {
    DegenerateDp run(g, b.nice, 0, full_space());
    EXPECT_EQ(dp::value_at(run.table(join), DegenerateKey{{1}, {0}}), 0);
    EXPECT_EQ(dp::value_at(run.table(join), DegenerateKey{}), 2);
    EXPECT_EQ(run.value(), 2);
  }
  {
    // Edgeless host: X = ∅ sums the children, every other key too.
    DegenerateDp run(Graph(3), b.nice, 1, full_space());
    for (const auto& [k, e] : run.table(join).entries) {
      DegenerateKey key = dp::unpack(run.table(join), k);
      EXPECT_EQ(e.value, dp::value_at(run.table(children[0]), key) + dp::value_at(run.table(children[1]), key));
    }
  }
}

TEST(DegenerateTransitions, JoinOfZeroTablesIsZero) {
  Graph g = gen::path(2);
  dp::Table left = dp_introduce(dp_leaf(), 0, g, 1, full_space());
  dp::Table joined = dp_join(left, left, g, 1, full_space());
  for (const auto& [k, e] : joined.entries) EXPECT_EQ(e.value, 0);
  dp::Table other = dp_introduce(dp_leaf(), 1, g, 1, full_space());
  EXPECT_THROW(dp_join(left, other, g, 1), std::logic_error);
}

TEST(DegenerateTransitions, EqualitySplitMatchesLiteralOnRandomMonotoneTables) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int bag_size = 1 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 2);
    Graph g = gen::random(bag_size, 0.5, rng());
    VertexSet bag;
    for (int i = 0; i < bag_size; ++i) bag.push_back(i);
    auto adj = dp::bag_adjacency(g, bag);
    auto random_table = [&]() {
      dp::Table t;
      t.bag = bag;
      // value = base(order) + sum of per-slot increments up to the quota: monotone in f.
      dp::enumerate_ordered_keys(bag_size, adj, d, KeySpace::Full, [&](const dp::PackedKey& k) {
        std::mt19937_64 local(k.order * 131 + k.len);
        int v = static_cast<int>(local() % 3);
        for (int i = 0; i < k.len; ++i) {
          for (int q = 1; q <= k.quota_at(i); ++q) v += static_cast<int>((local() + q) % 2);
        }
        t.entries.emplace(k, dp::Entry{v, -1, 0, 0});
      });
      return t;
    };
    dp::Table left = random_table(), right = random_table();
    DpOptions eq = full_space(), lit = full_space();
    lit.literal_transitions = true;
    dp::Table a = dp_join(left, right, g, d, eq);
    dp::Table b = dp_join(left, right, g, d, lit);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (const auto& [k, e] : a.entries) EXPECT_EQ(e.value, b.find(k)->value);
  }
}

TEST(DegenerateTransitions, TablesMatchDefinitionOnAllSmallGraphs) {
  for (int n = 2; n <= 3; ++n) {
    for (const Graph& g : all_graphs(n)) {
      NiceTreeDecomposition nice = nice_of(g);
      for (int d = 0; d <= 2; ++d) {
        DegenerateDp run(g, nice, d, full_space());
        for (int x = 0; x < nice.size(); ++x) {
          for (const auto& [k, e] : run.table(x).entries) {
            DegenerateKey key = dp::unpack(run.table(x), k);
            ASSERT_EQ(e.value, reference_phi_degenerate(g, nice.td, x, key, d)) << "n " << n << " d " << d;
          }
        }
      }
    }
  }
}

TEST(DegenerateTransitions, TablesMatchDefinitionOnRandomGraphs) {
  for (const auto& c : random_corpus(45, 6, 606)) {
    NiceTreeDecomposition nice = nice_of(c.graph);
    for (int d = 0; d <= 2; ++d) {
      DegenerateDp run(c.graph, nice, d);
      for (int x = 0; x < nice.size(); ++x) {
        for (const auto& [k, e] : run.table(x).entries) {
          DegenerateKey key = dp::unpack(run.table(x), k);
          ASSERT_EQ(e.value, reference_phi_degenerate(c.graph, nice.td, x, key, d)) << "seed " << c.seed;
        }
      }
    }
  }
}

TEST(DegreeTransitions, TablesMatchDefinitionOnSmallGraphs) {
  std::vector<Graph> graphs = all_graphs(3);
  for (const auto& c : random_corpus(45, 7, 707)) graphs.push_back(c.graph);
  for (const Graph& g : graphs) {
    NiceTreeDecomposition nice = nice_of(g);
    for (int d = 0; d <= 2; ++d) {
      for (KeySpace space : {KeySpace::Full, KeySpace::Consistent}) {
        DpOptions o;
        o.key_space = space;
        DegreeDp run(g, nice, d, o);
        for (int x = 0; x < nice.size(); ++x) {
          const dp::Table& t = run.table(x);
          for (const auto& [k, e] : t.entries) {
            DegreeKey key;
            for (int i = 0; i < k.len; ++i) {
              key.members.push_back(t.bag[k.at(i)]);
              key.quota.push_back(k.quota_at(i));
            }
            ASSERT_EQ(e.value, reference_phi_degree(g, nice.td, x, key, d));
          }
        }
      }
    }
  }
}

TEST(DegreeTransitions, FullKeyCount) {
  Graph g = gen::complete(3);
  for (int d = 0; d <= 2; ++d) {
    dp::Table t = dp_leaf();
    for (Vertex v = 0; v < 3; ++v) {
      t = degree_dp_introduce(t, v, g, d, full_space());
      long long expected = 1;
      for (int i = 0; i <= v; ++i) expected *= d + 2;
      EXPECT_EQ(static_cast<long long>(t.entries.size()), expected);
    }
  }
}

TEST(KeySpace, ClosedFormCount) {
  for (int b = 0; b <= 4; ++b) {
    for (int d = 0; d <= 2; ++d) {
      long long counted = 0;
      std::vector<std::uint32_t> adj(static_cast<std::size_t>(b), 0);
      dp::enumerate_ordered_keys(b, adj, d, KeySpace::Full, [&](const dp::PackedKey&) { ++counted; });
      long long expected = 0;
      for (int j = 0; j <= b; ++j) {
        long long term = 1;
        for (int i = 0; i < j; ++i) term *= (b - i);  // C(b,j) * j!
        for (int i = 0; i < j; ++i) term *= d + 1;
        expected += term;
      }
      EXPECT_EQ(counted, expected);
      EXPECT_EQ(dp::full_ordered_key_count(b, d), expected);
    }
  }
}

TEST(KeySpace, ConsistentAgreesWithFull) {
  for (const auto& c : random_corpus(60, 7, 1717)) {
    NiceTreeDecomposition nice = nice_of(c.graph);
    if (nice.width() > 4) continue;
    for (int d = 0; d <= 2; ++d) {
      DegenerateDp full(c.graph, nice, d, full_space());
      DegenerateDp cons(c.graph, nice, d);
      EXPECT_EQ(full.value(), cons.value());
      for (int x = 0; x < nice.size(); ++x) {
        for (const auto& [k, e] : cons.table(x).entries) {
          const dp::Entry* fe = full.table(x).find(k);
          ASSERT_NE(fe, nullptr);
          EXPECT_EQ(fe->value, e.value);
        }
      }
    }
  }
}

TEST(Equality, OptimizedTransitionsMatchLiteralEnumeration) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : all_graphs(n)) graphs.push_back(g);
  }
  for (const auto& c : random_corpus(90, 8, 2121)) graphs.push_back(c.graph);
  DpOptions lit;
  lit.literal_transitions = true;
  for (const Graph& g : graphs) {
    NiceTreeDecomposition nice = nice_of(g);
    for (int d = 0; d <= 2; ++d) {
      DegenerateDp a(g, nice, d), b(g, nice, d, lit);
      DegreeDp c(g, nice, d), e(g, nice, d, lit);
      ASSERT_EQ(a.value(), b.value());
      ASSERT_EQ(c.value(), e.value());
      for (int x = 0; x < nice.size(); ++x) {
        for (const auto& [k, entry] : a.table(x).entries) ASSERT_EQ(entry.value, b.table(x).find(k)->value);
        for (const auto& [k, entry] : c.table(x).entries) ASSERT_EQ(entry.value, e.table(x).find(k)->value);
      }
    }
  }
}

TEST(Monotonicity, ExhaustiveUpToEightVertices) {
  for (const auto& c : random_corpus(120, 8, 3131)) {
    NiceTreeDecomposition nice = nice_of(c.graph);
    for (int d = 0; d <= 2; ++d) {
      expect_monotone_and_bounded(DegenerateDp(c.graph, nice, d));
      expect_monotone_and_bounded(DegreeDp(c.graph, nice, d));
    }
  }
}

TEST(Solve, Examples) {
  auto size_of = [](const TargetClassSpec& spec, const Graph& g) { return solve_direct(spec, g).solution.size; };
  EXPECT_EQ(size_of(TargetClassSpec::degenerate(1), gen::complete(4)), 2);
  EXPECT_EQ(size_of(TargetClassSpec::degenerate(0), gen::cycle(5)), 2);
  EXPECT_EQ(size_of(TargetClassSpec::degenerate(2), gen::complete(5)), 3);
  EXPECT_EQ(size_of(TargetClassSpec::degenerate(1), gen::petersen()), ref_max_induced(gen::petersen(), TargetClassSpec::forest()));
  EXPECT_EQ(size_of(TargetClassSpec::degenerate(1), gen::petersen()), 7);
  EXPECT_EQ(size_of(TargetClassSpec::max_degree(1), gen::path(4)), 3);
  EXPECT_EQ(size_of(TargetClassSpec::max_degree(1), gen::cycle(6)), 4);
  EXPECT_EQ(size_of(TargetClassSpec::max_degree(3), gen::petersen()), 10);
  EXPECT_EQ(size_of(TargetClassSpec::forest(), gen::cycle(5)), 4);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(size_of(TargetClassSpec::edgeless(), gen::complete(n)), 1);
  Graph grid = gen::grid(3, 3);
  EXPECT_EQ(size_of(TargetClassSpec::forest(), grid), ref_max_induced(grid, TargetClassSpec::forest()));
}

TEST(Solve, MatchesReferenceOracle) {
  for (const auto& c : random_corpus(300, 12, 9090)) {
    for (const auto& spec : in_scope_specs()) {
      Solution s = solve_direct(spec, c.graph).solution;
      ASSERT_EQ(s.size, ref_max_induced(c.graph, spec)) << spec.to_string() << " seed " << c.seed;
      ASSERT_TRUE(s.certifies(spec, c.graph));
      std::vector<int> w(s.vertices.begin(), s.vertices.end());
      ASSERT_TRUE(ref_member(spec, c.graph, w));
    }
  }
}

TEST(Solve, NestingSaturationAndForestEquivalence) {
  for (const auto& c : random_corpus(80, 8, 4545)) {
    const Graph& g = c.graph;
    NiceTreeDecomposition nice = nice_of(g);
    int prev_deg = -1, prev_degen = -1;
    for (int d = 0; d <= 4; ++d) {
      int deg = solve_degree(g, nice, d).size;
      int degen = solve_degenerate(g, nice, d).size;
      EXPECT_GE(deg, prev_deg);
      EXPECT_GE(degen, prev_degen);
      EXPECT_GE(degen, deg);  // max degree d implies d-degenerate
      prev_deg = deg;
      prev_degen = degen;
    }
    EXPECT_EQ(solve_degenerate(g, nice, 1).size, solve(TargetClassSpec::forest(), g, nice).size);
    if (g.n() > 6) continue;
    EXPECT_EQ(solve_degenerate(g, nice, std::max(0, g.n() - 1)).size, g.n());
    EXPECT_EQ(solve_degree(g, nice, g.max_degree()).size, g.n());
    EXPECT_EQ(solve_degenerate(g, nice, 40).size, g.n());
  }
}

TEST(Solve, DominatedKeyDroppingKeepsAnswers) {
  DpOptions drop;
  drop.drop_dominated = true;
  for (const auto& c : random_corpus(100, 10, 5656)) {
    for (const auto& spec : in_scope_specs()) {
      Solution a = solve_direct(spec, c.graph).solution;
      Solution b = solve_direct(spec, c.graph, drop).solution;
      EXPECT_EQ(a.size, b.size);
      EXPECT_TRUE(b.certifies(spec, c.graph));
    }
  }
}

TEST(Solve, TracebackIsDeterministic) {
  for (const auto& c : random_corpus(30, 12, 777)) {
    for (const auto& spec : in_scope_specs()) {
      EXPECT_EQ(solve_direct(spec, c.graph).solution, solve_direct(spec, c.graph).solution);
    }
  }
}

TEST(Solve, Guards) {
  Graph k13 = gen::complete(13);
  try {
    solve_direct(TargetClassSpec::forest(), k13);
    FAIL() << "expected the width guard";
  } catch (const WidthCapExceeded& e) {
    EXPECT_EQ(e.width(), 12);
    EXPECT_NE(std::string(e.what()).find("branching"), std::string::npos);
  }
  Graph g = gen::path(3);
  NiceTreeDecomposition nice = nice_of(g);
  EXPECT_THROW(solve_degenerate(g, nice, -1), ValidationError);
  EXPECT_THROW(solve_degenerate(gen::cycle(3), nice, 1), ValidationError);
  EXPECT_THROW(solve(TargetClassSpec::parse("planar"), g, nice), UnsupportedClassError);
  DpOptions tight;
  tight.width_cap = 1;
  EXPECT_THROW(solve_direct(TargetClassSpec::forest(), gen::cycle(4), tight), WidthCapExceeded);
}

TEST(Solve, TableDumpIsCanonical) {
  Graph g = gen::path(3);
  NiceTreeDecomposition nice = nice_of(g);
  DegenerateDp run(g, nice, 1);
  std::stringstream a, b;
  dump_tables(a, nice, run.tables());
  dump_tables(b, nice, DegenerateDp(g, nice, 1).tables());
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("kind leaf key || phi 0"), std::string::npos);
  std::string line;
  std::getline(a, line);
  EXPECT_EQ(line.rfind("node ", 0), 0U);
}
