#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mics {

using Vertex = int;

/// Sorted, duplicate-free list of vertex identities.
using VertexSet = std::vector<Vertex>;

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
  /// and out-of-range endpoints throw ValidationError.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : adjacency_(static_cast<std::size_t>(n)) {
    if (n < 0) throw ValidationError("negative vertex count");
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " out of range for n=" + std::to_string(n));
      }
      if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      edge_count_ += static_cast<int>(nbrs.size());
    }
    edge_count_ /= 2;
  }

  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

  explicit Graph(int n) : Graph(n, std::span<const std::pair<Vertex, Vertex>>{}) {}

  [[nodiscard]] int n() const { return static_cast<int>(adjacency_.size()); }
  [[nodiscard]] int m() const { return edge_count_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  [[nodiscard]] int max_degree() const {
    int best = 0;
    for (const auto& a : adjacency_) best = std::max(best, static_cast<int>(a.size()));
    return best;
  }

  /// Edges with u < v in lexicographic order.
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

/// Checks symmetry, loop-freeness, sortedness and the cached edge count.
/// Returns an empty string when every invariant holds.
inline std::string check_graph_invariants(const Graph& g) {
  long total = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nbrs = g.neighbors(u);
    total += static_cast<long>(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex v = nbrs[i];
      if (v < 0 || v >= g.n()) return "neighbor out of range at " + std::to_string(u);
      if (v == u) return "self-loop at " + std::to_string(u);
      if (i > 0 && nbrs[i - 1] >= v) return "unsorted or duplicate neighbors at " + std::to_string(u);
      if (!g.adjacent(v, u)) return "asymmetric edge " + std::to_string(u) + "-" + std::to_string(v);
    }
  }
  if (total != 2L * g.m()) return "cached edge count mismatch";
  return {};
}

inline void require_in_universe(const Graph& g, std::span<const Vertex> vertices) {
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.n()) {
      throw ValidationError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(g.n()));
    }
  }
}

inline VertexSet make_vertex_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

struct InducedSubgraph {
  Graph graph;
  /// original_id[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> original_id;
};

/// G[W]; new vertex i corresponds to the i-th smallest member of W.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  require_in_universe(g, subset);
  VertexSet w = make_vertex_set({subset.begin(), subset.end()});
  std::vector<int> position(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < w.size(); ++i) position[w[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Vertex v : g.neighbors(w[i])) {
      if (position[v] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), position[v]);
    }
  }
  return {Graph(static_cast<int>(w.size()), edges), std::move(w)};
}

/// Replaces every edge by a path with `s` internal vertices. Original vertices
/// keep their ids; internal vertices of the k-th edge (lexicographic order) are
/// n + k*s .. n + k*s + s - 1, listed from the lower endpoint.
inline Graph subdivide_edges(const Graph& g, int s) {
  if (s < 0) throw ValidationError("subdivision count must be non-negative");
  if (s == 0) return g;
  auto old_edges = g.edges();
  const int n_new = g.n() + s * static_cast<int>(old_edges.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(old_edges.size() * static_cast<std::size_t>(s + 1));
  int next = g.n();
  for (auto [u, v] : old_edges) {
    Vertex prev = u;
    for (int i = 0; i < s; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return {n_new, edges};
}

struct LineGraph {
  Graph graph;
  /// edge_of[i] is the edge of the host graph represented by vertex i.
  std::vector<std::pair<Vertex, Vertex>> edge_of;
};

/// L(G): one vertex per edge (in lexicographic edge order), adjacent iff the
/// edges share an endpoint.
inline LineGraph line_graph(const Graph& g) {
  auto host_edges = g.edges();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < host_edges.size(); ++i) {
    incident[host_edges[i].first].push_back(static_cast<int>(i));
    incident[host_edges[i].second].push_back(static_cast<int>(i));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
    }
  }
  return {Graph(static_cast<int>(host_edges.size()), edges), std::move(host_edges)};
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[s] >= 0) continue;
    VertexSet comp;
    label[s] = static_cast<int>(out.size());
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (label[v] < 0) {
          label[v] = label[s];
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

namespace gen {

inline Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return {n, e};
}

inline Graph cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return {n, e};
}

inline Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return {n, e};
}

/// r x c grid; vertex (i, j) has id i*c + j.
inline Graph grid(int rows, int cols) {
  if (rows < 0 || cols < 0) throw ValidationError("grid dimensions must be non-negative");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) e.emplace_back(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) e.emplace_back(i * cols + j, (i + 1) * cols + j);
    }
  }
  return {rows * cols, e};
}

/// K_{1,s}; the center is vertex 0.
inline Graph star(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return {leaves + 1, e};
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return {10, e};
}

/// G(n, p) with a seeded mt19937_64; each pair u < v is drawn in lexicographic order.
inline Graph random(int n, double p, std::uint64_t seed) {
  if (n < 0) throw ValidationError("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < p) e.emplace_back(i, j);
    }
  }
  return {n, e};
}

}  // namespace gen

}  // namespace mics
