#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mics/graph.hpp"
#include "mics/tree_decomposition.hpp"

namespace mics {

enum class EliminationStrategy { MinFill, MinDegree };

inline EliminationStrategy parse_elimination_strategy(std::string_view name) {
  if (name == "min-fill") return EliminationStrategy::MinFill;
  if (name == "min-degree") return EliminationStrategy::MinDegree;
  throw std::invalid_argument("unknown elimination strategy '" + std::string(name) + "'");
}

/// Greedy elimination ordering; ties go to the lowest vertex id.
inline std::vector<Vertex> elimination_ordering(const Graph& g, EliminationStrategy strategy) {
  const int n = g.n();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<Vertex> nbrs;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_score = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      nbrs.clear();
      for (Vertex u = 0; u < n; ++u) {
        if (!gone[u] && adj[v][u]) nbrs.push_back(u);
      }
      long score = static_cast<long>(nbrs.size());
      if (strategy == EliminationStrategy::MinFill) {
        score = 0;
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
          for (std::size_t b = a + 1; b < nbrs.size(); ++b) score += adj[nbrs[a]][nbrs[b]] ? 0 : 1;
        }
      }
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    nbrs.clear();
    for (Vertex u = 0; u < n; ++u) {
      if (!gone[u] && adj[best][u]) nbrs.push_back(u);
    }
    for (Vertex a : nbrs) {
      for (Vertex b : nbrs) {
        if (a != b) adj[a][b] = 1;
      }
    }
    gone[best] = 1;
    order.push_back(best);
  }
  return order;
}

/// Decomposition induced by an elimination ordering. Bags that are subsets of
/// their parent's bag are merged away.
inline TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.n();
  TreeDecomposition td;
  td.num_vertices = n;
  if (n == 0) {
    td.add_node({}, -1);
    return td;
  }
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;

  std::vector<VertexSet> bags(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet later;
    for (Vertex u = 0; u < n; ++u) {
      if (adj[v][u] && position[u] > i) later.push_back(u);
    }
    for (Vertex a : later) {
      for (Vertex b : later) {
        if (a != b) adj[a][b] = 1;
      }
    }
    if (!later.empty()) {
      Vertex next = *std::min_element(later.begin(), later.end(),
                                      [&](Vertex a, Vertex b) { return position[a] < position[b]; });
      parent[i] = position[next];
    }
    later.push_back(v);
    bags[i] = make_vertex_set(std::move(later));
  }
  // Separate components become children of the last bag.
  for (int i = 0; i + 1 < n; ++i) {
    if (parent[i] < 0) parent[i] = n - 1;
  }
  // Merge bag i into its parent when it adds nothing. Children of i are
  // rerouted to the parent, which keeps every occurrence subtree connected.
  std::vector<int> target(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) target[i] = i;
  std::vector<char> merged(static_cast<std::size_t>(n), 0);
  for (int i = 0; i + 1 < n; ++i) {
    const auto& p = bags[parent[i]];
    if (std::includes(p.begin(), p.end(), bags[i].begin(), bags[i].end())) merged[i] = 1;
  }
  std::function<int(int)> resolve = [&](int x) { return merged[x] ? resolve(parent[x]) : x; };
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  for (int i = n - 1; i >= 0; --i) {
    if (merged[i]) continue;
    int p = i == n - 1 ? -1 : id[resolve(parent[i])];
    id[i] = td.add_node(bags[i], p);
  }
  return td;
}

inline TreeDecomposition heuristic_decomposition(const Graph& g,
                                                 EliminationStrategy strategy = EliminationStrategy::MinFill) {
  return decomposition_from_ordering(g, elimination_ordering(g, strategy));
}

namespace detail {

// Components of G[alive] as sorted lists, ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, const std::vector<char>& alive) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (!alive[s] || seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (alive[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Calls visit(subset) for every subset of `items` of size 0..max_size in
// size-then-lexicographic order; stops as soon as visit returns true.
inline bool for_each_small_subset(const std::vector<Vertex>& items, int max_size,
                                  const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = static_cast<int>(items.size());
  std::vector<int> idx;
  std::vector<Vertex> subset;
  for (int k = 0; k <= std::min(max_size, n); ++k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      subset.clear();
      for (int i : idx) subset.push_back(items[i]);
      if (visit(subset)) return true;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace detail

/// True iff every component of G - S has at most floor(2n/3) vertices.
inline bool verify_balanced_separator(const Graph& g, std::span<const Vertex> separator) {
  require_in_universe(g, separator);
  std::vector<char> alive(static_cast<std::size_t>(g.n()), 1);
  for (Vertex v : separator) alive[v] = 0;
  const auto limit = static_cast<std::size_t>((2 * g.n()) / 3);
  for (const auto& c : detail::components_within(g, alive)) {
    if (c.size() > limit) return false;
  }
  return true;
}

struct SeparatorDecompositionResult {
  std::optional<TreeDecomposition> decomposition;
  /// On failure: the vertex set of the subgraph with no usable separator.
  VertexSet stuck;
  int width = -1;
  /// Width guaranteed by the construction on success: 3 * budget.
  int width_bound = 0;
  int separators_found = 0;

  [[nodiscard]] bool ok() const { return decomposition.has_value(); }
};

/// Recursive decomposition from balanced separators. Each piece W with
/// boundary Z (|Z| <= 2*budget) gets bag Z ∪ S, where S is the first set of
/// size <= budget (size, then lexicographic order) that is a balanced separator
/// of G[W] and leaves every component C with |N(C) ∩ (Z ∪ S)| <= 2*budget.
/// Pieces with at most budget+1 vertices become a single bag Z ∪ W.
inline SeparatorDecompositionResult separator_decomposition(const Graph& g, int size_budget, int size_cap = 18) {
  if (size_budget < 0) throw ValidationError("separator budget must be non-negative");
  if (g.n() > size_cap) {
    throw ValidationError("separator_decomposition is exhaustive; n=" + std::to_string(g.n()) + " exceeds cap " +
                          std::to_string(size_cap));
  }
  SeparatorDecompositionResult result;
  result.width_bound = 3 * size_budget;
  TreeDecomposition td;
  td.num_vertices = g.n();
  const auto boundary_cap = static_cast<std::size_t>(2 * size_budget);

  auto boundary_of = [&](const VertexSet& comp, const std::vector<char>& outer) {
    VertexSet z;
    for (Vertex u : comp) {
      for (Vertex v : g.neighbors(u)) {
        if (outer[v]) z.push_back(v);
      }
    }
    return make_vertex_set(std::move(z));
  };

  std::function<bool(const VertexSet&, const VertexSet&, int)> build =
      [&](const VertexSet& piece, const VertexSet& boundary, int parent) -> bool {
    if (static_cast<int>(piece.size()) <= size_budget + 1) {
      VertexSet bag = boundary;
      bag.insert(bag.end(), piece.begin(), piece.end());
      td.add_node(std::move(bag), parent);
      return true;
    }
    const auto limit = (2 * piece.size()) / 3;
    std::vector<VertexSet> parts;
    std::vector<VertexSet> part_boundaries;
    VertexSet chosen;
    bool found = detail::for_each_small_subset(piece, size_budget, [&](const std::vector<Vertex>& s) {
      std::vector<char> alive(static_cast<std::size_t>(g.n()), 0);
      std::vector<char> outer(static_cast<std::size_t>(g.n()), 0);
      for (Vertex v : piece) alive[v] = 1;
      for (Vertex v : s) {
        alive[v] = 0;
        outer[v] = 1;
      }
      for (Vertex v : boundary) outer[v] = 1;
      auto comps = detail::components_within(g, alive);
      std::vector<VertexSet> zs;
      for (const auto& c : comps) {
        if (c.size() > limit) return false;
        zs.push_back(boundary_of(c, outer));
        if (zs.back().size() > boundary_cap) return false;
      }
      parts = std::move(comps);
      part_boundaries = std::move(zs);
      chosen = s;
      return true;
    });
    if (!found) {
      result.stuck = piece;
      return false;
    }
    ++result.separators_found;
    VertexSet bag = boundary;
    bag.insert(bag.end(), chosen.begin(), chosen.end());
    int node = td.add_node(std::move(bag), parent);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!build(parts[i], part_boundaries[i], node)) return false;
    }
    return true;
  };

  VertexSet all(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) all[i] = i;
  if (!build(all, {}, -1)) return result;
  result.width = td.width();
  result.decomposition = std::move(td);
  return result;
}

}  // namespace mics
