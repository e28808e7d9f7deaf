#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mics/graph.hpp"
#include "mics/rational.hpp"

namespace mics {

class UnsupportedClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ClassKind { Edgeless, MaxDegree, Forest, Degenerate, Planar };

/// Hereditary target class C. Planar is representable so that callers get a
/// clear UnsupportedClassError instead of a parse failure.
struct TargetClassSpec {
  ClassKind kind = ClassKind::Forest;
  int d = 0;

  static TargetClassSpec edgeless() { return {ClassKind::Edgeless, 0}; }
  static TargetClassSpec forest() { return {ClassKind::Forest, 1}; }
  static TargetClassSpec max_degree(int d) { return {ClassKind::MaxDegree, d}; }
  static TargetClassSpec degenerate(int d) { return {ClassKind::Degenerate, d}; }

  [[nodiscard]] bool supported() const { return kind != ClassKind::Planar; }

  /// Upper bound on |E| / |V| for members of the class.
  [[nodiscard]] Rational sparsity() const {
    switch (kind) {
      case ClassKind::Edgeless: return Rational(0);
      case ClassKind::MaxDegree: return Rational(d, 2);
      case ClassKind::Forest: return Rational(1);
      case ClassKind::Degenerate: return Rational(d);
      case ClassKind::Planar: return Rational(3);
    }
    return Rational(0);
  }

  /// Grammar: edgeless | max-degree:<d> | forest | degenerate:<d>.
  [[nodiscard]] std::string to_string() const {
    switch (kind) {
      case ClassKind::Edgeless: return "edgeless";
      case ClassKind::MaxDegree: return "max-degree:" + std::to_string(d);
      case ClassKind::Forest: return "forest";
      case ClassKind::Degenerate: return "degenerate:" + std::to_string(d);
      case ClassKind::Planar: return "planar";
    }
    return "?";
  }

  static TargetClassSpec parse(std::string_view text) {
    auto colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    auto param = [&]() -> int {
      if (colon == std::string_view::npos) {
        throw ValidationError("class '" + std::string(name) + "' needs a parameter, e.g. " +
                                    std::string(name) + ":1");
      }
      std::string digits(text.substr(colon + 1));
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(digits, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (digits.empty() || used != digits.size() || v < 0) {
        throw ValidationError("bad class parameter in '" + std::string(text) + "'");
      }
      return v;
    };
    auto no_param = [&] {
      if (colon != std::string_view::npos) {
        throw ValidationError("class '" + std::string(name) + "' takes no parameter");
      }
    };
    if (name == "edgeless") return no_param(), edgeless();
    if (name == "forest") return no_param(), forest();
    if (name == "max-degree") return max_degree(param());
    if (name == "degenerate") return degenerate(param());
    if (name == "planar") return {ClassKind::Planar, 0};
    throw ValidationError("unknown class '" + std::string(text) + "'");
  }

  friend bool operator==(const TargetClassSpec&, const TargetClassSpec&) = default;
};

inline void require_supported(const TargetClassSpec& spec) {
  if (!spec.supported()) {
    throw UnsupportedClassError("class '" + spec.to_string() + "' is not supported by any solver");
  }
}

struct DegeneracyResult {
  int degeneracy = 0;
  /// Removal order: every vertex has at most `degeneracy` neighbors later in it.
  std::vector<Vertex> removal_order;
};

/// Repeated minimum-degree removal (ties by lowest id).
inline DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  DegeneracyResult out;
  out.removal_order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    }
    out.degeneracy = std::max(out.degeneracy, deg[pick]);
    removed[pick] = 1;
    out.removal_order.push_back(pick);
    for (Vertex u : g.neighbors(pick)) {
      if (!removed[u]) --deg[u];
    }
  }
  return out;
}

inline bool is_forest(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : g.edges()) {
    int a = find(u);
    int b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Membership of G in the target class.
inline bool recognize(const TargetClassSpec& spec, const Graph& g) {
  switch (spec.kind) {
    case ClassKind::Edgeless: return g.m() == 0;
    case ClassKind::MaxDegree: return g.max_degree() <= spec.d;
    case ClassKind::Forest: return is_forest(g);
    case ClassKind::Degenerate: return degeneracy(g).degeneracy <= spec.d;
    case ClassKind::Planar: break;
  }
  require_supported(spec);
  return false;
}

inline bool recognize_subset(const TargetClassSpec& spec, const Graph& g, std::span<const Vertex> subset) {
  return recognize(spec, induced_subgraph(g, subset).graph);
}

/// True iff G has an induced path on t vertices. Exhaustive DFS over induced
/// paths; exponential in the worst case, meant for small validation inputs.
inline bool has_induced_path(const Graph& g, int t) {
  if (t < 1) throw ValidationError("induced path length must be at least 1");
  if (t > g.n()) return false;
  std::vector<Vertex> path;

  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(path.size()) == t) return true;
    Vertex tail = path.back();
    for (Vertex v : g.neighbors(tail)) {
      // v may touch only the tail among path vertices.
      if (std::find(path.begin(), path.end(), v) != path.end()) continue;
      bool induced = true;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.adjacent(v, path[i])) {
          induced = false;
          break;
        }
      }
      if (!induced) continue;
      path.push_back(v);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  };

  for (Vertex s = 0; s < g.n(); ++s) {
    path.assign(1, s);
    if (extend()) return true;
  }
  return false;
}

/// A vertex set in the host graph with its certificate status.
struct Solution {
  VertexSet vertices;
  int size = 0;

  static Solution of(VertexSet v) {
    Solution s;
    s.vertices = make_vertex_set(std::move(v));
    s.size = static_cast<int>(s.vertices.size());
    return s;
  }

  [[nodiscard]] bool certifies(const TargetClassSpec& spec, const Graph& g) const {
    return size == static_cast<int>(vertices.size()) && recognize_subset(spec, g, vertices);
  }

  /// Larger first, then lexicographically smaller witness.
  [[nodiscard]] bool better_than(const Solution& other) const {
    if (size != other.size) return size > other.size;
    return vertices < other.vertices;
  }

  friend bool operator==(const Solution&, const Solution&) = default;
};

}  // namespace mics
