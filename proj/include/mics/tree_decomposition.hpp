#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mics/graph.hpp"
#include "mics/graph_io.hpp"

namespace mics {

/// Rooted tree decomposition: node x has bag bags[x] (sorted) and parent
/// parent[x] (-1 for the root).
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  int root = -1;
  int num_vertices = 0;  // vertex count of the decomposed graph

  int add_node(VertexSet bag, int parent_node) {
    int id = static_cast<int>(bags.size());
    bags.push_back(make_vertex_set(std::move(bag)));
    parent.push_back(parent_node);
    children.emplace_back();
    if (parent_node >= 0) {
      children[parent_node].push_back(id);
    } else if (root < 0) {
      root = id;
    }
    return id;
  }

  void set_parent(int node, int new_parent) {
    if (int old = parent[node]; old >= 0) {
      auto& c = children[old];
      c.erase(std::remove(c.begin(), c.end(), node), c.end());
    }
    parent[node] = new_parent;
    if (new_parent >= 0) children[new_parent].push_back(node);
  }

  [[nodiscard]] int size() const { return static_cast<int>(bags.size()); }

  [[nodiscard]] int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }

  /// Children before parents; siblings in insertion order.
  [[nodiscard]] std::vector<int> postorder() const {
    std::vector<int> order;
    if (root < 0) return order;
    order.reserve(bags.size());
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next < children[x].size()) {
        int c = children[x][next++];
        stack.emplace_back(c, 0);
      } else {
        order.push_back(x);
        stack.pop_back();
      }
    }
    return order;
  }
};

enum class NodeKind { Leaf, Introduce, Forget, Join };

inline std::string_view node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "?";
}

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
};

struct NiceTreeDecomposition {
  TreeDecomposition td;
  std::vector<NiceNode> nodes;

  [[nodiscard]] int width() const { return td.width(); }
  [[nodiscard]] int size() const { return td.size(); }
};

struct Violation {
  enum class Kind { Structure, VertexMissing, VertexDisconnected, EdgeUncovered, NiceKind, RootBag };
  Kind kind = Kind::Structure;
  int node = -1;
  Vertex vertex = -1;
  std::pair<Vertex, Vertex> edge{-1, -1};
  std::string message;
};

namespace detail {

inline std::optional<Violation> validate_structure(const TreeDecomposition& td, const Graph& g) {
  auto fail = [](int node, std::string msg) {
    Violation v;
    v.kind = Violation::Kind::Structure;
    v.node = node;
    v.message = std::move(msg);
    return v;
  };
  const int k = td.size();
  if (k == 0) return fail(-1, "decomposition has no nodes");
  if (static_cast<int>(td.parent.size()) != k || static_cast<int>(td.children.size()) != k) {
    return fail(-1, "parent/children arrays do not match bag count");
  }
  if (td.num_vertices != g.n()) return fail(-1, "decomposition was built for a different vertex count");
  if (td.root < 0 || td.root >= k || td.parent[td.root] != -1) return fail(td.root, "root is not a parentless node");
  for (int x = 0; x < k; ++x) {
    if (x != td.root && (td.parent[x] < 0 || td.parent[x] >= k)) return fail(x, "node without a valid parent");
    for (int c : td.children[x]) {
      if (c < 0 || c >= k || td.parent[c] != x) return fail(x, "children list disagrees with parent links");
    }
    const auto& b = td.bags[x];
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] < 0 || b[i] >= g.n()) return fail(x, "bag vertex out of range");
      if (i > 0 && b[i - 1] >= b[i]) return fail(x, "bag not sorted or has duplicates");
    }
  }
  if (static_cast<int>(td.postorder().size()) != k) return fail(td.root, "nodes unreachable from the root");
  return std::nullopt;
}

inline bool bag_contains(const VertexSet& bag, Vertex v) { return std::binary_search(bag.begin(), bag.end(), v); }

inline std::optional<Violation> validate_nice_kinds(const NiceTreeDecomposition& nice) {
  const auto& td = nice.td;
  auto fail = [](Violation::Kind kind, int node, Vertex v, std::string msg) {
    Violation out;
    out.kind = kind;
    out.node = node;
    out.vertex = v;
    out.message = std::move(msg);
    return out;
  };
  if (static_cast<int>(nice.nodes.size()) != td.size()) {
    return fail(Violation::Kind::NiceKind, -1, -1, "node kind array does not match node count");
  }
  if (!td.bags[td.root].empty()) return fail(Violation::Kind::RootBag, td.root, -1, "root bag is not empty");
  for (int x = 0; x < td.size(); ++x) {
    const auto& kids = td.children[x];
    const auto& bag = td.bags[x];
    const NiceNode& node = nice.nodes[x];
    switch (node.kind) {
      case NodeKind::Leaf:
        if (!kids.empty() || !bag.empty()) {
          return fail(Violation::Kind::NiceKind, x, -1, "leaf must have no children and an empty bag");
        }
        break;
      case NodeKind::Introduce: {
        if (kids.size() != 1) return fail(Violation::Kind::NiceKind, x, node.vertex, "introduce needs one child");
        const auto& child = td.bags[kids[0]];
        VertexSet expect = child;
        expect.push_back(node.vertex);
        expect = make_vertex_set(std::move(expect));
        if (bag_contains(child, node.vertex) || expect != bag) {
          return fail(Violation::Kind::NiceKind, x, node.vertex, "introduce bag must be child bag plus the vertex");
        }
        break;
      }
      case NodeKind::Forget: {
        if (kids.size() != 1) return fail(Violation::Kind::NiceKind, x, node.vertex, "forget needs one child");
        const auto& child = td.bags[kids[0]];
        VertexSet expect;
        for (Vertex v : child) {
          if (v != node.vertex) expect.push_back(v);
        }
        if (!bag_contains(child, node.vertex) || expect != bag) {
          return fail(Violation::Kind::NiceKind, x, node.vertex, "forget bag must be child bag minus the vertex");
        }
        break;
      }
      case NodeKind::Join:
        if (kids.size() != 2 || td.bags[kids[0]] != bag || td.bags[kids[1]] != bag) {
          return fail(Violation::Kind::NiceKind, x, -1, "join needs two children with identical bags");
        }
        break;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks tree structure, (T1) connected non-empty occurrence subtrees and
/// (T2) edge coverage. Returns the first violation found, if any.
inline std::optional<Violation> validate(const TreeDecomposition& td, const Graph& g) {
  if (auto v = detail::validate_structure(td, g)) return v;
  const int n = g.n();
  std::vector<int> occurrences(static_cast<std::size_t>(n), 0);
  std::vector<int> tops(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < td.size(); ++x) {
    int p = td.parent[x];
    for (Vertex v : td.bags[x]) {
      ++occurrences[v];
      if (p < 0 || !detail::bag_contains(td.bags[p], v)) ++tops[v];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    Violation out;
    out.vertex = v;
    if (occurrences[v] == 0) {
      out.kind = Violation::Kind::VertexMissing;
      out.message = "T1: vertex " + std::to_string(v) + " appears in no bag";
      return out;
    }
    if (tops[v] != 1) {
      out.kind = Violation::Kind::VertexDisconnected;
      out.message = "T1: bags containing vertex " + std::to_string(v) + " are not connected";
      return out;
    }
  }
  std::vector<std::vector<int>> where(static_cast<std::size_t>(n));
  for (int x = 0; x < td.size(); ++x) {
    for (Vertex v : td.bags[x]) where[v].push_back(x);
  }
  for (auto [u, v] : g.edges()) {
    bool covered = std::any_of(where[u].begin(), where[u].end(),
                               [&](int x) { return detail::bag_contains(td.bags[x], v); });
    if (!covered) {
      Violation out;
      out.kind = Violation::Kind::EdgeUncovered;
      out.edge = {u, v};
      out.message = "T2: edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
      return out;
    }
  }
  return std::nullopt;
}

/// validate() plus the leaf/introduce/forget/join rules and the empty root bag.
inline std::optional<Violation> validate(const NiceTreeDecomposition& nice, const Graph& g) {
  if (auto v = validate(nice.td, g)) return v;
  return detail::validate_nice_kinds(nice);
}

/// alpha(x): vertices in bags of the subtree below x (inclusive) minus bag(x).
inline VertexSet component(const TreeDecomposition& td, int x) {
  std::vector<Vertex> out;
  std::vector<int> stack{x};
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    for (Vertex v : td.bags[y]) {
      if (!detail::bag_contains(td.bags[x], v)) out.push_back(v);
    }
    for (int c : td.children[y]) stack.push_back(c);
  }
  return make_vertex_set(std::move(out));
}

/// Converts a valid decomposition into a nice one of no larger width.
/// Multi-child nodes become left-deep chains of binary joins; bag changes
/// along an edge become forget chains followed by introduce chains, each in
/// ascending vertex order. Node count is at most 6 * (width + 1) * size(td).
inline NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g) {
  if (auto v = validate(td, g)) throw ValidationError("make_nice on invalid decomposition: " + v->message);
  NiceTreeDecomposition nice;
  nice.td.num_vertices = td.num_vertices;
  auto& out = nice.td;

  auto add = [&](VertexSet bag, NiceNode kind, std::vector<int> kids) {
    int id = static_cast<int>(out.bags.size());
    out.bags.push_back(std::move(bag));
    out.parent.push_back(-1);
    out.children.push_back(kids);
    for (int c : kids) out.parent[c] = id;
    nice.nodes.push_back(kind);
    return id;
  };
  // Moves from a subtree whose top bag is `from` to bag `to`.
  auto adapt = [&](int top, const VertexSet& from, const VertexSet& to) {
    VertexSet current = from;
    for (Vertex v : from) {
      if (!detail::bag_contains(to, v)) {
        current.erase(std::find(current.begin(), current.end(), v));
        top = add(current, {NodeKind::Forget, v}, {top});
      }
    }
    for (Vertex v : to) {
      if (!detail::bag_contains(from, v)) {
        current.insert(std::upper_bound(current.begin(), current.end(), v), v);
        top = add(current, {NodeKind::Introduce, v}, {top});
      }
    }
    return top;
  };

  std::vector<int> top_of(static_cast<std::size_t>(td.size()), -1);
  for (int x : td.postorder()) {
    const auto& bag = td.bags[x];
    int top = -1;
    if (td.children[x].empty()) {
      int leaf = add({}, {NodeKind::Leaf, -1}, {});
      top = adapt(leaf, {}, bag);
    } else {
      for (int c : td.children[x]) {
        int branch = adapt(top_of[c], td.bags[c], bag);
        top = top < 0 ? branch : add(bag, {NodeKind::Join, -1}, {top, branch});
      }
    }
    top_of[x] = top;
  }
  out.root = adapt(top_of[td.root], td.bags[td.root], {});
  return nice;
}

/// PACE ".td": "s td <bags> <width+1> <n>", "b <id> <v...>", then tree edges; 1-based.
inline void write_td(std::ostream& os, const TreeDecomposition& td) {
  os << "s td " << td.size() << ' ' << td.width() + 1 << ' ' << td.num_vertices << '\n';
  for (int x = 0; x < td.size(); ++x) {
    os << "b " << x + 1;
    for (Vertex v : td.bags[x]) os << ' ' << v + 1;
    os << '\n';
  }
  for (int x = 0; x < td.size(); ++x) {
    if (td.parent[x] >= 0) os << std::min(x, td.parent[x]) + 1 << ' ' << std::max(x, td.parent[x]) + 1 << '\n';
  }
}

/// Reads a PACE ".td" file and roots it at bag 1.
inline TreeDecomposition read_td(std::istream& in) {
  std::string line;
  int lineno = 0;
  int declared = -1;
  TreeDecomposition td;
  std::vector<std::vector<int>> adj;
  std::vector<VertexSet> bags;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_tokens(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "s") {
      if (toks.size() != 5 || toks[1] != "td") throw ParseError(lineno, "header must read 's td <bags> <w+1> <n>'");
      declared = static_cast<int>(detail::parse_integer(toks[2], lineno));
      td.num_vertices = static_cast<int>(detail::parse_integer(toks[4], lineno));
      bags.assign(static_cast<std::size_t>(declared), {});
      adj.assign(static_cast<std::size_t>(declared), {});
      continue;
    }
    if (declared < 0) throw ParseError(lineno, "content before header");
    if (toks[0] == "b") {
      if (toks.size() < 2) throw ParseError(lineno, "bag line needs an id");
      long id = detail::parse_integer(toks[1], lineno);
      if (id < 1 || id > declared) throw ParseError(lineno, "bag id out of range");
      for (std::size_t i = 2; i < toks.size(); ++i) {
        long v = detail::parse_integer(toks[i], lineno);
        if (v < 1 || v > td.num_vertices) throw ParseError(lineno, "bag vertex out of range");
        bags[id - 1].push_back(static_cast<Vertex>(v - 1));
      }
      continue;
    }
    if (toks.size() != 2) throw ParseError(lineno, "tree edge line must have two bag ids");
    long a = detail::parse_integer(toks[0], lineno);
    long b = detail::parse_integer(toks[1], lineno);
    if (a < 1 || b < 1 || a > declared || b > declared) throw ParseError(lineno, "tree edge bag id out of range");
    adj[a - 1].push_back(static_cast<int>(b - 1));
    adj[b - 1].push_back(static_cast<int>(a - 1));
  }
  if (declared < 0) throw ParseError(lineno, "missing header");
  if (declared == 0) return td;
  std::size_t degree_sum = 0;
  for (const auto& a : adj) degree_sum += a.size();
  if (degree_sum != 2 * static_cast<std::size_t>(declared - 1)) throw ParseError(lineno, "tree edges do not form a tree");
  std::vector<int> parent(static_cast<std::size_t>(declared), -2);
  std::vector<int> order{0};
  parent[0] = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int y : adj[order[i]]) {
      if (parent[y] == -2) {
        parent[y] = order[i];
        order.push_back(y);
      }
    }
  }
  if (static_cast<int>(order.size()) != declared) throw ParseError(lineno, "tree edges do not connect all bags");
  for (int x = 0; x < declared; ++x) td.add_node(std::move(bags[x]), -1);
  td.root = 0;
  for (int x = 1; x < declared; ++x) td.set_parent(x, parent[x]);
  return td;
}

}  // namespace mics
