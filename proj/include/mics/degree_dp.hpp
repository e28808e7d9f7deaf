#pragma once

// Max Induced Degree-d Subgraph over a nice tree decomposition.
//
// Keys are (X, g) with X the chosen bag vertices (slots in ascending bag
// order) and g(a) an allowance for solution neighbors of a that are already
// forgotten. Phi_x[X, g] is the size of a largest Y inside alpha(x) in which
// every vertex of Y has at most d neighbors in X ∪ Y and every a in X has at
// most g(a) neighbors in Y. Degrees inside the bag are recomputed from the
// bag whenever they matter, so join only splits g.

#include <bit>
#include <vector>

#include "mics/dp_engine.hpp"

namespace mics {

/// (X, g) in vertex form; `quota` is aligned to the ascending `members`.
struct DegreeKey {
  VertexSet members;
  std::vector<int> quota;
  friend bool operator==(const DegreeKey&, const DegreeKey&) = default;
};

namespace dp {

inline PackedKey pack(const Table& t, const DegreeKey& key) {
  if (key.members.size() != key.quota.size()) throw std::invalid_argument("members and quota differ in length");
  PackedKey k;
  for (std::size_t i = 0; i < key.members.size(); ++i) {
    int idx = t.index_of(key.members[i]);
    if (idx < 0) throw std::invalid_argument("key vertex not in the bag");
    if (i > 0 && key.members[i - 1] >= key.members[i]) throw std::invalid_argument("members must ascend");
    k.push(idx, key.quota[i]);
  }
  return k;
}

inline int value_at(const Table& t, const DegreeKey& key) {
  const Entry* e = t.find(pack(t, key));
  if (!e) throw std::out_of_range("key not present in table");
  return e->value;
}

/// Every (X, g) over a bag with X listed in ascending index order. In the
/// consistent space, g(a) <= d - deg_X(a) and deg_X(a) <= d.
inline void enumerate_set_keys(int bag_size, const std::vector<std::uint32_t>& adj, int d, KeySpace space,
                               const KeyVisitor& visit) {
  std::vector<int> bound;
  for (std::uint32_t mask = 0; mask < (1U << bag_size); ++mask) {
    PackedKey shape;
    bound.clear();
    bool ok = true;
    for (int i = 0; i < bag_size && ok; ++i) {
      if (!(mask & (1U << i))) continue;
      int inside = std::popcount(adj[i] & mask);
      if (space == KeySpace::Consistent && inside > d) ok = false;
      bound.push_back(space == KeySpace::Consistent ? d - inside : d);
      shape.push(i, 0);
    }
    if (!ok) continue;
    for_each_quota_below(bound, [&](std::uint64_t q) { visit(shape.with_quota(q)); });
  }
}

}  // namespace dp

inline dp::Table degree_dp_introduce(const dp::Table& child, Vertex u, const Graph& g, int d,
                                     const DpOptions& opts = {}) {
  return dp::introduce_with(dp::enumerate_set_keys, child, u, g, d, opts);
}

/// Forget u: u stays out, or u joins Y. Joining needs deg_X(u) <= d, leaves u
/// an allowance of d - deg_X(u) below, and costs each bag neighbor one unit.
inline dp::Table degree_dp_forget(const dp::Table& child, Vertex u, const Graph& g, int d,
                                  const DpOptions& opts = {}) {
  const int pu = child.index_of(u);
  if (pu < 0) throw std::logic_error("forgotten vertex not in the child bag");
  dp::Table t;
  for (Vertex v : child.bag) {
    if (v != u) t.bag.push_back(v);
  }
  const auto to_child = dp::skip_index_map(static_cast<int>(t.bag.size()), pu);
  const std::uint32_t u_nbrs = dp::bag_adjacency(g, child.bag)[pu];
  std::vector<int> bound;

  dp::enumerate_set_keys(
      static_cast<int>(t.bag.size()), dp::bag_adjacency(g, t.bag), d, opts.key_space, [&](const dp::PackedKey& k) {
        const dp::PackedKey c0 = dp::remap(k, to_child);
        dp::Entry best{dp::lookup(child, c0, opts), -1, 0, 0};
        ++t.work;
        const int inside = std::popcount(u_nbrs & c0.mask());
        if (inside > d) {
          t.entries.emplace(k, best);
          return;
        }
        int p = 0;  // slot of u keeping ascending order
        while (p < k.len && c0.at(p) < pu) ++p;
        bound.assign(static_cast<std::size_t>(k.len) + 1, 0);
        for (int i = 0, s = 0; i <= k.len; ++i) {
          if (i == p) {
            bound[i] = d - inside;
            continue;
          }
          int q = c0.quota_at(s);
          if ((u_nbrs >> c0.at(s)) & 1U) {
            if (q == 0) {
              t.entries.emplace(k, best);
              return;
            }
            --q;
          }
          bound[i] = q;
          ++s;
        }
        const dp::PackedKey shape = c0.inserted(p, pu, 0);
        auto consider = [&](std::uint64_t quota) {
          ++t.work;
          int v = 1 + dp::lookup(child, shape.with_quota(quota), opts);
          if (v > best.value) best = dp::Entry{v, static_cast<std::int8_t>(p), quota, 0};
        };
        if (opts.literal_transitions) {
          dp::for_each_quota_below(bound, consider);
        } else {
          std::uint64_t tight = 0;
          for (std::size_t i = 0; i < bound.size(); ++i) tight |= static_cast<std::uint64_t>(bound[i]) << (4 * i);
          consider(tight);
        }
        t.entries.emplace(k, best);
      });
  if (opts.drop_dominated) dp::drop_dominated_keys(t);
  return t;
}

inline dp::Table degree_dp_join(const dp::Table& left, const dp::Table& right, const Graph& g, int d,
                                const DpOptions& opts = {}) {
  return dp::join_with(dp::enumerate_set_keys, left, right, g, d, opts);
}

struct DegreePolicy {
  static void enumerate(int bag_size, const std::vector<std::uint32_t>& adj, int d, KeySpace space,
                        const dp::KeyVisitor& visit) {
    dp::enumerate_set_keys(bag_size, adj, d, space, visit);
  }
  static dp::Table forget(const dp::Table& child, Vertex u, const Graph& g, int d, const DpOptions& opts) {
    return degree_dp_forget(child, u, g, d, opts);
  }
};

using DegreeDp = TreeDp<DegreePolicy>;

/// Largest A with max degree of G[A] at most d; certificate re-checked.
inline Solution solve_degree(const Graph& g, const NiceTreeDecomposition& nice, int d, DpOptions opts = {},
                             DpStats* stats = nullptr) {
  DegreeDp run(g, nice, d, opts);
  Solution s = run.solution();
  if (s.size != run.value() || !s.certifies(TargetClassSpec::max_degree(d), g)) {
    throw std::logic_error("degree DP traceback produced an invalid witness");
  }
  if (stats) *stats = run.stats();
  return s;
}

}  // namespace mics
