#pragma once

// Max Induced d-Degenerate Subgraph over a nice tree decomposition.
//
// Phi_x[X, sigma, f] is the size of a largest Y inside the component alpha(x)
// such that X ∪ Y has an ordering extending sigma in which every vertex of Y
// has at most d smaller neighbors and every a in X has at most f(a) smaller
// neighbors in Y. The answer is Phi_root[∅, ∅, ∅].

#include <bit>
#include <vector>

#include "mics/dp_engine.hpp"

namespace mics {

/// (X, sigma, f) in vertex form: X is the set of `order`, f is aligned to it.
struct DegenerateKey {
  std::vector<Vertex> order;
  std::vector<int> quota;
  friend bool operator==(const DegenerateKey&, const DegenerateKey&) = default;
};

namespace dp {

inline PackedKey pack(const Table& t, const DegenerateKey& key) {
  if (key.order.size() != key.quota.size()) throw std::invalid_argument("order and quota differ in length");
  PackedKey k;
  for (std::size_t i = 0; i < key.order.size(); ++i) {
    int idx = t.index_of(key.order[i]);
    if (idx < 0) throw std::invalid_argument("key vertex " + std::to_string(key.order[i]) + " is not in the bag");
    if (key.quota[i] < 0 || key.quota[i] > kMaxQuota) throw std::invalid_argument("quota out of range");
    k.push(idx, key.quota[i]);
  }
  return k;
}

inline DegenerateKey unpack(const Table& t, const PackedKey& k) {
  DegenerateKey out;
  for (int i = 0; i < k.len; ++i) {
    out.order.push_back(t.bag[k.at(i)]);
    out.quota.push_back(k.quota_at(i));
  }
  return out;
}

/// Value stored for a vertex-form key; throws if the key is not materialized.
inline int value_at(const Table& t, const DegenerateKey& key) {
  const Entry* e = t.find(pack(t, key));
  if (!e) throw std::out_of_range("key not present in table");
  return e->value;
}

/// Every ordered key over a bag. A prefix is visited before its extensions.
/// In the consistent space a vertex with l earlier bag neighbors needs l <= d
/// and gets quotas 0..d-l.
inline void enumerate_ordered_keys(int bag_size, const std::vector<std::uint32_t>& adj, int d, KeySpace space,
                                   const KeyVisitor& visit) {
  PackedKey cur;
  std::uint32_t used = 0;
  std::function<void()> rec = [&]() {
    visit(cur);
    for (int i = 0; i < bag_size; ++i) {
      if (used & (1U << i)) continue;
      int earlier = std::popcount(adj[i] & used);
      if (space == KeySpace::Consistent && earlier > d) continue;
      int top = space == KeySpace::Consistent ? d - earlier : d;
      used |= 1U << i;
      for (int q = 0; q <= top; ++q) {
        cur.push(i, q);
        rec();
        cur.pop();
      }
      used &= ~(1U << i);
    }
  };
  rec();
}

/// Size of the full key space of a bag: sum_j C(b, j) * j! * (d+1)^j.
inline long long full_ordered_key_count(int bag_size, int d) {
  long long total = 0;
  long long arrangements = 1;  // b! / (b-j)!
  long long quotas = 1;
  for (int j = 0; j <= bag_size; ++j) {
    total += arrangements * quotas;
    arrangements *= bag_size - j;
    quotas *= d + 1;
  }
  return total;
}

}  // namespace dp

/// Leaf: the single entry Phi[∅, ∅, ∅] = 0.
inline dp::Table dp_leaf() { return dp::leaf_table(); }

inline dp::Table dp_introduce(const dp::Table& child, Vertex u, const Graph& g, int d, const DpOptions& opts = {}) {
  return dp::introduce_with(dp::enumerate_ordered_keys, child, u, g, d, opts);
}

/// Forget u: either u stays out of the solution, or u joins Y at slot p of
/// sigma'. Neighbors placed after u spend one unit of quota; u may keep
/// d - l smaller neighbors below, where l counts its smaller neighbors in X.
inline dp::Table dp_forget(const dp::Table& child, Vertex u, const Graph& g, int d, const DpOptions& opts = {}) {
  const int pu = child.index_of(u);
  if (pu < 0) throw std::logic_error("forgotten vertex not in the child bag");
  dp::Table t;
  for (Vertex v : child.bag) {
    if (v != u) t.bag.push_back(v);
  }
  const auto to_child = dp::skip_index_map(static_cast<int>(t.bag.size()), pu);
  const std::uint32_t u_nbrs = dp::bag_adjacency(g, child.bag)[pu];
  std::vector<int> bound;

  dp::enumerate_ordered_keys(
      static_cast<int>(t.bag.size()), dp::bag_adjacency(g, t.bag), d, opts.key_space, [&](const dp::PackedKey& k) {
        const dp::PackedKey c0 = dp::remap(k, to_child);
        dp::Entry best{dp::lookup(child, c0, opts), -1, 0, 0};
        ++t.work;
        int smaller = 0;
        for (int p = 0; p <= k.len; ++p) {
          if (p > 0 && ((u_nbrs >> c0.at(p - 1)) & 1U)) ++smaller;
          if (smaller > d) break;
          bool feasible = true;
          bound.assign(static_cast<std::size_t>(k.len) + 1, 0);
          for (int i = 0, s = 0; i <= k.len; ++i) {
            if (i == p) {
              bound[i] = d - smaller;
              continue;
            }
            int q = c0.quota_at(s);
            if (s >= p && ((u_nbrs >> c0.at(s)) & 1U)) {
              if (q == 0) {
                feasible = false;
                break;
              }
              --q;
            }
            bound[i] = q;
            ++s;
          }
          if (!feasible) continue;
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
        }
        t.entries.emplace(k, best);
      });
  if (opts.drop_dominated) dp::drop_dominated_keys(t);
  return t;
}

inline dp::Table dp_join(const dp::Table& left, const dp::Table& right, const Graph& g, int d,
                         const DpOptions& opts = {}) {
  return dp::join_with(dp::enumerate_ordered_keys, left, right, g, d, opts);
}

struct DegeneratePolicy {
  static void enumerate(int bag_size, const std::vector<std::uint32_t>& adj, int d, KeySpace space,
                        const dp::KeyVisitor& visit) {
    dp::enumerate_ordered_keys(bag_size, adj, d, space, visit);
  }
  static dp::Table forget(const dp::Table& child, Vertex u, const Graph& g, int d, const DpOptions& opts) {
    return dp_forget(child, u, g, d, opts);
  }
};

using DegenerateDp = TreeDp<DegeneratePolicy>;

/// Largest vertex set inducing a d-degenerate subgraph. The traced-back
/// witness is re-checked with the recognizer before it is returned.
inline Solution solve_degenerate(const Graph& g, const NiceTreeDecomposition& nice, int d, DpOptions opts = {},
                                 DpStats* stats = nullptr) {
  DegenerateDp run(g, nice, d, opts);
  Solution s = run.solution();
  if (s.size != run.value() || !s.certifies(TargetClassSpec::degenerate(d), g)) {
    throw std::logic_error("degenerate DP traceback produced an invalid witness");
  }
  if (stats) *stats = run.stats();
  return s;
}

}  // namespace mics
