#pragma once

// Shared machinery for the treewidth DPs: key remapping, the introduce and
// join transitions (identical for every key shape), the bottom-up runner,
// traceback and the debug table dump.

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "mics/dp_table.hpp"
#include "mics/graph.hpp"
#include "mics/target_class.hpp"
#include "mics/tree_decomposition.hpp"

namespace mics {

namespace dp {

using KeyVisitor = std::function<void(const PackedKey&)>;
using KeyEnumerator =
    std::function<void(int bag_size, const std::vector<std::uint32_t>& adj, int d, KeySpace, const KeyVisitor&)>;

/// Rewrites bag indices through `index_map` (old index -> new index).
inline PackedKey remap(const PackedKey& k, const std::vector<int>& index_map) {
  PackedKey out = k;
  for (int i = 0; i < k.len; ++i) out.set(i, index_map[k.at(i)]);
  return out;
}

/// Index maps between a bag and the same bag without the vertex at `removed`.
inline std::vector<int> drop_index_map(int bag_size, int removed) {
  std::vector<int> m(static_cast<std::size_t>(bag_size));
  for (int i = 0; i < bag_size; ++i) m[i] = i < removed ? i : i - 1;
  return m;
}
inline std::vector<int> skip_index_map(int bag_size, int removed) {
  std::vector<int> m(static_cast<std::size_t>(bag_size));
  for (int i = 0; i < bag_size; ++i) m[i] = i < removed ? i : i + 1;
  return m;
}

inline Table leaf_table() {
  Table t;
  t.entries.emplace(PackedKey{}, Entry{});
  return t;
}

/// Keys holding u read the child at the key with u's slot removed; other keys
/// copy the child value.
inline Table introduce_with(const KeyEnumerator& enumerate, const Table& child, Vertex u, const Graph& g, int d,
                            const DpOptions& opts) {
  if (child.index_of(u) >= 0) throw std::logic_error("introduced vertex already in the child bag");
  Table t;
  t.bag = child.bag;
  t.bag.insert(std::upper_bound(t.bag.begin(), t.bag.end(), u), u);
  const int pu = t.index_of(u);
  const auto to_child = drop_index_map(static_cast<int>(t.bag.size()), pu);
  enumerate(static_cast<int>(t.bag.size()), bag_adjacency(g, t.bag), d, opts.key_space, [&](const PackedKey& k) {
    int slot = k.find(pu);
    PackedKey c = remap(slot < 0 ? k : k.erased(slot), to_child);
    ++t.work;
    t.entries.emplace(k, Entry{lookup(child, c, opts), -1, 0, 0});
  });
  if (opts.drop_dominated) drop_dominated_keys(t);
  return t;
}

/// Best split f_left + f_right <= f of the quotas over the two children.
inline Table join_with(const KeyEnumerator& enumerate, const Table& left, const Table& right, const Graph& g, int d,
                       const DpOptions& opts) {
  if (left.bag != right.bag) throw std::logic_error("join children have different bags");
  Table t;
  t.bag = left.bag;
  enumerate(static_cast<int>(t.bag.size()), bag_adjacency(g, t.bag), d, opts.key_space, [&](const PackedKey& k) {
    Entry best{-1, -1, 0, 0};
    for_each_quota_below(quota_vector(k), [&](std::uint64_t left_quota) {
      // Slot-wise left <= full, so the packed subtraction never borrows.
      const std::uint64_t rest = k.quota - left_quota;
      const int lv = lookup(left, k.with_quota(left_quota), opts);
      auto consider = [&](std::uint64_t right_quota) {
        ++t.work;
        int v = lv + lookup(right, k.with_quota(right_quota), opts);
        if (v > best.value) best = Entry{v, -1, left_quota, right_quota};
      };
      if (opts.literal_transitions) {
        for_each_quota_below(quota_vector(k.with_quota(rest)), consider);
      } else {
        consider(rest);
      }
    });
    t.entries.emplace(k, best);
  });
  if (opts.drop_dominated) drop_dominated_keys(t);
  return t;
}

}  // namespace dp

namespace detail {

inline void check_dp_input(const Graph& g, const NiceTreeDecomposition& nice, int d, const DpOptions& opts) {
  if (d < 0) throw ValidationError("degree parameter must be non-negative");
  if (auto v = validate(nice, g)) throw ValidationError("invalid nice decomposition: " + v->message);
  const int cap = std::min(opts.width_cap, dp::kMaxBag - 1);
  if (nice.width() > cap) throw WidthCapExceeded(nice.width(), cap);
}

// Quotas above the maximum degree never bind, so a large d can be lowered
// to fit the 4-bit quota slots without changing the optimum.
inline int effective_quota(const Graph& g, int d) {
  if (d <= dp::kMaxQuota) return d;
  int eff = std::min(d, g.max_degree());
  if (eff > dp::kMaxQuota) {
    throw ValidationError("quota " + std::to_string(d) + " too large for the packed DP tables");
  }
  return eff;
}

}  // namespace detail

/// Bottom-up run over a nice decomposition with every node table retained.
/// Policy supplies `enumerate` (the key space of a bag) and `forget`.
template <typename Policy>
class TreeDp {
 public:
  TreeDp(const Graph& g, const NiceTreeDecomposition& nice, int d, DpOptions opts = {}) : nice_(&nice), opts_(opts) {
    detail::check_dp_input(g, nice, d, opts);
    d_ = detail::effective_quota(g, d);
    tables_.resize(static_cast<std::size_t>(nice.size()));
    stats_.width = nice.width();
    const dp::KeyEnumerator enumerate = Policy::enumerate;
    for (int x : nice.td.postorder()) {
      const auto& kids = nice.td.children[x];
      const NiceNode& node = nice.nodes[x];
      switch (node.kind) {
        case NodeKind::Leaf: tables_[x] = dp::leaf_table(); break;
        case NodeKind::Introduce:
          tables_[x] = dp::introduce_with(enumerate, tables_[kids[0]], node.vertex, g, d_, opts_);
          break;
        case NodeKind::Forget: tables_[x] = Policy::forget(tables_[kids[0]], node.vertex, g, d_, opts_); break;
        case NodeKind::Join:
          tables_[x] = dp::join_with(enumerate, tables_[kids[0]], tables_[kids[1]], g, d_, opts_);
          break;
      }
      stats_.record(tables_[x]);
    }
  }

  /// Root value for the empty key.
  [[nodiscard]] int value() const { return tables_[nice_->td.root].find(dp::PackedKey{})->value; }

  [[nodiscard]] const dp::Table& table(int node) const { return tables_[node]; }
  [[nodiscard]] const std::vector<dp::Table>& tables() const { return tables_; }
  [[nodiscard]] const DpStats& stats() const { return stats_; }
  [[nodiscard]] const NiceTreeDecomposition& decomposition() const { return *nice_; }
  [[nodiscard]] int quota_limit() const { return d_; }

  /// Follows stored choices from the root; the solution is the set of
  /// vertices whose forget node took the "used" branch.
  [[nodiscard]] Solution solution() const {
    const auto& td = nice_->td;
    std::vector<Vertex> chosen;
    std::vector<std::pair<int, dp::PackedKey>> stack{{td.root, dp::PackedKey{}}};
    while (!stack.empty()) {
      auto [x, key] = stack.back();
      stack.pop_back();
      dp::PackedKey k;
      dp::lookup(tables_[x], key, opts_, &k);
      const dp::Entry& e = *tables_[x].find(k);
      const NiceNode& node = nice_->nodes[x];
      const auto& kids = td.children[x];
      const int bag_size = static_cast<int>(tables_[x].bag.size());
      switch (node.kind) {
        case NodeKind::Leaf: break;
        case NodeKind::Introduce: {
          const int pu = tables_[x].index_of(node.vertex);
          int slot = k.find(pu);
          stack.emplace_back(kids[0], dp::remap(slot < 0 ? k : k.erased(slot), dp::drop_index_map(bag_size, pu)));
          break;
        }
        case NodeKind::Forget: {
          const int pu = tables_[kids[0]].index_of(node.vertex);
          dp::PackedKey c0 = dp::remap(k, dp::skip_index_map(bag_size, pu));
          if (e.choice < 0) {
            stack.emplace_back(kids[0], c0);
          } else {
            chosen.push_back(node.vertex);
            stack.emplace_back(kids[0], c0.inserted(e.choice, pu, 0).with_quota(e.aux));
          }
          break;
        }
        case NodeKind::Join:
          stack.emplace_back(kids[0], k.with_quota(e.aux));
          stack.emplace_back(kids[1], k.with_quota(e.aux2));
          break;
      }
    }
    return Solution::of(std::move(chosen));
  }

 private:
  const NiceTreeDecomposition* nice_;
  DpOptions opts_;
  int d_ = 0;
  std::vector<dp::Table> tables_;
  DpStats stats_;
};

/// "node <id> kind <k> key <X|sigma|f> phi <v>" lines; X ascending, sigma and f
/// comma-separated, keys in canonical (X, sigma, f) order.
inline void dump_tables(std::ostream& os, const NiceTreeDecomposition& nice, const std::vector<dp::Table>& tables) {
  auto join_ints = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  struct Row {
    std::vector<int> members, order, quota;
    int value;
  };
  for (int x = 0; x < static_cast<int>(tables.size()); ++x) {
    std::vector<Row> rows;
    const auto& t = tables[x];
    for (const auto& [k, e] : t.entries) {
      Row r{{}, {}, {}, e.value};
      for (int i = 0; i < k.len; ++i) {
        r.order.push_back(t.bag[k.at(i)]);
        r.quota.push_back(k.quota_at(i));
      }
      r.members = r.order;
      std::sort(r.members.begin(), r.members.end());
      rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      return std::tie(a.members, a.order, a.quota) < std::tie(b.members, b.order, b.quota);
    });
    for (const auto& r : rows) {
      os << "node " << x << " kind " << node_kind_name(nice.nodes[x].kind) << " key " << join_ints(r.members) << '|'
         << join_ints(r.order) << '|' << join_ints(r.quota) << " phi " << r.value << '\n';
    }
  }
}

}  // namespace mics
