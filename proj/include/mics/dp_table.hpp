#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mics/graph.hpp"

namespace mics {

class WidthCapExceeded : public std::runtime_error {
 public:
  WidthCapExceeded(int width, int cap)
      : std::runtime_error("decomposition width " + std::to_string(width) + " exceeds the DP width cap " +
                           std::to_string(cap) +
                           "; use the branching driver, a better decomposition, or raise --width-cap"),
        width_(width),
        cap_(cap) {}
  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int cap() const { return cap_; }

 private:
  int width_;
  int cap_;
};

/// Which (X, order, quota) triples a table materializes.
enum class KeySpace {
  /// Every triple with quotas in [0, d].
  Full,
  /// Only triples the root can reach: each quota plus the in-bag usage of the
  /// vertex stays within d.
  Consistent,
};

struct DpOptions {
  KeySpace key_space = KeySpace::Consistent;
  /// Enumerate every quota assignment below the bounds in forget/join instead
  /// of only the tight ones.
  bool literal_transitions = false;
  /// Drop keys whose value equals that of a pointwise-smaller quota.
  bool drop_dominated = false;
  int width_cap = 10;
};

namespace dp {

inline constexpr int kMaxBag = 16;
inline constexpr int kMaxQuota = 15;

/// A table key in bag-local form. Slot i of `order` holds the bag index of
/// the i-th chosen vertex; slot i of `quota` holds its quota. Both are packed
/// as 4-bit nibbles.
struct PackedKey {
  std::uint64_t order = 0;
  std::uint64_t quota = 0;
  std::uint8_t len = 0;

  [[nodiscard]] int at(int i) const { return static_cast<int>((order >> (4 * i)) & 0xF); }
  [[nodiscard]] int quota_at(int i) const { return static_cast<int>((quota >> (4 * i)) & 0xF); }

  void set(int i, int bag_index) {
    order = (order & ~(std::uint64_t{0xF} << (4 * i))) | (static_cast<std::uint64_t>(bag_index) << (4 * i));
  }
  void set_quota(int i, int q) {
    quota = (quota & ~(std::uint64_t{0xF} << (4 * i))) | (static_cast<std::uint64_t>(q) << (4 * i));
  }

  void push(int bag_index, int q) {
    set(len, bag_index);
    set_quota(len, q);
    ++len;
  }
  void pop() {
    --len;
    set(len, 0);
    set_quota(len, 0);
  }

  /// Inserts a slot at position p, shifting later slots right.
  [[nodiscard]] PackedKey inserted(int p, int bag_index, int q) const {
    PackedKey out;
    for (int i = 0, j = 0; i <= len; ++i) {
      if (i == p) {
        out.push(bag_index, q);
      } else {
        out.push(at(j), quota_at(j));
        ++j;
      }
    }
    return out;
  }

  /// Removes slot p.
  [[nodiscard]] PackedKey erased(int p) const {
    PackedKey out;
    for (int i = 0; i < len; ++i) {
      if (i != p) out.push(at(i), quota_at(i));
    }
    return out;
  }

  [[nodiscard]] int find(int bag_index) const {
    for (int i = 0; i < len; ++i) {
      if (at(i) == bag_index) return i;
    }
    return -1;
  }

  [[nodiscard]] std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < len; ++i) m |= 1U << at(i);
    return m;
  }

  /// Same order, different quotas.
  [[nodiscard]] PackedKey with_quota(std::uint64_t q) const {
    PackedKey out = *this;
    out.quota = q;
    return out;
  }

  friend bool operator==(const PackedKey&, const PackedKey&) = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const noexcept {
    std::uint64_t h = k.order * 0x9E3779B97F4A7C15ULL;
    h ^= k.quota + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.len) << 59;
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

/// How an entry's value was obtained.
struct Entry {
  int value = 0;
  /// forget: -1 = forgotten vertex unused, otherwise its slot in the child key.
  std::int8_t choice = -1;
  /// forget: child quotas; join: left quotas.
  std::uint64_t aux = 0;
  /// join: right quotas.
  std::uint64_t aux2 = 0;
};

struct Table {
  VertexSet bag;
  std::unordered_map<PackedKey, Entry, PackedKeyHash> entries;
  /// Candidate child combinations examined while filling this table.
  long long work = 0;

  [[nodiscard]] const Entry* find(const PackedKey& k) const {
    auto it = entries.find(k);
    return it == entries.end() ? nullptr : &it->second;
  }
  [[nodiscard]] int index_of(Vertex v) const {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    return (it != bag.end() && *it == v) ? static_cast<int>(it - bag.begin()) : -1;
  }
};

/// Pairwise adjacency of bag members as bitmasks over bag indices.
inline std::vector<std::uint32_t> bag_adjacency(const Graph& g, const VertexSet& bag) {
  std::vector<std::uint32_t> adj(bag.size(), 0);
  for (std::size_t i = 0; i < bag.size(); ++i) {
    for (std::size_t j = 0; j < bag.size(); ++j) {
      if (i != j && g.adjacent(bag[i], bag[j])) adj[i] |= 1U << j;
    }
  }
  return adj;
}

/// Visits every quota vector q with 0 <= q[i] <= bound[i] (slot 0 varies slowest).
inline void for_each_quota_below(const std::vector<int>& bound,
                                 const std::function<void(std::uint64_t)>& visit) {
  const int len = static_cast<int>(bound.size());
  std::vector<int> cur(static_cast<std::size_t>(len), 0);
  while (true) {
    std::uint64_t packed = 0;
    for (int i = 0; i < len; ++i) packed |= static_cast<std::uint64_t>(cur[i]) << (4 * i);
    visit(packed);
    int i = len - 1;
    while (i >= 0 && cur[i] == bound[i]) cur[i--] = 0;
    if (i < 0) return;
    ++cur[i];
  }
}

inline std::vector<int> quota_vector(const PackedKey& k) {
  std::vector<int> q(k.len);
  for (int i = 0; i < k.len; ++i) q[i] = k.quota_at(i);
  return q;
}

/// Value of key k. With dominated keys dropped, a missing key takes the best
/// value among stored keys with the same order and pointwise-smaller quotas;
/// `resolved` receives the stored key that supplied it.
inline int lookup(const Table& t, const PackedKey& k, const DpOptions& opts, PackedKey* resolved = nullptr) {
  if (const Entry* e = t.find(k)) {
    if (resolved) *resolved = k;
    return e->value;
  }
  if (!opts.drop_dominated) {
    throw std::logic_error("DP lookup of a key outside the child table");
  }
  int best = -1;
  for_each_quota_below(quota_vector(k), [&](std::uint64_t q) {
    if (const Entry* e = t.find(k.with_quota(q)); e && e->value > best) {
      best = e->value;
      if (resolved) *resolved = k.with_quota(q);
    }
  });
  if (best < 0) throw std::logic_error("DP lookup found no dominating key");
  return best;
}

/// Removes keys whose value is matched by a key with one quota lowered by one.
inline void drop_dominated_keys(Table& t) {
  std::vector<PackedKey> doomed;
  for (const auto& [k, e] : t.entries) {
    for (int i = 0; i < k.len; ++i) {
      if (k.quota_at(i) == 0) continue;
      PackedKey lower = k;
      lower.set_quota(i, k.quota_at(i) - 1);
      if (const Entry* le = t.find(lower); le && le->value == e.value) {
        doomed.push_back(k);
        break;
      }
    }
  }
  for (const auto& k : doomed) t.entries.erase(k);
}

}  // namespace dp

/// Per-run DP accounting.
struct DpStats {
  int width = -1;
  int nodes = 0;
  long long total_entries = 0;
  long long max_entries = 0;
  long long total_work = 0;
  long long max_work = 0;

  void record(const dp::Table& t) {
    ++nodes;
    auto sz = static_cast<long long>(t.entries.size());
    total_entries += sz;
    max_entries = std::max(max_entries, sz);
    total_work += t.work;
    max_work = std::max(max_work, t.work);
  }
};

}  // namespace mics
