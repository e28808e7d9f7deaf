#pragma once

// Exhaustive ground truth for the solvers and the reduction identities.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "mics/graph.hpp"
#include "mics/target_class.hpp"

namespace mics {

class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  int size = 0;
  VertexSet witness;
  long long subsets_examined = 0;
};

namespace detail {

inline void refuse_above(const Graph& g, int cap, const char* what) {
  if (g.n() > cap) {
    throw OracleRefusal(std::string(what) + ": n=" + std::to_string(g.n()) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace detail

/// Largest A with G[A] in the class, by enumerating subsets from the largest
/// size down (lexicographic within a size); the first hit is returned.
inline OracleResult brute_force_max_induced(const Graph& g, const TargetClassSpec& spec, int cap = 20) {
  require_supported(spec);
  detail::refuse_above(g, cap, "brute_force_max_induced");
  const int n = g.n();
  OracleResult out;
  std::vector<int> idx;
  for (int k = n; k >= 0; --k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ++out.subsets_examined;
      if (recognize_subset(spec, g, idx)) {
        out.size = k;
        out.witness.assign(idx.begin(), idx.end());
        return out;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;  // unreachable: the empty set is always in the class
}

/// Hamiltonian path by dynamic programming over (visited set, endpoint).
inline bool hamiltonian_path_exists(const Graph& g, int cap = 20) {
  detail::refuse_above(g, cap, "hamiltonian_path_exists");
  const int n = g.n();
  if (n <= 1) return true;
  const std::uint32_t full = (1U << n) - 1;
  // ends[mask]: bitmask of vertices v such that a path covering `mask` ends at v.
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1U << v;
    nbr[v] |= 1U << u;
  }
  for (int v = 0; v < n; ++v) ends[1U << v] = 1U << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    for (int v = 0; v < n; ++v) {
      if (!(e & (1U << v))) continue;
      std::uint32_t ext = nbr[v] & ~mask;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  return ends[full] != 0;
}

/// Exact treewidth via the subset recurrence over elimination orderings:
/// TW(S) = min_{v in S} max(TW(S \ v), |Q(S \ v, v)|), where Q(S, v) is the set
/// of vertices outside S ∪ {v} reachable from v through S.
inline int exact_treewidth(const Graph& g, int cap = 10) {
  detail::refuse_above(g, cap, "exact_treewidth");
  const int n = g.n();
  if (n == 0) return -1;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= 1U << v;
    nbr[v] |= 1U << u;
  }
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t reached = 1U << v;
    std::uint32_t frontier = 1U << v;
    std::uint32_t outside = 0;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t nx = nbr[x] & ~reached;
      reached |= nx;
      outside |= nx & ~s;
      frontier |= nx & s;
    }
    return std::popcount(outside);
  };
  const std::uint32_t full = (1U << n) - 1;
  std::vector<int> tw(static_cast<std::size_t>(full) + 1, std::numeric_limits<int>::max());
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t without = s & ~(1U << v);
      tw[s] = std::min(tw[s], std::max(tw[without], q_size(without, v)));
    }
  }
  return tw[full];
}

}  // namespace mics
