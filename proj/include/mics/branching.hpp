#pragma once

// Subexponential driver: guess the high-degree core A', branch on vertices of
// large residual degree, and solve every branch leaf G[V(G'') ∪ A'] with the
// treewidth DP.

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mics/decomposition_builders.hpp"
#include "mics/graph.hpp"
#include "mics/oracle.hpp"
#include "mics/rational.hpp"
#include "mics/solve.hpp"
#include "mics/target_class.hpp"

namespace mics {

enum class Regime { Delta, Sqrtm };

inline std::string regime_name(Regime r) { return r == Regime::Delta ? "delta" : "sqrtm"; }

inline Regime parse_regime(std::string_view text) {
  if (text == "delta") return Regime::Delta;
  if (text == "sqrtm") return Regime::Sqrtm;
  throw ValidationError("unknown regime '" + std::string(text) + "' (expected delta or sqrtm)");
}

/// tau = 1 - (2/3) eps for the delta regime, 1 - (3/4) eps for sqrtm.
inline Rational select_tau(Regime regime, const Rational& epsilon) {
  if (epsilon <= Rational(0) || epsilon > Rational(1)) {
    throw ValidationError("epsilon must lie in (0, 1], got " + epsilon.to_string());
  }
  const Rational factor = regime == Regime::Delta ? Rational(2, 3) : Rational(3, 4);
  return Rational(1) - factor * epsilon;
}

struct BranchConfig {
  Regime regime = Regime::Delta;
  Rational epsilon{1};
  int small_n_cutoff = 25;
  int direct_dp_width_cap = 10;
  int jobs = 1;
  /// Skip the small-instance shortcut (the progress guard still applies).
  bool force_branching = false;
  /// Explore each residual vertex set once per guess and cache leaf solves.
  bool memo = false;
  std::optional<long long> t_low_override;
  std::optional<long long> t_high_override;
  std::optional<long long> core_bound_override;
  DpOptions dp;
  EliminationStrategy strategy = EliminationStrategy::MinFill;
};

/// Concrete thresholds for one instance.
struct Thresholds {
  Rational tau;
  long long t_low = 1;
  long long t_high = 1;
  long long core_bound = 0;  // B
  /// t_high - t_low >= 1; otherwise a keep branch may remove nothing.
  [[nodiscard]] bool progress() const { return t_high - t_low >= 1; }
};

inline Thresholds derive_thresholds(const BranchConfig& cfg, int n, const TargetClassSpec& spec) {
  require_supported(spec);
  Thresholds th;
  th.tau = select_tau(cfg.regime, cfg.epsilon);
  const std::int64_t base = std::max(n, 1);
  th.t_low = cfg.t_low_override.value_or(std::max<long long>(1, ceil_power(base, th.tau)));
  if (th.t_low < 1) throw ValidationError("t_low must be at least 1");
  th.t_high = cfg.t_high_override.value_or(
      std::max<long long>(1, ceil_power(base, Rational(2) * th.tau + cfg.epsilon - Rational(1))));
  if (cfg.core_bound_override) {
    th.core_bound = *cfg.core_bound_override;
    if (th.core_bound < 0) throw ValidationError("core bound must be non-negative");
  } else {
    const Rational coeff = Rational(2) * spec.sparsity() / Rational(th.t_low);
    th.core_bound = n == 0 ? 0 : floor_scaled_power(coeff, n, Rational(2) - cfg.epsilon);
  }
  return th;
}

struct BranchStats {
  long long core_guesses = 0;
  long long branch_nodes = 0;
  long long discard_branches = 0;
  long long keep_branches = 0;
  long long leaves = 0;
  long long dp_calls = 0;
  long long width_cap_hits = 0;
  long long brute_force_fallbacks = 0;
  long long memo_hits = 0;
  int max_dp_width = -1;
  int max_residual_degree = 0;
  int best_size = 0;
  /// "direct" when the shortcut solved G as a whole, "branching" otherwise.
  std::string path = "branching";

  void merge(const BranchStats& o) {
    core_guesses += o.core_guesses;
    branch_nodes += o.branch_nodes;
    discard_branches += o.discard_branches;
    keep_branches += o.keep_branches;
    leaves += o.leaves;
    dp_calls += o.dp_calls;
    width_cap_hits += o.width_cap_hits;
    brute_force_fallbacks += o.brute_force_fallbacks;
    memo_hits += o.memo_hits;
    max_dp_width = std::max(max_dp_width, o.max_dp_width);
    max_residual_degree = std::max(max_residual_degree, o.max_residual_degree);
    best_size = std::max(best_size, o.best_size);
  }

  friend bool operator==(const BranchStats&, const BranchStats&) = default;
};

/// Pull-style enumeration of every subset of {0..n-1} of size 0..B in
/// size-then-lexicographic order.
class CoreGuessStream {
 public:
  CoreGuessStream(int n, long long bound) : n_(n), max_size_(static_cast<int>(std::min<long long>(bound, n))) {}

  bool next(VertexSet& out) {
    if (done_) return false;
    out = idx_;
    advance();
    return true;
  }

 private:
  void advance() {
    const int k = static_cast<int>(idx_.size());
    int i = k - 1;
    while (i >= 0 && idx_[i] == n_ - k + i) --i;
    if (i >= 0) {
      ++idx_[i];
      for (int j = i + 1; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
      return;
    }
    if (k + 1 > max_size_) {
      done_ = true;
      return;
    }
    idx_.resize(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) idx_[j] = j;
  }

  int n_;
  int max_size_;
  VertexSet idx_;
  bool done_ = false;
};

inline void enumerate_core_guesses(const Graph& g, const Thresholds& th,
                                   const std::function<void(const VertexSet&)>& visit) {
  CoreGuessStream stream(g.n(), th.core_bound);
  VertexSet guess;
  while (stream.next(guess)) visit(guess);
}

/// Residual graph view: G restricted to the vertices still alive.
struct Residual {
  const Graph* g;
  std::vector<char> alive;

  [[nodiscard]] int degree(Vertex v) const {
    int d = 0;
    for (Vertex w : g->neighbors(v)) d += alive[w];
    return d;
  }
  [[nodiscard]] VertexSet vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < g->n(); ++v) {
      if (alive[v]) out.push_back(v);
    }
    return out;
  }
};

/// Depth-first branching on the lowest-ID vertex of residual degree at least
/// t_high: drop it, or keep at most t_low of its neighbors and drop the rest.
/// `leaf` is called on every residual with maximum degree below t_high.
inline void branch_high_degree(Residual& r, const Thresholds& th, BranchStats& stats,
                               const std::function<void(const Residual&)>& leaf,
                               std::set<std::vector<char>>* seen = nullptr) {
  if (seen && !seen->insert(r.alive).second) {
    ++stats.memo_hits;
    return;
  }
  ++stats.branch_nodes;
  Vertex pivot = -1;
  int max_deg = 0;
  for (Vertex v = 0; v < r.g->n(); ++v) {
    if (!r.alive[v]) continue;
    int d = r.degree(v);
    max_deg = std::max(max_deg, d);
    if (pivot < 0 && d >= th.t_high) pivot = v;
  }
  if (pivot < 0) {
    ++stats.leaves;
    stats.max_residual_degree = std::max(stats.max_residual_degree, max_deg);
    leaf(r);
    return;
  }
  ++stats.discard_branches;
  r.alive[pivot] = 0;
  branch_high_degree(r, th, stats, leaf, seen);
  r.alive[pivot] = 1;

  VertexSet nbrs;
  for (Vertex w : r.g->neighbors(pivot)) {
    if (r.alive[w]) nbrs.push_back(w);
  }
  detail::for_each_small_subset(nbrs, static_cast<int>(std::min<long long>(th.t_low, nbrs.size())),
                                [&](const std::vector<Vertex>& keep) {
                                  ++stats.keep_branches;
                                  std::vector<char> saved = r.alive;
                                  for (Vertex w : nbrs) r.alive[w] = 0;
                                  for (Vertex w : keep) r.alive[w] = 1;
                                  branch_high_degree(r, th, stats, leaf, seen);
                                  r.alive = std::move(saved);
                                  return false;
                                });
}

struct BranchResult {
  Solution solution;
  BranchStats stats;
  Thresholds thresholds;
};

namespace detail {

/// DP on G[subset] via a heuristic decomposition; brute force when the width
/// cap is hit and the graph is small enough, otherwise rethrow.
inline Solution solve_subset(const TargetClassSpec& spec, const Graph& g, const VertexSet& subset,
                             const BranchConfig& cfg, BranchStats& stats) {
  InducedSubgraph sub = induced_subgraph(g, subset);
  Solution local;
  try {
    ++stats.dp_calls;
    DirectSolve ds = solve_direct(spec, sub.graph, cfg.dp, cfg.strategy);
    stats.max_dp_width = std::max(stats.max_dp_width, ds.width);
    local = std::move(ds.solution);
  } catch (const WidthCapExceeded& e) {
    ++stats.width_cap_hits;
    stats.max_dp_width = std::max(stats.max_dp_width, e.width());
    if (sub.graph.n() > cfg.small_n_cutoff) {
      throw std::runtime_error(std::string(e.what()) + " at a branch leaf with " + std::to_string(sub.graph.n()) +
                               " vertices (above the brute-force cutoff " + std::to_string(cfg.small_n_cutoff) + ")");
    }
    ++stats.brute_force_fallbacks;
    OracleResult o = brute_force_max_induced(sub.graph, spec, cfg.small_n_cutoff);
    local = Solution::of(o.witness);
  }
  VertexSet mapped;
  for (Vertex v : local.vertices) mapped.push_back(sub.original_id[v]);
  return Solution::of(std::move(mapped));
}

}  // namespace detail

/// Exact maximum induced subgraph in the class. The answer does not depend on
/// the regime or the thresholds; they only shape the search.
inline BranchResult run(const TargetClassSpec& spec, const Graph& g, const BranchConfig& cfg = {}) {
  require_supported(spec);
  if (cfg.jobs < 1) throw ValidationError("jobs must be at least 1");
  BranchResult out;
  out.thresholds = derive_thresholds(cfg, g.n(), spec);
  const Thresholds& th = out.thresholds;

  bool shortcut = !th.progress();
  if (!shortcut && !cfg.force_branching) {
    shortcut = g.n() <= cfg.small_n_cutoff ||
               heuristic_decomposition(g, cfg.strategy).width() <= cfg.direct_dp_width_cap;
  }
  if (shortcut) {
    out.stats.path = "direct";
    VertexSet all(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    out.solution = detail::solve_subset(spec, g, all, cfg, out.stats);
  } else {
    CoreGuessStream stream(g.n(), th.core_bound);
    std::mutex mu;
    std::map<VertexSet, Solution> leaf_cache;
    std::exception_ptr failure;
    Solution best;
    BranchStats total;

    auto worker = [&]() {
      BranchStats shard;
      Solution local_best;
      try {
        VertexSet guess;
        while (true) {
          {
            std::lock_guard lock(mu);
            if (failure || !stream.next(guess)) break;
          }
          ++shard.core_guesses;
          Residual r{&g, std::vector<char>(static_cast<std::size_t>(g.n()), 1)};
          for (Vertex a : guess) r.alive[a] = 0;
          std::set<std::vector<char>> seen;
          branch_high_degree(
              r, th, shard,
              [&](const Residual& res) {
                VertexSet u = res.vertices();
                u.insert(u.end(), guess.begin(), guess.end());
                u = make_vertex_set(std::move(u));
                Solution s;
                bool cached = false;
                if (cfg.memo) {
                  std::lock_guard lock(mu);
                  if (auto it = leaf_cache.find(u); it != leaf_cache.end()) {
                    s = it->second;
                    cached = true;
                    ++shard.memo_hits;
                  }
                }
                if (!cached) {
                  s = detail::solve_subset(spec, g, u, cfg, shard);
                  if (cfg.memo) {
                    std::lock_guard lock(mu);
                    leaf_cache.emplace(u, s);
                  }
                }
                if (s.better_than(local_best)) local_best = s;
              },
              cfg.memo ? &seen : nullptr);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      std::lock_guard lock(mu);
      total.merge(shard);
      if (local_best.better_than(best)) best = local_best;
    };

    if (cfg.jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < cfg.jobs; ++i) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    out.stats = total;
    out.solution = best;
  }
  out.stats.best_size = out.solution.size;
  if (!out.solution.certifies(spec, g)) throw std::logic_error("branching result fails the class recognizer");
  return out;
}

}  // namespace mics
