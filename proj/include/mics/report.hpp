#pragma once

// Machine-readable result of one solver invocation.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mics/branching.hpp"
#include "mics/graph.hpp"

namespace mics {

struct InstanceInfo {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  std::string format;
  std::string path;
  friend bool operator==(const InstanceInfo&, const InstanceInfo&) = default;
};

struct ConfigEcho {
  std::string regime = "delta";
  std::string epsilon = "1";
  std::string tau;
  long long t_low = 0;
  long long t_high = 0;
  long long b = 0;
  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct ResultBlock {
  int size = 0;
  VertexSet witness;
  bool certificate_ok = false;
  friend bool operator==(const ResultBlock&, const ResultBlock&) = default;
};

struct StatsBlock {
  BranchStats branching;
  std::vector<int> decomposition_widths;
  double wall_time = 0.0;
  friend bool operator==(const StatsBlock&, const StatsBlock&) = default;
};

struct RunReport {
  InstanceInfo instance;
  std::string spec;
  std::string algorithm;
  ConfigEcho config;
  ResultBlock result;
  StatsBlock stats;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline InstanceInfo describe(const Graph& g, std::string format, std::string path) {
  return InstanceInfo{g.n(), g.m(), g.max_degree(), std::move(format), std::move(path)};
}

inline ConfigEcho echo(const BranchConfig& cfg, const Thresholds& th) {
  return ConfigEcho{regime_name(cfg.regime), cfg.epsilon.to_string(), th.tau.to_string(),
                    th.t_low,                th.t_high,                th.core_bound};
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InstanceInfo, n, m, max_degree, format, path)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConfigEcho, regime, epsilon, tau, t_low, t_high, b)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResultBlock, size, witness, certificate_ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BranchStats, core_guesses, branch_nodes, discard_branches, keep_branches, leaves,
                                   dp_calls, width_cap_hits, brute_force_fallbacks, memo_hits, max_dp_width,
                                   max_residual_degree, best_size, path)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StatsBlock, branching, decomposition_widths, wall_time)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RunReport, instance, spec, algorithm, config, result, stats)

}  // namespace mics
