#pragma once

#include "mics/decomposition_builders.hpp"
#include "mics/degenerate_dp.hpp"
#include "mics/degree_dp.hpp"
#include "mics/target_class.hpp"
#include "mics/tree_decomposition.hpp"

namespace mics {

/// Dispatches to the DP for the class: edgeless -> degenerate d=0,
/// forest -> degenerate d=1, degenerate -> degenerate, max-degree -> degree.
inline Solution solve(const TargetClassSpec& spec, const Graph& g, const NiceTreeDecomposition& nice,
                      DpOptions opts = {}, DpStats* stats = nullptr) {
  require_supported(spec);
  Solution s;
  switch (spec.kind) {
    case ClassKind::Edgeless: s = solve_degenerate(g, nice, 0, opts, stats); break;
    case ClassKind::Forest: s = solve_degenerate(g, nice, 1, opts, stats); break;
    case ClassKind::Degenerate: s = solve_degenerate(g, nice, spec.d, opts, stats); break;
    case ClassKind::MaxDegree: s = solve_degree(g, nice, spec.d, opts, stats); break;
    case ClassKind::Planar: break;
  }
  if (!s.certifies(spec, g)) throw std::logic_error("DP witness fails the class recognizer");
  return s;
}

struct DirectSolve {
  Solution solution;
  int width = -1;
  DpStats stats;
};

/// Heuristic decomposition, made nice, then solve(). Throws WidthCapExceeded
/// when the heuristic width is above the cap.
inline DirectSolve solve_direct(const TargetClassSpec& spec, const Graph& g, DpOptions opts = {},
                                EliminationStrategy strategy = EliminationStrategy::MinFill) {
  require_supported(spec);
  TreeDecomposition td = heuristic_decomposition(g, strategy);
  NiceTreeDecomposition nice = make_nice(td, g);
  DirectSolve out;
  out.width = nice.width();
  out.solution = solve(spec, g, nice, opts, &out.stats);
  return out;
}

}  // namespace mics
