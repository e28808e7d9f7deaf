// Largest induced forest of the Petersen graph, with and without branching.

#include <iostream>

#include "mics/mics.hpp"

int main() {
  using namespace mics;
  const Graph g = gen::petersen();
  const TargetClassSpec spec = TargetClassSpec::forest();

  DirectSolve direct = solve_direct(spec, g);
  std::cout << "dp: size " << direct.solution.size << " width " << direct.width << '\n';

  BranchConfig cfg;
  cfg.force_branching = true;
  BranchResult br = run(spec, g, cfg);
  std::cout << "branching: size " << br.solution.size << " guesses " << br.stats.core_guesses << " nodes "
            << br.stats.branch_nodes << '\n';

  std::cout << "witness:";
  for (Vertex v : br.solution.vertices) std::cout << ' ' << v;
  std::cout << '\n';
  return br.solution.size == direct.solution.size ? 0 : 1;
}
