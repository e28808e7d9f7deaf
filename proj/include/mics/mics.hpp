#pragma once

#include "mics/branching.hpp"
#include "mics/decomposition_builders.hpp"
#include "mics/degenerate_dp.hpp"
#include "mics/degree_dp.hpp"
#include "mics/graph.hpp"
#include "mics/graph_io.hpp"
#include "mics/oracle.hpp"
#include "mics/rational.hpp"
#include "mics/solve.hpp"
#include "mics/target_class.hpp"
#include "mics/tree_decomposition.hpp"
