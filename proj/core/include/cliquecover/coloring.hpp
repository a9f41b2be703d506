#pragma once

#include "cliquecover/graph.hpp"

namespace cliquecover {

// Exact chromatic number. Throws BudgetError when the graph exceeds the cap.
int chromatic_number(const Graph& g, int cap = 64);

// Exact decision: does a proper coloring with at most k colors exist?
bool is_k_colorable(const Graph& g, int k);

}  // namespace cliquecover
