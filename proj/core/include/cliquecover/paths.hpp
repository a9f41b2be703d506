#pragma once

#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

struct LongestPaths {
  int length = 0;                       // edges on a longest simple path
  std::vector<std::vector<int>> paths;  // every maximum path once, canonical, sorted
};

// Exhaustive longest-path enumeration. A path and its reversal count once:
// the canonical form is the lexicographically smaller of the two vertex
// sequences. Exponential; guarded by cap.
LongestPaths longest_paths(const Graph& g, int cap = 16);

}  // namespace cliquecover
