#pragma once

#include "cliquecover/graph.hpp"

namespace cliquecover {

// Longest-path partition: V2 is an independent set hitting every maximum
// path, so the longest path strictly shortens on V1 = V \ V2. Produced by
// the greedy procedure that repeatedly adds the start vertex of the first
// maximum path still missed.
struct LpPartitionResult {
  VertexSet v1;
  VertexSet v2;
  int length_before = 0;
  int length_after = 0;
};

// Requires at least one edge and a vertex count within the longest-path
// enumeration cap. All three postconditions (independence, hitting, strict
// drop) are asserted before returning.
LpPartitionResult lp_partition(const Graph& g, int path_cap = 16);

}  // namespace cliquecover
