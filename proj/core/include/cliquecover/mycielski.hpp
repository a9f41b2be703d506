#pragma once

#include "cliquecover/graph.hpp"

namespace cliquecover {

// Mycielski construction: originals 0..n-1, shadows n..2n-1, apex 2n.
// Preserves triangle-freeness and raises the chromatic number by one
// whenever the input has an edge.
Graph mycielskian(const Graph& g);

// (k-2)-fold iterated Mycielskian of K2: a triangle-free graph with
// chromatic number k. The chromatic number is re-verified with the exact
// solver while the graph fits under verify_cap vertices.
Graph triangle_free_chromatic(int k, int verify_cap = 64);

}  // namespace cliquecover
