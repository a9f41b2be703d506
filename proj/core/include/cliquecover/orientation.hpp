#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

// Acyclic orientation of a connected graph in which every vertex is reachable
// from the root, together with the layer structure used by the recursive
// construction: l[v] = length of the longest directed path from the root,
// layers[j] = vertices with l = j, in_sets[v] = tails of arcs into v.
struct RootedDag {
  Graph base;
  int root = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head), one per base edge
  std::vector<int> l;
  std::vector<std::vector<int>> layers;
  std::vector<std::vector<int>> in_sets;

  int depth() const { return static_cast<int>(layers.size()) - 1; }

  // Recomputes l / layers / in_sets from the arcs. Requires acyclicity and
  // root-reachability; throws std::invalid_argument otherwise.
  void recompute_derived();
};

// Orientation by depth-first search from the root with ascending neighbor
// order: each edge points from its earlier-discovered endpoint to the later
// one. Deterministic, acyclic, and root-reaches-all by construction.
RootedDag orient_from_root(const Graph& g, int root);

struct LayerValidation {
  bool ok = true;
  std::string issue;  // first violated condition, empty when ok
};

// Checks, in order: (a) in-sets of layer j live in layers 0..j-1,
// (b) every layer 1..depth is nonempty, (c) the arc relation is acyclic,
// (d) every vertex is reachable from the root.
LayerValidation validate_layers(const RootedDag& d);

std::string rooted_dag_to_json(const RootedDag& d);
RootedDag rooted_dag_from_json(const std::string& text);

}  // namespace cliquecover
