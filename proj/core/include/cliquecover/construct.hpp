#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cliquecover/caps.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/orientation.hpp"

namespace cliquecover {

// Label of one vertex of a layered graph: which skeleton block it lives in,
// which copy of the previous level inside that block (1-based), and its
// vertex index within that copy. The lone block-0 vertex x0 and the m=1
// base vertex carry inner = -1.
struct VertexLabel {
  int host = 0;
  int copy = 1;
  int inner = -1;

  bool operator==(const VertexLabel&) const = default;
};

// The recursively built partition-robust graph of order m: clique number
// exactly m, and every k-partition of the vertices leaves some part whose
// induced subgraph still has clique number m.
//
// Flat vertex layout: x0 is vertex 0; blocks follow in ascending skeleton
// index, each block holding `copies[i]` consecutive copies of the previous
// level's graph.
struct LayeredGraph {
  int m = 1;
  int k = 2;
  RootedDag skeleton;
  Graph graph;
  std::vector<VertexLabel> labels;
  std::shared_ptr<const LayeredGraph> child;  // null at m == 1

  // derived layout bookkeeping
  std::vector<std::uint64_t> copies;  // h_i per block; copies[0] == 1
  std::vector<int> block_start;       // flat index where each block begins
  int copy_size = 1;                  // |V| of the previous level

  int block_of(int v) const { return labels[v].host; }
  int flat_index(int block, int local) const { return block_start[block] + local; }
  int block_size(int i) const {
    return i == 0 ? 1 : static_cast<int>(copies[i]) * copy_size;
  }
};

// Builds G^(m) for the given partition arity k >= 2. The skeleton is the
// (k+1)-chromatic triangle-free Mycielski ladder graph rooted at vertex 0.
// Throws BudgetError if the predicted vertex count exceeds caps.vertex_budget
// (the message reports the predicted size).
LayeredGraph build(int m, int k, const Caps& caps = {});

// Expert entry point: build over a caller-supplied skeleton graph (checked
// to be connected, triangle-free and (k+1)-chromatic, rooted at 0).
LayeredGraph build_from_skeleton(int m, int k, const Graph& skeleton_graph,
                                 const Caps& caps = {});

// Predicted |V(G^(m))| from the block-size recursion, as a decimal string
// (the count can exceed any machine word for large parameters).
std::string predicted_size(int m, int k, const Caps& caps = {});

struct CheckMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  static CheckMode Exhaustive() { return {}; }
  static CheckMode Sampled(std::uint64_t seed, std::uint64_t trials) {
    return {false, seed, trials};
  }
};

struct PartitionCheck {
  bool holds = true;
  std::vector<int> counterexample;  // part index per vertex; empty when holds
  std::uint64_t examined = 0;
};

// Does every k-partition (ordered, empty parts allowed) leave a part with
// clique number >= m? Exhaustive mode enumerates all k^n assignments
// (requires k^n <= caps.exhaustive_cap); sampled mode draws `trials`
// assignments from a seeded generator.
PartitionCheck check_robustness(const Graph& g, int m, int k, const CheckMode& mode,
                                const Caps& caps = {});
PartitionCheck check_robustness(const LayeredGraph& lg, const CheckMode& mode,
                                const Caps& caps = {});

// Splitting inequality: for every 2-split into nonempty parts,
// w(G[V1]) + w(G[V2]) > w(G). Vacuously true when no such split exists.
PartitionCheck check_zhang_inequality(const Graph& g, const CheckMode& mode,
                                      const Caps& caps = {});

struct Witness {
  int part = 0;
  VertexSet clique;
};

// Replays the inductive proof on a concrete partition (given as one part per
// vertex) and returns a monochromatic m-clique. The partition must assign
// every vertex a part in 0..k-1. The returned clique is re-verified before
// returning; failure to find one means the construction is broken and throws
// std::logic_error.
Witness extract_witness(const LayeredGraph& lg, const std::vector<int>& part_of);
Witness extract_witness(const LayeredGraph& lg, const std::vector<VertexSet>& partition);

std::string layered_graph_to_json(const LayeredGraph& lg);
// Parses and revalidates: the stored flat graph and labels must match the
// deterministic reconstruction from (skeleton, child), and the top level must
// have clique number exactly m.
LayeredGraph layered_graph_from_json(const std::string& text);

}  // namespace cliquecover
