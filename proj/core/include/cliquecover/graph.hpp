#pragma once

#include <utility>
#include <vector>

#include "cliquecover/bitset.hpp"

namespace cliquecover {

using VertexSet = std::vector<int>;

// Finite simple undirected graph on vertices 0..n-1. Immutable after
// construction; edges are stored normalized (u < v), sorted, deduplicated.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  // One adjacency row per vertex; costs O(n^2/64) memory, built on demand by
  // the exact solvers.
  std::vector<Bitset> adjacency_bitsets() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct InducedSubgraph {
  Graph graph;
  // index_map[new vertex] = original vertex in the host graph
  std::vector<int> index_map;
};

// Induced subgraph on s, relabeled 0..|s|-1 by ascending original index.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

void validate_vertex_set(const Graph& g, const VertexSet& s);

}  // namespace cliquecover
