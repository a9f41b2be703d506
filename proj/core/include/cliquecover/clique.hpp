#pragma once

#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

struct CliqueResult {
  int size = 0;
  VertexSet witness;  // vertices of one maximum clique, ascending
};

// Exact maximum clique by Bron-Kerbosch with pivoting. Empty graph gives 0.
CliqueResult max_clique(const Graph& g);

int clique_number(const Graph& g);

// True iff g has a clique of the given size; stops as soon as one is found.
bool has_clique_of_size(const Graph& g, int size);

// Same decision restricted to an induced vertex subset.
bool subset_has_clique(const std::vector<Bitset>& adj, const Bitset& candidates, int size);

// Exact clique number of the subgraph induced by `candidates`.
int subset_clique_number(const std::vector<Bitset>& adj, const Bitset& candidates);

// Lexicographically smallest clique of exactly `size` vertices inside
// `candidates`, as an ascending vertex list; empty if none exists.
VertexSet lex_smallest_clique(const std::vector<Bitset>& adj, const Bitset& candidates,
                              int size);

bool is_clique(const Graph& g, const VertexSet& s);

}  // namespace cliquecover
