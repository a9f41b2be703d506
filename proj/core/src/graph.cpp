#include "cliquecover/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cliquecover {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<Bitset> Graph::adjacency_bitsets() const {
  std::vector<Bitset> rows(n_, Bitset(n_));
  for (auto [u, v] : edges_) {
    rows[u].set(v);
    rows[v].set(u);
  }
  return rows;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n_;
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex set member " + std::to_string(v) +
                                  " out of range for graph on " +
                                  std::to_string(g.vertex_count()) + " vertices");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);

  return {Graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts)};
}

bool is_independent(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : s) in[v] = 1;
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) return false;
  return true;
}

}  // namespace cliquecover
