#include "cliquecover/mycielski.hpp"

#include <stdexcept>
#include <string>

#include "cliquecover/clique.hpp"
#include "cliquecover/coloring.hpp"

namespace cliquecover {

Graph mycielskian(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  edges.reserve(3 * edges.size() + n);
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(n + u, v);  // shadow of u sees original neighbors of u
    edges.emplace_back(n + v, u);
  }
  const int apex = 2 * n;
  for (int u = 0; u < n; ++u) edges.emplace_back(n + u, apex);
  return Graph(2 * n + 1, std::move(edges));
}

Graph triangle_free_chromatic(int k, int verify_cap) {
  if (k < 2) throw std::invalid_argument("triangle_free_chromatic: k must be >= 2");
  Graph g = Graph::complete(2);
  for (int i = 0; i < k - 2; ++i) g = mycielskian(g);
  if (g.vertex_count() <= verify_cap) {
    if (has_clique_of_size(g, 3))
      throw std::logic_error("triangle_free_chromatic: construction produced a triangle");
    int chi = chromatic_number(g, verify_cap);
    if (chi != k)
      throw std::logic_error("triangle_free_chromatic: expected chromatic number " +
                             std::to_string(k) + ", solver found " + std::to_string(chi));
  }
  return g;
}

}  // namespace cliquecover
