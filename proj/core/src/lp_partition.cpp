#include "cliquecover/lp_partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliquecover/paths.hpp"

namespace cliquecover {

LpPartitionResult lp_partition(const Graph& g, int path_cap) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("lp_partition: graph must have at least one edge");

  const auto longest = longest_paths(g, path_cap);
  const auto& paths = longest.paths;

  std::vector<char> in_u(g.vertex_count(), 0);
  std::vector<char> hit(paths.size(), 0);
  VertexSet u;

  auto absorb = [&](int start_vertex) {
    in_u[start_vertex] = 1;
    u.push_back(start_vertex);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (hit[i]) continue;
      if (std::find(paths[i].begin(), paths[i].end(), start_vertex) != paths[i].end())
        hit[i] = 1;
    }
  };

  absorb(paths[0].front());
  for (;;) {
    std::size_t next = paths.size();
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (!hit[i]) {
        next = i;
        break;
      }
    if (next == paths.size()) break;
    absorb(paths[next].front());
  }

  LpPartitionResult out;
  out.v2 = u;
  std::sort(out.v2.begin(), out.v2.end());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!in_u[v]) out.v1.push_back(v);
  out.length_before = longest.length;

  if (!is_independent(g, out.v2))
    throw std::logic_error("lp_partition: start-vertex set is not independent");
  const Graph g1 = induced_subgraph(g, out.v1).graph;
  out.length_after = g1.vertex_count() == 0 ? 0 : longest_paths(g1, path_cap).length;
  if (out.length_after >= out.length_before)
    throw std::logic_error("lp_partition: longest path did not shorten");
  return out;
}

}  // namespace cliquecover
