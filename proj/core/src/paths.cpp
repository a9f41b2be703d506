#include "cliquecover/paths.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cliquecover/errors.hpp"

namespace cliquecover {

namespace {

std::vector<int> canonical_form(const std::vector<int>& path) {
  std::vector<int> rev(path.rbegin(), path.rend());
  return std::min(path, rev);
}

struct PathSearch {
  const Graph& g;
  std::vector<char> on_path;
  std::vector<int> path;
  int best = 0;
  std::set<std::vector<int>> collected;

  explicit PathSearch(const Graph& graph) : g(graph), on_path(graph.vertex_count(), 0) {}

  void visit() {
    int len = static_cast<int>(path.size()) - 1;
    if (len > best) {
      best = len;
      collected.clear();
    }
    if (len == best) collected.insert(canonical_form(path));
    for (int v : g.neighbors(path.back())) {
      if (on_path[v]) continue;
      on_path[v] = 1;
      path.push_back(v);
      visit();
      path.pop_back();
      on_path[v] = 0;
    }
  }
};

}  // namespace

LongestPaths longest_paths(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw BudgetError("longest_paths: " + std::to_string(n) +
                      " vertices exceeds enumeration cap " + std::to_string(cap));
  if (n == 0) return {};

  PathSearch search(g);
  for (int start = 0; start < n; ++start) {
    search.on_path[start] = 1;
    search.path.push_back(start);
    search.visit();
    search.path.pop_back();
    search.on_path[start] = 0;
  }
  LongestPaths out;
  out.length = search.best;
  out.paths.assign(search.collected.begin(), search.collected.end());
  return out;
}

}  // namespace cliquecover
