#include "cliquecover/coloring.hpp"

#include <algorithm>
#include <string>

#include "cliquecover/clique.hpp"
#include "cliquecover/errors.hpp"

namespace cliquecover {

namespace {

// Backtracking k-coloring with DSATUR vertex selection and symmetry breaking
// (a vertex may open at most one fresh color).
struct ColorSearch {
  const std::vector<Bitset>& adj;
  int n;
  int k;
  std::vector<int> color;          // -1 = uncolored
  std::vector<std::vector<int>> used_count;  // used_count[v][c] = colored neighbors of v with c

  ColorSearch(const std::vector<Bitset>& a, int n_, int k_)
      : adj(a), n(n_), k(k_), color(n_, -1), used_count(n_, std::vector<int>(k_, 0)) {}

  int saturation(int v) const {
    int s = 0;
    for (int c = 0; c < k; ++c) s += used_count[v][c] > 0;
    return s;
  }

  int pick_vertex() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      int s = saturation(v);
      int d = adj[v].count();
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  bool solve(int colored, int max_used) {
    if (colored == n) return true;
    int v = pick_vertex();
    int limit = std::min(k, max_used + 1);
    for (int c = 0; c < limit; ++c) {
      if (used_count[v][c] > 0) continue;
      color[v] = c;
      for (int u = adj[v].first(); u >= 0; u = adj[v].next(u)) ++used_count[u][c];
      if (solve(colored + 1, std::max(max_used, c + 1))) return true;
      for (int u = adj[v].first(); u >= 0; u = adj[v].next(u)) --used_count[u][c];
      color[v] = -1;
    }
    return false;
  }
};

// Greedy DSATUR coloring, for the upper bound.
int dsatur_upper_bound(const std::vector<Bitset>& adj, int n) {
  std::vector<int> color(n, -1);
  std::vector<Bitset> neighbor_colors;
  neighbor_colors.reserve(n);
  for (int v = 0; v < n; ++v) neighbor_colors.emplace_back(n + 1);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      int s = neighbor_colors[v].count();
      int d = adj[v].count();
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    int c = 0;
    while (neighbor_colors[best].test(c)) ++c;
    color[best] = c;
    used = std::max(used, c + 1);
    for (int u = adj[best].first(); u >= 0; u = adj[best].next(u))
      neighbor_colors[u].set(c);
  }
  return used;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  if (k <= 0) return false;
  auto adj = g.adjacency_bitsets();
  ColorSearch search(adj, n, k);
  return search.solve(0, 0);
}

int chromatic_number(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw BudgetError("chromatic_number: " + std::to_string(n) +
                      " vertices exceeds exact-solver cap " + std::to_string(cap));
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;

  auto adj = g.adjacency_bitsets();
  int lower = clique_number(g);
  int upper = dsatur_upper_bound(adj, n);
  for (int k = lower; k < upper; ++k) {
    ColorSearch search(adj, n, k);
    if (search.solve(0, 0)) return k;
  }
  return upper;
}

}  // namespace cliquecover
