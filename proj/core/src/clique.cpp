#include "cliquecover/clique.hpp"

#include <algorithm>

namespace cliquecover {

namespace {

struct BkSearch {
  const std::vector<Bitset>& adj;
  int best = 0;
  std::vector<int> best_clique;
  std::vector<int> current;
  int stop_at;  // abandon the search once a clique of this size is found (0 = never)

  BkSearch(const std::vector<Bitset>& a, int stop) : adj(a), stop_at(stop) {}

  bool done() const { return stop_at > 0 && best >= stop_at; }

  void record() {
    if (static_cast<int>(current.size()) > best) {
      best = static_cast<int>(current.size());
      best_clique = current;
    }
  }

  // Tomita-style pivoting: expand only candidates outside N(pivot).
  void expand(Bitset p, Bitset x) {
    if (done()) return;
    if (!p.any() && !x.any()) {
      record();
      return;
    }
    if (static_cast<int>(current.size()) + p.count() <= best) return;  // bound

    int pivot = -1, best_deg = -1;
    Bitset px = p;
    px |= x;
    for (int u = px.first(); u >= 0; u = px.next(u)) {
      int d = p.intersect_count(adj[u]);
      if (d > best_deg) {
        best_deg = d;
        pivot = u;
      }
    }

    Bitset ext = p;
    ext.subtract(adj[pivot]);

    for (int v = ext.first(); v >= 0; v = ext.next(v)) {
      current.push_back(v);
      expand(p & adj[v], x & adj[v]);
      current.pop_back();
      if (done()) return;
      p.reset(v);
      x.set(v);
    }
  }
};

CliqueResult run_bk(const Graph& g, int stop_at) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  auto adj = g.adjacency_bitsets();
  BkSearch search(adj, stop_at);
  Bitset p(n), x(n);
  for (int v = 0; v < n; ++v) p.set(v);
  search.expand(std::move(p), std::move(x));
  std::sort(search.best_clique.begin(), search.best_clique.end());
  return {search.best, std::move(search.best_clique)};
}

}  // namespace

CliqueResult max_clique(const Graph& g) { return run_bk(g, 0); }

int clique_number(const Graph& g) { return run_bk(g, 0).size; }

bool has_clique_of_size(const Graph& g, int size) {
  if (size <= 0) return true;
  if (size > g.vertex_count()) return false;
  return run_bk(g, size).size >= size;
}

namespace {

bool extendable(const std::vector<Bitset>& adj, const Bitset& candidates, int need) {
  if (need <= 0) return true;
  if (candidates.count() < need) return false;
  BkSearch search(adj, need);
  search.expand(candidates, Bitset(candidates.size()));
  return search.best >= need;
}

}  // namespace

bool subset_has_clique(const std::vector<Bitset>& adj, const Bitset& candidates, int size) {
  return extendable(adj, candidates, size);
}

int subset_clique_number(const std::vector<Bitset>& adj, const Bitset& candidates) {
  if (!candidates.any()) return 0;
  BkSearch search(adj, 0);
  search.expand(candidates, Bitset(candidates.size()));
  return search.best;
}

VertexSet lex_smallest_clique(const std::vector<Bitset>& adj, const Bitset& candidates,
                              int size) {
  VertexSet out;
  Bitset cand = candidates;
  while (static_cast<int>(out.size()) < size) {
    bool advanced = false;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      Bitset rest = cand & adj[v];
      // keep only candidates after v to preserve ascending order
      for (int u = rest.first(); u >= 0 && u <= v; u = rest.next(u)) rest.reset(u);
      int need = size - static_cast<int>(out.size()) - 1;
      if (extendable(adj, rest, need)) {
        out.push_back(v);
        cand = rest;
        advanced = true;
        break;
      }
      cand.reset(v);
    }
    if (!advanced) return {};
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

}  // namespace cliquecover
