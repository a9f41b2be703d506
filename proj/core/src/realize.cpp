#include "cliquecover/realize.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliquecover/errors.hpp"

namespace cliquecover {

namespace {

// x == a1 (mod n1) and x == a2 (mod n2) for coprime-compatible congruences;
// callers guarantee solvability.
ResidueClass crt_or_die(const ResidueClass& c1, const ResidueClass& c2) {
  auto merged = intersect_classes(c1, c2);
  if (!merged) throw std::logic_error("realize: congruence system unexpectedly unsolvable");
  return *merged;
}

CoveringSystem realize_recursive(const Graph& g) {
  const int s = g.vertex_count();
  if (s == 1) return {{ResidueClass(0, 1)}};
  if (s == 2) {
    if (g.has_edge(0, 1)) return {{ResidueClass(0, 2), ResidueClass(0, 2)}};
    return {{ResidueClass(0, 2), ResidueClass(1, 2)}};
  }

  VertexSet keep(s - 1);
  for (int v = 0; v < s - 1; ++v) keep[v] = v;
  CoveringSystem prev = realize_recursive(induced_subgraph(g, keep).graph);

  mpz_class max_n = 0;
  for (const auto& c : prev.classes) max_n = std::max(max_n, c.n);

  std::vector<mpz_class> primes(s - 1);
  mpz_class p = max_n;
  for (int t = 0; t < s - 1; ++t) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    primes[t] = p;
  }

  CoveringSystem out;
  for (int t = 0; t < s - 1; ++t) {
    // keep the old congruence, and mark intersection with the new vertex
    out.classes.push_back(crt_or_die(prev.classes[t], ResidueClass(1, primes[t])));
  }
  ResidueClass last(g.has_edge(0, s - 1) ? 1 : 0, primes[0]);
  for (int t = 1; t < s - 1; ++t)
    last = crt_or_die(last, ResidueClass(g.has_edge(t, s - 1) ? 1 : 0, primes[t]));
  out.classes.push_back(last);
  return out;
}

}  // namespace

CoveringSystem realize(const Graph& g) {
  if (g.vertex_count() < 1) throw std::invalid_argument("realize: graph must be nonempty");
  CoveringSystem sys = realize_recursive(g);
  if (!(intersection_graph(sys) == g))
    throw std::logic_error("realize: postcondition failed, intersection graph mismatch");
  return sys;
}

std::vector<mpz_class> divisor_pool(const mpz_class& smooth) {
  if (smooth < 2) throw std::invalid_argument("divisor_pool: need a number >= 2");
  // trial-division factorization; pool sources are small smooth numbers
  mpz_class rest = smooth;
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      int e = 0;
      while (rest % d == 0) {
        rest /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
  }
  if (rest > 1) factors.emplace_back(rest, 1);

  std::vector<mpz_class> divisors{1};
  for (const auto& [prime, mult] : factors) {
    const std::size_t base = divisors.size();
    mpz_class pe = 1;
    for (int e = 1; e <= mult; ++e) {
      pe *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pe);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(divisors.begin());  // drop 1
  return divisors;
}

namespace {

struct SmallSearch {
  const Graph& g;
  const std::vector<mpz_class>& pool;
  std::uint64_t nodes_left;
  std::vector<ResidueClass> assigned;
  std::optional<CoveringSystem> best;
  mpz_class best_lcm;

  SmallSearch(const Graph& graph, const std::vector<mpz_class>& p, std::uint64_t budget)
      : g(graph), pool(p), nodes_left(budget) {}

  bool compatible(const ResidueClass& cand, int vertex) const {
    for (int u = 0; u < vertex; ++u)
      if (classes_intersect(assigned[u], cand) != g.has_edge(u, vertex)) return false;
    return true;
  }

  void run(int vertex, const mpz_class& lcm_so_far) {
    if (nodes_left == 0) return;
    if (vertex == g.vertex_count()) {
      if (!best || lcm_so_far < best_lcm) {
        best = CoveringSystem{assigned};
        best_lcm = lcm_so_far;
      }
      return;
    }
    for (const auto& n : pool) {
      for (mpz_class a = 0; a < n; ++a) {
        if (nodes_left == 0) return;
        --nodes_left;
        ResidueClass cand(a, n);
        if (!compatible(cand, vertex)) continue;
        mpz_class lcm;
        mpz_lcm(lcm.get_mpz_t(), lcm_so_far.get_mpz_t(), n.get_mpz_t());
        if (best && lcm >= best_lcm) continue;  // period only grows deeper
        assigned.push_back(cand);
        run(vertex + 1, lcm);
        assigned.pop_back();
      }
    }
  }
};

}  // namespace

std::optional<CoveringSystem> search_small_realization(const Graph& g,
                                                       const std::vector<mpz_class>& pool,
                                                       const Caps& caps) {
  if (g.vertex_count() < 1) throw std::invalid_argument("search: graph must be nonempty");
  if (g.vertex_count() > caps.realize_search_cap)
    throw BudgetError("search: " + std::to_string(g.vertex_count()) +
                      " vertices exceed search cap " +
                      std::to_string(caps.realize_search_cap));
  SmallSearch search(g, pool, caps.search_node_budget);
  search.run(0, 1);
  if (search.best && !(intersection_graph(*search.best) == g))
    throw std::logic_error("search: postcondition failed, intersection graph mismatch");
  return search.best;
}

}  // namespace cliquecover
