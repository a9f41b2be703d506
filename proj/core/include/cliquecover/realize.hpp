#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cliquecover/caps.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/residue.hpp"

namespace cliquecover {

// Realizes any graph as the intersection graph of a residue-class system by
// the inductive prime-tower construction, with deterministic choices (the
// smallest admissible primes, ascending). Moduli grow superexponentially in
// the vertex count. The result is re-checked against g before returning.
CoveringSystem realize(const Graph& g);

// All divisors > 1 of `smooth`, ascending: the default modulus pool for the
// small-realization search.
std::vector<mpz_class> divisor_pool(const mpz_class& smooth);

// Backtracking search for a system with intersection graph g and small
// period, drawing moduli from the pool (candidates tried in ascending
// (modulus, residue) order). Explores up to caps.search_node_budget
// assignments and returns the minimal-period system found, or nullopt.
std::optional<CoveringSystem> search_small_realization(const Graph& g,
                                                       const std::vector<mpz_class>& pool,
                                                       const Caps& caps = {});

}  // namespace cliquecover
