#pragma once

#include <cstdint>

namespace cliquecover {

// Size caps for the exact solvers and enumerations. Every guarantee in this
// library is exactness-based, so oversized inputs are rejected with a
// BudgetError instead of falling back to heuristics.
struct Caps {
  int chromatic_cap = 64;             // exact chromatic number solver
  int path_cap = 16;                  // longest-path enumeration
  std::uint64_t exhaustive_cap = 1u << 20;  // max k^n for exhaustive partition scans
  std::uint64_t vertex_budget = 50000;      // layered construction size budget
  int subset_cap = 24;                // inclusion-exclusion subset enumeration
  std::uint64_t direct_cap = 10000000;      // direct coverage scan over one period
  int split_class_cap = 20;           // split enumeration, direct engine
  int split_ie_cap = 15;              // split enumeration, inclusion-exclusion engine
  int realize_search_cap = 8;         // small-modulus realization search
  std::uint64_t search_node_budget = 2000000;  // backtracking nodes for that search
  int threads = 1;
};

}  // namespace cliquecover
