#pragma once

#include <gmpxx.h>

#include <vector>

#include "cliquecover/caps.hpp"
#include "cliquecover/residue.hpp"

namespace cliquecover {

// Distribution of the covering function over one period: counts[j] is the
// number of x in [0, N) covered exactly j times.
struct CoverageProfile {
  mpz_class period;
  std::vector<mpz_class> counts;  // indices 0..s
  int min_w = 0;
  int max_w = 0;

  bool is_m_cover(int m) const { return min_w >= m; }
  bool is_exact_m_cover(int m) const { return min_w == m && max_w == m; }
};

enum class ProfileEngine {
  automatic,            // direct when the period fits, else inclusion-exclusion
  direct,               // sieve over one period (period <= caps.direct_cap)
  inclusion_exclusion,  // consistent-subset sum (size <= caps.subset_cap)
};

// Both engines are exact and must agree wherever both apply; the tests hold
// them against each other. Throws BudgetError when neither engine fits.
CoverageProfile coverage_profile(const CoveringSystem& sys,
                                 ProfileEngine engine = ProfileEngine::automatic,
                                 const Caps& caps = {});

bool is_m_cover(const CoveringSystem& sys, int m,
                ProfileEngine engine = ProfileEngine::automatic, const Caps& caps = {});
bool is_exact_m_cover(const CoveringSystem& sys, int m,
                      ProfileEngine engine = ProfileEngine::automatic, const Caps& caps = {});

// Cross-module identity: the clique number of the intersection graph equals
// the maximum of the covering function. True for every system; a false
// return means an implementation bug, which makes this a handy test oracle.
bool omega_consistency(const CoveringSystem& sys,
                       ProfileEngine engine = ProfileEngine::automatic, const Caps& caps = {});

// Largest consistent subsystem (every pair intersects, hence by CRT a common
// point exists) plus a witness x attained by it. This equals (max_w, argmax)
// and stays cheap even when the period is astronomical.
struct MaxCoverage {
  int depth = 0;
  mpz_class witness;  // w(witness) == depth; 0 for the empty system
};
MaxCoverage max_coverage_witness(const CoveringSystem& sys, const Caps& caps = {});

}  // namespace cliquecover
