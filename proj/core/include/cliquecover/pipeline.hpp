#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cliquecover/caps.hpp"
#include "cliquecover/cover_ops.hpp"
#include "cliquecover/residue.hpp"

namespace cliquecover {

// End-to-end construction of an exact m-cover that is not the union of two
// 1-covers: build the 2-partition-robust graph of order m, realize it as a
// residue-class system, complete to an exact m-cover, and certify.
//
// When the completed system is small enough, the no-two-1-covers certificate
// is exhaustive split enumeration. Otherwise each sampled split of the
// realization is certified analytically: one part attains covering depth m at
// some x, forcing the other part to miss x, so no split of the completed
// system can consist of two 1-covers.
struct PipelineReport {
  int m = 2;
  int graph_vertices = 0;

  CoveringSystem realization;
  std::string realization_mode;  // "small-search" or "prime-tower"
  mpz_class period;

  bool completion_materialized = false;
  mpz_class added;           // r
  CoveringSystem completed;  // equals realization when not materialized

  bool exact_cover_certified = false;
  int omega = 0;  // max of the covering function of the realization; must equal m

  std::string union_mode;  // "exhaustive" or "sampled"
  bool union_none = false;
  std::uint64_t union_examined = 0;

  std::uint64_t seed = 0;
  std::string degradation;  // which stages fell back, empty when none
};

PipelineReport theorem3_pipeline(int m, std::uint64_t seed, std::uint64_t samples,
                                 const Caps& caps = {},
                                 const mpz_class& pool_smooth = 2520);

}  // namespace cliquecover
