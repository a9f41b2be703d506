#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cliquecover/caps.hpp"
#include "cliquecover/profile.hpp"
#include "cliquecover/residue.hpp"

namespace cliquecover {

// Completion to an exact m-cover by appending classes modulo the period:
// every x in [0, N) short of coverage m receives (m - w(x)) copies of x(N).
struct Completion {
  CoveringSystem system;    // input classes verbatim, then the appended ones
  bool materialized = false;
  mpz_class period;         // N
  mpz_class added;          // r = m*N - sum N/n_t, valid in both modes
};

// Requires max_w(sys) <= m (std::invalid_argument otherwise). When the period
// exceeds caps.direct_cap the added-class count is still reported exactly,
// but the classes themselves are not materialized.
Completion complete_to_exact(const CoveringSystem& sys, int m, const Caps& caps = {});

// Certificate for splitting a system into two parts that are both 1-covers.
// Splits are unordered, canonicalized by keeping class 0 in part 1, and
// enumerated in ascending membership-mask order.
struct SplitCertificate {
  bool found = false;
  std::vector<int> part1, part2;  // class indices; empty unless found
  std::uint64_t examined = 0;
};

SplitCertificate union_of_two_1covers(const CoveringSystem& sys, const Caps& caps = {});

// Certificate for splitting into an exact n-cover and an exact (m-n)-cover
// for some 1 <= n < m.
struct ExactSplitCertificate {
  bool found = false;
  int n_cover = 0;
  std::vector<int> part1, part2;
  std::uint64_t examined = 0;
};

ExactSplitCertificate split_into_exact_covers(const CoveringSystem& sys, int m,
                                              const Caps& caps = {});

}  // namespace cliquecover
