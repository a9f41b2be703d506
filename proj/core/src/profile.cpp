#include "cliquecover/profile.hpp"

#include <stdexcept>
#include <string>

#include "cliquecover/clique.hpp"
#include "cliquecover/errors.hpp"

namespace cliquecover {

namespace {

CoverageProfile finish(mpz_class N, std::vector<mpz_class> counts) {
  CoverageProfile p;
  p.period = std::move(N);
  p.counts = std::move(counts);
  p.min_w = -1;
  for (std::size_t j = 0; j < p.counts.size(); ++j) {
    if (p.counts[j] > 0) {
      if (p.min_w < 0) p.min_w = static_cast<int>(j);
      p.max_w = static_cast<int>(j);
    }
  }
  if (p.min_w < 0) p.min_w = 0;
  return p;
}

CoverageProfile profile_direct(const CoveringSystem& sys, const mpz_class& N_mpz) {
  const auto N = N_mpz.get_ui();
  const int s = sys.size();
  std::vector<std::uint32_t> w(N, 0);
  for (const auto& c : sys.classes) {
    const auto n = c.n.get_ui();
    for (std::uint64_t x = c.a.get_ui(); x < N; x += n) ++w[x];
  }
  std::vector<std::uint64_t> hist(s + 1, 0);
  for (auto v : w) ++hist[v];
  std::vector<mpz_class> counts(s + 1);
  for (int j = 0; j <= s; ++j) counts[j] = mpz_class(static_cast<unsigned long>(hist[j]));
  return finish(N_mpz, std::move(counts));
}

// Sum of N/lcm(S) over consistent subsets S, bucketed by |S|. A subset is
// consistent iff its classes merge to one congruence; incompatible branches
// prune the whole supertree.
void consistent_subset_sums(const CoveringSystem& sys, int from, int size,
                            const ResidueClass& merged, const mpz_class& N,
                            std::vector<mpz_class>& sums) {
  sums[size] += N / merged.n;
  for (int t = from; t < sys.size(); ++t) {
    auto next = intersect_classes(merged, sys.classes[t]);
    if (next) consistent_subset_sums(sys, t + 1, size + 1, *next, N, sums);
  }
}

CoverageProfile profile_inclusion_exclusion(const CoveringSystem& sys, const mpz_class& N) {
  const int s = sys.size();
  std::vector<mpz_class> sums(s + 1, 0);
  consistent_subset_sums(sys, 0, 0, ResidueClass(0, 1), N, sums);

  // exactly-j count from the at-least sums: c_j = sum_u (-1)^(u-j) C(u,j) T_u
  std::vector<mpz_class> counts(s + 1, 0);
  mpz_class binom;
  for (int j = 0; j <= s; ++j) {
    for (int u = j; u <= s; ++u) {
      mpz_bin_uiui(binom.get_mpz_t(), u, j);
      if ((u - j) % 2 == 0)
        counts[j] += binom * sums[u];
      else
        counts[j] -= binom * sums[u];
    }
  }
  return finish(N, std::move(counts));
}

}  // namespace

CoverageProfile coverage_profile(const CoveringSystem& sys, ProfileEngine engine,
                                 const Caps& caps) {
  if (sys.classes.empty())
    throw std::invalid_argument("coverage_profile: system must be nonempty");
  const mpz_class N = sys.period();
  const bool direct_ok = N <= mpz_class(static_cast<unsigned long>(caps.direct_cap));
  const bool ie_ok = sys.size() <= caps.subset_cap;

  switch (engine) {
    case ProfileEngine::direct:
      if (!direct_ok)
        throw BudgetError("coverage_profile: period " + N.get_str() +
                          " exceeds direct-enumeration cap " + std::to_string(caps.direct_cap));
      return profile_direct(sys, N);
    case ProfileEngine::inclusion_exclusion:
      if (!ie_ok)
        throw BudgetError("coverage_profile: " + std::to_string(sys.size()) +
                          " classes exceed subset-enumeration cap " +
                          std::to_string(caps.subset_cap));
      return profile_inclusion_exclusion(sys, N);
    case ProfileEngine::automatic:
      if (direct_ok) return profile_direct(sys, N);
      if (ie_ok) return profile_inclusion_exclusion(sys, N);
      throw BudgetError("coverage_profile: period " + N.get_str() + " and class count " +
                        std::to_string(sys.size()) + " exceed both engine caps");
  }
  throw std::logic_error("coverage_profile: unknown engine");
}

bool is_m_cover(const CoveringSystem& sys, int m, ProfileEngine engine, const Caps& caps) {
  return coverage_profile(sys, engine, caps).is_m_cover(m);
}

bool is_exact_m_cover(const CoveringSystem& sys, int m, ProfileEngine engine,
                      const Caps& caps) {
  return coverage_profile(sys, engine, caps).is_exact_m_cover(m);
}

bool omega_consistency(const CoveringSystem& sys, ProfileEngine engine, const Caps& caps) {
  const auto profile = coverage_profile(sys, engine, caps);
  return clique_number(intersection_graph(sys)) == profile.max_w;
}

namespace {

void deepest_consistent(const CoveringSystem& sys, int from, int size,
                        const ResidueClass& merged, MaxCoverage& best) {
  if (size > best.depth) {
    best.depth = size;
    best.witness = merged.a;
  }
  for (int t = from; t < sys.size(); ++t) {
    // even a full remaining suffix cannot beat the best: prune
    if (size + (sys.size() - t) <= best.depth) break;
    auto next = intersect_classes(merged, sys.classes[t]);
    if (next) deepest_consistent(sys, t + 1, size + 1, *next, best);
  }
}

}  // namespace

MaxCoverage max_coverage_witness(const CoveringSystem& sys, const Caps& caps) {
  if (sys.size() > caps.subset_cap)
    throw BudgetError("max_coverage_witness: " + std::to_string(sys.size()) +
                      " classes exceed subset-enumeration cap " +
                      std::to_string(caps.subset_cap));
  MaxCoverage best;
  best.witness = 0;
  deepest_consistent(sys, 0, 0, ResidueClass(0, 1), best);
  return best;
}

}  // namespace cliquecover
