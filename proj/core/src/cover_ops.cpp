#include "cliquecover/cover_ops.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "cliquecover/errors.hpp"

namespace cliquecover {

Completion complete_to_exact(const CoveringSystem& sys, int m, const Caps& caps) {
  if (m < 1) throw std::invalid_argument("complete_to_exact: m must be >= 1");
  const auto profile = coverage_profile(sys, ProfileEngine::automatic, caps);
  if (profile.max_w > m)
    throw std::invalid_argument("complete_to_exact: system already covers some x " +
                                std::to_string(profile.max_w) + " > m times");

  Completion out;
  out.period = profile.period;
  mpz_class covered = 0;
  for (const auto& c : sys.classes) covered += out.period / c.n;
  out.added = mpz_class(m) * out.period - covered;
  out.system = sys;

  if (out.period > mpz_class(static_cast<unsigned long>(caps.direct_cap))) {
    out.materialized = false;  // period too large; report r symbolically
    return out;
  }

  const auto N = out.period.get_ui();
  std::vector<std::uint32_t> w(N, 0);
  for (const auto& c : sys.classes) {
    const auto n = c.n.get_ui();
    for (std::uint64_t x = c.a.get_ui(); x < N; x += n) ++w[x];
  }
  for (std::uint64_t x = 0; x < N; ++x)
    for (std::uint32_t d = w[x]; d < static_cast<std::uint32_t>(m); ++d)
      out.system.classes.emplace_back(mpz_class(static_cast<unsigned long>(x)), out.period);
  out.materialized = true;

  if (!coverage_profile(out.system, ProfileEngine::direct, caps).is_exact_m_cover(m))
    throw std::logic_error("complete_to_exact: postcondition failed");
  return out;
}

namespace {

std::vector<int> mask_to_indices(std::uint64_t mask, int s) {
  std::vector<int> out;
  for (int t = 0; t < s; ++t)
    if (mask >> t & 1) out.push_back(t);
  return out;
}

// per-x membership masks over one period, bit t = class t contains x
std::vector<std::uint64_t> membership_masks(const CoveringSystem& sys, std::uint64_t N) {
  std::vector<std::uint64_t> mask(N, 0);
  for (int t = 0; t < sys.size(); ++t) {
    const auto n = sys.classes[t].n.get_ui();
    for (std::uint64_t x = sys.classes[t].a.get_ui(); x < N; x += n)
      mask[x] |= std::uint64_t{1} << t;
  }
  return mask;
}

enum class SplitRoute { direct, inclusion_exclusion };

SplitRoute pick_split_route(const CoveringSystem& sys, const Caps& caps, const char* who) {
  const int s = sys.size();
  if (s <= caps.split_class_cap &&
      sys.period() <= mpz_class(static_cast<unsigned long>(caps.direct_cap)))
    return SplitRoute::direct;
  if (s <= caps.split_ie_cap) return SplitRoute::inclusion_exclusion;
  throw BudgetError(std::string(who) + ": " + std::to_string(s) +
                    " classes exceed both split-enumeration budgets (direct cap " +
                    std::to_string(caps.split_class_cap) + ", inclusion-exclusion cap " +
                    std::to_string(caps.split_ie_cap) + ")");
}

// uncovered density of every subsystem: F[mask] = sum over consistent
// T <= mask of (-1)^|T| / lcm(T); the subsystem is a 1-cover iff F == 0
std::vector<mpq_class> uncovered_densities(const CoveringSystem& sys) {
  const int s = sys.size();
  std::vector<mpq_class> f(std::size_t{1} << s, 0);

  // seed the per-subset terms by DFS over consistent subsets
  struct Walker {
    const CoveringSystem& sys;
    std::vector<mpq_class>& f;
    void run(int from, std::uint64_t mask, int size, const ResidueClass& merged) {
      mpq_class term(size % 2 == 0 ? 1 : -1);
      term /= mpq_class(merged.n);
      f[mask] = term;
      for (int t = from; t < sys.size(); ++t) {
        auto next = intersect_classes(merged, sys.classes[t]);
        if (next) run(t + 1, mask | (std::uint64_t{1} << t), size + 1, *next);
      }
    }
  };
  Walker{sys, f}.run(0, 0, 0, ResidueClass(0, 1));

  // subset-sum transform
  for (int b = 0; b < s; ++b)
    for (std::uint64_t mask = 0; mask < f.size(); ++mask)
      if (mask >> b & 1) f[mask] += f[mask ^ (std::uint64_t{1} << b)];
  return f;
}

}  // namespace

SplitCertificate union_of_two_1covers(const CoveringSystem& sys, const Caps& caps) {
  const int s = sys.size();
  SplitCertificate out;
  if (s < 2) return out;

  const std::uint64_t full = (s == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
  const std::uint64_t splits = std::uint64_t{1} << (s - 1);

  if (pick_split_route(sys, caps, "union_of_two_1covers") == SplitRoute::direct) {
    const auto N = sys.period().get_ui();
    const auto mask = membership_masks(sys, N);
    for (std::uint64_t sub = 1; sub < splits; ++sub) {
      ++out.examined;
      const std::uint64_t part2 = sub << 1;
      const std::uint64_t part1 = full ^ part2;
      bool ok = true;
      for (std::uint64_t x = 0; x < N && ok; ++x)
        ok = (mask[x] & part1) && (mask[x] & part2);
      if (ok) {
        out.found = true;
        out.part1 = mask_to_indices(part1, s);
        out.part2 = mask_to_indices(part2, s);
        return out;
      }
    }
    return out;
  }

  const auto density = uncovered_densities(sys);
  for (std::uint64_t sub = 1; sub < splits; ++sub) {
    ++out.examined;
    const std::uint64_t part2 = sub << 1;
    const std::uint64_t part1 = full ^ part2;
    if (density[part1] == 0 && density[part2] == 0) {
      out.found = true;
      out.part1 = mask_to_indices(part1, s);
      out.part2 = mask_to_indices(part2, s);
      return out;
    }
  }
  return out;
}

ExactSplitCertificate split_into_exact_covers(const CoveringSystem& sys, int m,
                                              const Caps& caps) {
  if (m < 2) throw std::invalid_argument("split_into_exact_covers: m must be >= 2");
  const int s = sys.size();
  ExactSplitCertificate out;
  if (s < 2) return out;

  const std::uint64_t full = (s == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
  const std::uint64_t splits = std::uint64_t{1} << (s - 1);
  const SplitRoute route = pick_split_route(sys, caps, "split_into_exact_covers");

  if (route == SplitRoute::direct) {
    const auto N = sys.period().get_ui();
    const auto mask = membership_masks(sys, N);
    for (std::uint64_t sub = 1; sub < splits; ++sub) {
      ++out.examined;
      const std::uint64_t part2 = sub << 1;
      const std::uint64_t part1 = full ^ part2;
      int lo1 = s + 1, hi1 = -1, lo2 = s + 1, hi2 = -1;
      for (std::uint64_t x = 0; x < N; ++x) {
        const int w1 = std::popcount(mask[x] & part1);
        const int w2 = std::popcount(mask[x] & part2);
        lo1 = std::min(lo1, w1);
        hi1 = std::max(hi1, w1);
        lo2 = std::min(lo2, w2);
        hi2 = std::max(hi2, w2);
        if (hi1 > lo1 && hi2 > lo2) break;  // neither part can be exact
      }
      if (lo1 == hi1 && lo2 == hi2 && lo1 >= 1 && lo1 < m && lo1 + lo2 == m) {
        out.found = true;
        out.n_cover = lo1;
        out.part1 = mask_to_indices(part1, s);
        out.part2 = mask_to_indices(part2, s);
        return out;
      }
    }
    return out;
  }

  // inclusion-exclusion route: full profile per part
  for (std::uint64_t sub = 1; sub < splits; ++sub) {
    ++out.examined;
    const std::uint64_t part2 = sub << 1;
    const std::uint64_t part1 = full ^ part2;
    CoveringSystem s1, s2;
    for (int t = 0; t < s; ++t)
      ((part1 >> t & 1) ? s1 : s2).classes.push_back(sys.classes[t]);
    const auto p1 = coverage_profile(s1, ProfileEngine::inclusion_exclusion, caps);
    if (p1.min_w != p1.max_w || p1.min_w < 1 || p1.min_w >= m) continue;
    const auto p2 = coverage_profile(s2, ProfileEngine::inclusion_exclusion, caps);
    if (p2.min_w == p2.max_w && p2.min_w == m - p1.min_w) {
      out.found = true;
      out.n_cover = p1.min_w;
      out.part1 = mask_to_indices(part1, s);
      out.part2 = mask_to_indices(part2, s);
      return out;
    }
  }
  return out;
}

}  // namespace cliquecover
