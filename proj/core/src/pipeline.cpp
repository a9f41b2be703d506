#include "cliquecover/pipeline.hpp"

#include <stdexcept>

#include "cliquecover/construct.hpp"
#include "cliquecover/errors.hpp"
#include "cliquecover/realize.hpp"
#include "cliquecover/rng.hpp"

namespace cliquecover {

namespace {

void append_note(std::string& notes, const std::string& note) {
  if (!notes.empty()) notes += "; ";
  notes += note;
}

// One sampled split of the realization classes (class 0 pinned to part 1):
// find the part whose deepest consistent subsystem reaches m, take its
// witness x, and confirm the other part misses x entirely.
bool certify_sampled_split(const CoveringSystem& sys, std::uint64_t submask, int m,
                           const Caps& caps) {
  CoveringSystem part1, part2;
  for (int t = 0; t < sys.size(); ++t)
    (((submask << 1) >> t & 1) ? part2 : part1).classes.push_back(sys.classes[t]);

  for (const CoveringSystem* attaining : {&part1, &part2}) {
    const CoveringSystem* other = attaining == &part1 ? &part2 : &part1;
    MaxCoverage deep = max_coverage_witness(*attaining, caps);
    if (deep.depth != m) continue;
    if (covering_function(sys, deep.witness) != m) return false;
    if (covering_function(*other, deep.witness) != 0) return false;
    return true;
  }
  return false;  // neither part attains depth m: contradicts the theorem
}

}  // namespace

PipelineReport theorem3_pipeline(int m, std::uint64_t seed, std::uint64_t samples,
                                 const Caps& caps, const mpz_class& pool_smooth) {
  if (m < 2) throw std::invalid_argument("theorem3_pipeline: m must be >= 2");

  PipelineReport report;
  report.m = m;
  report.seed = seed;

  LayeredGraph lg = build(m, 2, caps);
  const Graph& g = lg.graph;
  report.graph_vertices = g.vertex_count();

  // realization: prime tower first; fall back to the small-modulus search
  // when the tower period is too large to complete
  CoveringSystem tower = realize(g);
  report.realization = tower;
  report.realization_mode = "prime-tower";
  if (tower.period() > mpz_class(static_cast<unsigned long>(caps.direct_cap)) &&
      g.vertex_count() <= caps.realize_search_cap) {
    auto found = search_small_realization(g, divisor_pool(pool_smooth), caps);
    if (found) {
      report.realization = *found;
      report.realization_mode = "small-search";
    } else {
      append_note(report.degradation, "small-modulus search found no realization");
    }
  }
  report.period = report.realization.period();

  // the covering function of the realization peaks at exactly m
  MaxCoverage deep = max_coverage_witness(report.realization, caps);
  report.omega = deep.depth;
  if (report.omega != m)
    throw std::logic_error("pipeline: realization covering depth " +
                           std::to_string(report.omega) + " != m");

  Completion completion = complete_to_exact(report.realization, m, caps);
  report.completion_materialized = completion.materialized;
  report.added = completion.added;
  report.completed = completion.system;
  if (completion.materialized) {
    report.exact_cover_certified =
        coverage_profile(completion.system, ProfileEngine::automatic, caps)
            .is_exact_m_cover(m);
  } else {
    append_note(report.degradation,
                "completion period " + completion.period.get_str() +
                    " too large to materialize; added-class count reported symbolically");
  }

  // no-union-of-two-1-covers certificate
  bool exhaustive_possible = completion.materialized &&
                             completion.system.size() <= caps.split_class_cap;
  if (exhaustive_possible) {
    SplitCertificate cert = union_of_two_1covers(completion.system, caps);
    report.union_mode = "exhaustive";
    report.union_none = !cert.found;
    report.union_examined = cert.examined;
  } else {
    append_note(report.degradation,
                "completed system too large for exhaustive split enumeration; "
                "sampling splits of the realization");
    report.union_mode = "sampled";
    const int s = report.realization.size();
    const std::uint64_t split_count = (std::uint64_t{1} << (s - 1)) - 1;
    Rng rng(seed);
    report.union_none = true;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const std::uint64_t submask = 1 + rng.below(split_count);
      ++report.union_examined;
      if (!certify_sampled_split(report.realization, submask, m, caps)) {
        report.union_none = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace cliquecover
