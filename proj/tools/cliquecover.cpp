// cliquecover: build partition-robust graphs, realize graphs as residue-class
// systems, analyze and complete covers, and certify irreducibility.
//
// Exit codes: 0 = verified / constructed, 1 = property refuted (certificate
// emitted), 2 = usage or input error, 3 = budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquecover/caps.hpp"
#include "cliquecover/clique.hpp"
#include "cliquecover/coloring.hpp"
#include "cliquecover/construct.hpp"
#include "cliquecover/cover_ops.hpp"
#include "cliquecover/errors.hpp"
#include "cliquecover/graph_io.hpp"
#include "cliquecover/lp_partition.hpp"
#include "cliquecover/mycielski.hpp"
#include "cliquecover/orientation.hpp"
#include "cliquecover/paths.hpp"
#include "cliquecover/pipeline.hpp"
#include "cliquecover/profile.hpp"
#include "cliquecover/realize.hpp"
#include "cliquecover/rng.hpp"

namespace cc = cliquecover;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  cc::Caps caps;
  std::string format = "json";
  std::string output;

  std::string input;
  std::string graph_input;
  int m = 2;
  int k = 2;
  int root = 0;
  int chromatic = 0;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t trials = 10000;
  std::uint64_t samples = 1000;
  std::string engine = "auto";
  std::string partition_file;
  std::string smooth = "2520";
  bool strong = false;
};

void env_override(const char* name, std::uint64_t& value) {
  if (const char* s = std::getenv(name)) value = std::strtoull(s, nullptr, 10);
}
void env_override(const char* name, int& value) {
  if (const char* s = std::getenv(name)) value = static_cast<int>(std::strtol(s, nullptr, 10));
}

void load_caps_from_env(cc::Caps& caps) {
  env_override("CLIQUECOVER_CHROMATIC_CAP", caps.chromatic_cap);
  env_override("CLIQUECOVER_PATH_CAP", caps.path_cap);
  env_override("CLIQUECOVER_EXHAUSTIVE_CAP", caps.exhaustive_cap);
  env_override("CLIQUECOVER_VERTEX_BUDGET", caps.vertex_budget);
  env_override("CLIQUECOVER_SUBSET_CAP", caps.subset_cap);
  env_override("CLIQUECOVER_DIRECT_CAP", caps.direct_cap);
  env_override("CLIQUECOVER_SPLIT_CAP", caps.split_class_cap);
  env_override("CLIQUECOVER_SPLIT_IE_CAP", caps.split_ie_cap);
  env_override("CLIQUECOVER_SEARCH_CAP", caps.realize_search_cap);
  env_override("CLIQUECOVER_SEARCH_BUDGET", caps.search_node_budget);
  env_override("CLIQUECOVER_THREADS", caps.threads);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(opt.output);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.output);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
}

bool json_mode(const Options& opt) { return opt.format == "json"; }

cc::CheckMode make_mode(const Options& opt) {
  if (opt.mode == "exhaustive") return cc::CheckMode::Exhaustive();
  if (opt.mode == "sampled") {
    if (!opt.seed_given)
      throw std::invalid_argument("sampled mode requires --seed");
    return cc::CheckMode::Sampled(opt.seed, opt.trials);
  }
  throw std::invalid_argument("unknown mode: " + opt.mode);
}

cc::ProfileEngine make_engine(const std::string& name) {
  if (name == "auto") return cc::ProfileEngine::automatic;
  if (name == "direct") return cc::ProfileEngine::direct;
  if (name == "ie") return cc::ProfileEngine::inclusion_exclusion;
  throw std::invalid_argument("unknown engine: " + name);
}

ordered_json graph_json_obj(const cc::Graph& g) {
  return ordered_json::parse(cc::graph_to_json(g));
}

std::string format_graph(const Options& opt, const cc::Graph& g) {
  return json_mode(opt) ? cc::graph_to_json(g) : cc::graph_to_text(g);
}

ordered_json system_json_obj(const cc::CoveringSystem& sys) {
  return ordered_json::parse(cc::system_to_json(sys));
}

std::string format_system(const Options& opt, const cc::CoveringSystem& sys) {
  return json_mode(opt) ? cc::system_to_json(sys) : cc::system_to_text(sys);
}

ordered_json partition_check_json(const cc::PartitionCheck& check, const Options& opt) {
  ordered_json j;
  j["mode"] = opt.mode;
  if (opt.mode == "sampled") {
    j["seed"] = opt.seed;
    j["trials"] = opt.trials;
  }
  j["holds"] = check.holds;
  j["examined"] = check.examined;
  if (!check.holds) j["counterexample"] = check.counterexample;
  return j;
}

int report_partition_check(const Options& opt, const cc::PartitionCheck& check,
                           const std::string& property) {
  if (json_mode(opt)) {
    auto j = partition_check_json(check, opt);
    j["property"] = property;
    emit(opt, j.dump());
  } else {
    std::ostringstream ss;
    ss << property << ": " << (check.holds ? "holds" : "REFUTED") << " (" << check.examined
       << " partitions examined";
    if (opt.mode == "sampled") ss << ", seed " << opt.seed;
    ss << ")\n";
    if (!check.holds) {
      ss << "counterexample assignment:";
      for (int p : check.counterexample) ss << " " << p;
      ss << "\n";
    }
    emit(opt, ss.str());
  }
  return check.holds ? kExitOk : kExitRefuted;
}

// ---- subcommand bodies ----

int run_mycielski(const Options& opt) {
  cc::Graph out;
  if (opt.chromatic > 0) {
    out = cc::triangle_free_chromatic(opt.chromatic, opt.caps.chromatic_cap);
  } else {
    if (opt.input.empty())
      throw std::invalid_argument("mycielski: need -i <graph> or --chromatic <k>");
    out = cc::mycielskian(cc::read_graph_file(opt.input));
  }
  emit(opt, format_graph(opt, out));
  return kExitOk;
}

int run_orient(const Options& opt) {
  cc::Graph g = cc::read_graph_file(opt.input);
  cc::RootedDag dag = cc::orient_from_root(g, opt.root);
  if (json_mode(opt)) {
    emit(opt, cc::rooted_dag_to_json(dag));
  } else {
    std::ostringstream ss;
    ss << "root " << dag.root << ", depth " << dag.depth() << "\n";
    for (auto [u, v] : dag.arcs) ss << "arc " << u << " -> " << v << "\n";
    for (std::size_t j = 0; j < dag.layers.size(); ++j) {
      ss << "layer " << j << ":";
      for (int v : dag.layers[j]) ss << " " << v;
      ss << "\n";
    }
    emit(opt, ss.str());
  }
  return kExitOk;
}

int run_build(const Options& opt) {
  cc::LayeredGraph lg;
  if (!opt.graph_input.empty()) {
    lg = cc::build_from_skeleton(opt.m, opt.k, cc::read_graph_file(opt.graph_input), opt.caps);
  } else {
    lg = cc::build(opt.m, opt.k, opt.caps);
  }
  emit(opt, cc::layered_graph_to_json(lg));
  return kExitOk;
}

cc::LayeredGraph load_layered(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return cc::layered_graph_from_json(buf.str());
}

int run_check_robust(const Options& opt) {
  cc::PartitionCheck check;
  if (!opt.input.empty()) {
    cc::LayeredGraph lg = load_layered(opt.input);
    check = cc::check_robustness(lg, make_mode(opt), opt.caps);
  } else if (!opt.graph_input.empty()) {
    cc::Graph g = cc::read_graph_file(opt.graph_input);
    check = cc::check_robustness(g, opt.m, opt.k, make_mode(opt), opt.caps);
  } else {
    throw std::invalid_argument("check-robust: need -i <built.json> or --graph <file>");
  }
  return report_partition_check(opt, check, "every partition keeps full clique number");
}

int run_check_zhang(const Options& opt) {
  const std::string& path = opt.graph_input.empty() ? opt.input : opt.graph_input;
  if (path.empty()) throw std::invalid_argument("check-zhang: need -i <graph>");
  cc::Graph g = cc::read_graph_file(path);
  auto check = cc::check_zhang_inequality(g, make_mode(opt), opt.caps);
  return report_partition_check(opt, check, "splitting inequality");
}

int run_witness(const Options& opt) {
  cc::LayeredGraph lg = load_layered(opt.input);
  const int n = lg.graph.vertex_count();
  std::vector<int> part_of(n);
  ordered_json j;
  if (!opt.partition_file.empty()) {
    std::ifstream in(opt.partition_file);
    if (!in) throw std::invalid_argument("cannot open partition file: " + opt.partition_file);
    nlohmann::json parts;
    in >> parts;
    std::vector<cc::VertexSet> partition;
    for (const auto& p : parts) partition.push_back(p.get<cc::VertexSet>());
    if (static_cast<int>(partition.size()) != lg.k)
      throw std::invalid_argument("partition file must contain exactly k parts");
    cc::Witness w = cc::extract_witness(lg, partition);
    std::fill(part_of.begin(), part_of.end(), -1);
    for (int t = 0; t < lg.k; ++t)
      for (int v : partition[t]) part_of[v] = t;
    j["part"] = w.part;
    j["clique"] = w.clique;
  } else {
    if (!opt.seed_given)
      throw std::invalid_argument("witness: need --partition <file> or --seed <s>");
    cc::Rng rng(opt.seed);
    for (int v = 0; v < n; ++v) part_of[v] = static_cast<int>(rng.below(lg.k));
    cc::Witness w = cc::extract_witness(lg, part_of);
    j["seed"] = opt.seed;
    j["part"] = w.part;
    j["clique"] = w.clique;
  }
  j["assignment"] = part_of;
  if (json_mode(opt)) {
    emit(opt, j.dump());
  } else {
    std::ostringstream ss;
    ss << "monochromatic clique in part " << j["part"] << ":";
    for (const auto& v : j["clique"]) ss << " " << v;
    ss << "\n";
    emit(opt, ss.str());
  }
  return kExitOk;
}

int run_realize(const Options& opt) {
  cc::Graph g = cc::read_graph_file(opt.input);
  emit(opt, format_system(opt, cc::realize(g)));
  return kExitOk;
}

int run_search_realization(const Options& opt) {
  cc::Graph g = cc::read_graph_file(opt.input);
  auto pool = cc::divisor_pool(mpz_class(opt.smooth));
  auto found = cc::search_small_realization(g, pool, opt.caps);
  if (!found) {
    if (json_mode(opt)) {
      ordered_json j;
      j["found"] = false;
      emit(opt, j.dump());
    } else {
      emit(opt, "no realization found within budget\n");
    }
    return kExitRefuted;
  }
  if (json_mode(opt)) {
    ordered_json j;
    j["found"] = true;
    j["lcm"] = found->period().get_str();
    j["system"] = system_json_obj(*found);
    emit(opt, j.dump());
  } else {
    emit(opt, cc::system_to_text(*found));
  }
  return kExitOk;
}

ordered_json profile_json(const cc::CoverageProfile& p) {
  ordered_json j;
  j["N"] = p.period.get_str();
  bool exact = p.min_w == p.max_w;
  j["exact"] = exact ? ordered_json(p.min_w) : ordered_json(nullptr);
  j["min_w"] = p.min_w;
  j["max_w"] = p.max_w;
  ordered_json counts = ordered_json::object();
  for (std::size_t i = 0; i < p.counts.size(); ++i)
    if (p.counts[i] > 0) counts[std::to_string(i)] = p.counts[i].get_str();
  j["counts"] = std::move(counts);
  return j;
}

int run_profile(const Options& opt) {
  cc::CoveringSystem sys = cc::read_system_file(opt.input);
  auto p = cc::coverage_profile(sys, make_engine(opt.engine), opt.caps);
  if (json_mode(opt)) {
    emit(opt, profile_json(p).dump());
  } else {
    std::ostringstream ss;
    ss << "period N = " << p.period.get_str() << "\n";
    ss << "covering function range: [" << p.min_w << ", " << p.max_w << "]\n";
    for (std::size_t i = 0; i < p.counts.size(); ++i)
      if (p.counts[i] > 0) ss << "c_" << i << " = " << p.counts[i].get_str() << "\n";
    if (p.min_w == p.max_w) ss << "exact " << p.min_w << "-cover\n";
    emit(opt, ss.str());
  }
  return kExitOk;
}

int run_complete(const Options& opt) {
  cc::CoveringSystem sys = cc::read_system_file(opt.input);
  cc::Completion comp = cc::complete_to_exact(sys, opt.m, opt.caps);
  if (json_mode(opt)) {
    ordered_json j;
    j["N"] = comp.period.get_str();
    j["added"] = comp.added.get_str();
    j["materialized"] = comp.materialized;
    if (comp.materialized) j["system"] = system_json_obj(comp.system);
    emit(opt, j.dump());
  } else if (comp.materialized) {
    emit(opt, cc::system_to_text(comp.system));
  } else {
    emit(opt, "period " + comp.period.get_str() + " over cap; would add " +
                  comp.added.get_str() + " classes\n");
  }
  return comp.materialized ? kExitOk : kExitBudget;
}

int run_split_exact(const Options& opt, bool require_exact) {
  cc::CoveringSystem sys = cc::read_system_file(opt.input);
  if (require_exact && !cc::is_exact_m_cover(sys, opt.m, make_engine(opt.engine), opt.caps))
    throw std::invalid_argument("input is not an exact " + std::to_string(opt.m) + "-cover");

  auto cert = cc::split_into_exact_covers(sys, opt.m, opt.caps);
  cc::SplitCertificate union_cert;
  bool union_ran = false;
  if (require_exact && opt.strong && !cert.found) {
    union_cert = cc::union_of_two_1covers(sys, opt.caps);
    union_ran = true;
  }

  const bool reducible = cert.found || (union_ran && union_cert.found);
  if (json_mode(opt)) {
    ordered_json j;
    j["m"] = opt.m;
    j["splittable"] = cert.found;
    j["examined"] = cert.examined;
    if (cert.found) {
      j["n"] = cert.n_cover;
      j["part1"] = cert.part1;
      j["part2"] = cert.part2;
    }
    if (union_ran) {
      j["union_of_two_1covers"] = union_cert.found;
      if (union_cert.found) {
        j["union_part1"] = union_cert.part1;
        j["union_part2"] = union_cert.part2;
      }
    }
    emit(opt, j.dump());
  } else {
    std::ostringstream ss;
    if (cert.found) {
      ss << "splits into an exact " << cert.n_cover << "-cover and an exact "
         << (opt.m - cert.n_cover) << "-cover\npart1 indices:";
      for (int t : cert.part1) ss << " " << t;
      ss << "\npart2 indices:";
      for (int t : cert.part2) ss << " " << t;
      ss << "\n";
    } else {
      ss << "no split into two exact covers (" << cert.examined << " splits examined)\n";
    }
    if (union_ran)
      ss << (union_cert.found ? "but it is a union of two 1-covers\n"
                              : "and not a union of two 1-covers\n");
    emit(opt, ss.str());
  }
  return reducible ? kExitRefuted : kExitOk;
}

int run_pipeline(const Options& opt) {
  if (!opt.seed_given && opt.mode == "sampled")
    throw std::invalid_argument("pipeline: sampled fallback requires --seed");
  auto report =
      cc::theorem3_pipeline(opt.m, opt.seed, opt.samples, opt.caps, mpz_class(opt.smooth));
  const bool certified = report.omega == report.m && report.union_none &&
                         (!report.completion_materialized || report.exact_cover_certified);
  if (json_mode(opt)) {
    ordered_json j;
    j["m"] = report.m;
    j["graph_vertices"] = report.graph_vertices;
    j["realization_mode"] = report.realization_mode;
    j["realization"] = system_json_obj(report.realization);
    j["N"] = report.period.get_str();
    j["omega"] = report.omega;
    j["materialized"] = report.completion_materialized;
    j["added"] = report.added.get_str();
    if (report.completion_materialized) {
      j["exact_cover"] = report.exact_cover_certified;
      j["completed"] = system_json_obj(report.completed);
    }
    j["union_mode"] = report.union_mode;
    j["union_none"] = report.union_none;
    j["union_examined"] = report.union_examined;
    j["seed"] = report.seed;
    j["degradation"] = report.degradation;
    j["certified"] = certified;
    emit(opt, j.dump());
  } else {
    std::ostringstream ss;
    ss << "order " << report.m << " over a " << report.graph_vertices << "-vertex graph\n"
       << "realization (" << report.realization_mode << "), period " << report.period.get_str()
       << ", covering depth " << report.omega << "\n"
       << (report.completion_materialized
               ? "completed with " + report.added.get_str() + " classes\n"
               : "completion symbolic: would add " + report.added.get_str() + " classes\n")
       << "union-of-two-1-covers check (" << report.union_mode << "): "
       << (report.union_none ? "none found" : "FOUND / UNCERTIFIED") << " over "
       << report.union_examined << " splits, seed " << report.seed << "\n";
    if (!report.degradation.empty()) ss << "degraded: " << report.degradation << "\n";
    ss << (certified ? "certified\n" : "NOT certified\n");
    emit(opt, ss.str());
  }
  return certified ? kExitOk : kExitRefuted;
}

int run_lp_partition(const Options& opt) {
  cc::Graph g = cc::read_graph_file(opt.input);
  auto res = cc::lp_partition(g, opt.caps.path_cap);
  ordered_json j;
  j["v1"] = res.v1;
  j["v2"] = res.v2;
  j["length_before"] = res.length_before;
  j["length_after"] = res.length_after;
  emit(opt, j.dump());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  load_caps_from_env(opt.caps);

  CLI::App app{"partition-robust graphs and irreducible exact covers"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", opt.output, "output file (default stdout)");
  app.add_option("--threads", opt.caps.threads, "worker threads for partition scans");
  app.add_option("--chromatic-cap", opt.caps.chromatic_cap, "exact coloring size cap");
  app.add_option("--path-cap", opt.caps.path_cap, "longest-path enumeration cap");
  app.add_option("--exhaustive-cap", opt.caps.exhaustive_cap, "max partitions to enumerate");
  app.add_option("--budget,--vertex-budget", opt.caps.vertex_budget,
                 "construction vertex budget");
  app.add_option("--subset-cap", opt.caps.subset_cap, "inclusion-exclusion subset cap");
  app.add_option("--direct-cap", opt.caps.direct_cap, "direct period-scan cap");
  app.add_option("--split-cap", opt.caps.split_class_cap, "split enumeration class cap");
  app.add_option("--split-ie-cap", opt.caps.split_ie_cap,
                 "split enumeration cap via inclusion-exclusion");
  app.add_option("--search-cap", opt.caps.realize_search_cap,
                 "small-realization vertex cap");
  app.add_option("--search-budget", opt.caps.search_node_budget,
                 "small-realization node budget");

  auto add_mode_opts = [&](CLI::App* cmd) {
    cmd->add_option("--mode", opt.mode, "exhaustive | sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd->add_option("--seed", opt.seed, "seed for sampled mode")
        ->each([&](const std::string&) { opt.seed_given = true; });
    cmd->add_option("--trials", opt.trials, "samples in sampled mode");
  };

  auto* mycielski = app.add_subcommand("mycielski", "Mycielskian of a graph, or the ladder");
  mycielski->add_option("-i,--input", opt.input, "input graph");
  mycielski->add_option("--chromatic", opt.chromatic,
                        "emit the triangle-free graph with this chromatic number");

  auto* orient = app.add_subcommand("orient", "rooted acyclic orientation with layers");
  orient->add_option("-i,--input", opt.input, "input graph")->required();
  orient->add_option("--root", opt.root, "root vertex (default 0)");

  auto* build = app.add_subcommand("build", "build the order-m partition-robust graph");
  build->add_option("--m", opt.m, "clique number of the result")->required();
  build->add_option("--k", opt.k, "partition arity")->required();
  build->add_option("--skeleton", opt.graph_input,
                    "expert: replace the Mycielski ladder skeleton with this graph");

  auto* robust = app.add_subcommand("check-robust", "verify partition robustness");
  robust->add_option("-i,--input", opt.input, "built construction (json)");
  robust->add_option("--graph", opt.graph_input, "plain graph to check instead");
  robust->add_option("--m", opt.m, "target clique number (with --graph)");
  robust->add_option("--k", opt.k, "partition arity (with --graph)");
  add_mode_opts(robust);

  auto* zhang = app.add_subcommand("check-zhang", "verify the splitting inequality");
  zhang->add_option("-i,--input", opt.input, "input graph");
  add_mode_opts(zhang);

  auto* witness = app.add_subcommand("witness", "extract a monochromatic clique");
  witness->add_option("-i,--input", opt.input, "built construction (json)")->required();
  witness->add_option("--partition", opt.partition_file, "partition as json list of parts");
  witness->add_option("--seed", opt.seed, "random partition seed")
      ->each([&](const std::string&) { opt.seed_given = true; });

  auto* realize = app.add_subcommand("realize", "realize a graph as a residue-class system");
  realize->add_option("-i,--input", opt.input, "input graph")->required();

  auto* search = app.add_subcommand("search-realization",
                                    "search for a small-period realization");
  search->add_option("-i,--input", opt.input, "input graph")->required();
  search->add_option("--smooth", opt.smooth, "modulus pool = divisors of this number");

  auto* profile = app.add_subcommand("profile", "covering-function profile of a system");
  profile->add_option("-i,--input", opt.input, "input system")->required();
  profile->add_option("--engine", opt.engine, "direct | ie | auto")
      ->check(CLI::IsMember({"direct", "ie", "auto"}));

  auto* complete = app.add_subcommand("complete", "complete a system to an exact m-cover");
  complete->add_option("-i,--input", opt.input, "input system")->required();
  complete->add_option("--m", opt.m, "target exact cover multiplicity")->required();

  auto* irreducible = app.add_subcommand(
      "irreducible", "certify an exact m-cover admits no exact/exact split");
  irreducible->add_option("-i,--input", opt.input, "input system")->required();
  irreducible->add_option("--m", opt.m, "cover multiplicity")->required();
  irreducible->add_option("--engine", opt.engine, "direct | ie | auto")
      ->check(CLI::IsMember({"direct", "ie", "auto"}));
  irreducible->add_flag("--strong", opt.strong,
                        "also require: not a union of two 1-covers");

  auto* split = app.add_subcommand("split-exact",
                                   "search for a split into two exact covers");
  split->add_option("-i,--input", opt.input, "input system")->required();
  split->add_option("--m", opt.m, "total multiplicity")->required();

  auto* pipeline = app.add_subcommand(
      "pipeline", "construct and certify an exact m-cover that is not two 1-covers");
  pipeline->add_option("--m", opt.m, "cover multiplicity")->required();
  pipeline->add_option("--seed", opt.seed, "seed for sampled certificates")
      ->each([&](const std::string&) { opt.seed_given = true; });
  pipeline->add_option("--samples", opt.samples, "sampled splits when not exhaustive");
  pipeline->add_option("--smooth", opt.smooth, "modulus pool for the realization search");

  auto* lp = app.add_subcommand("lp-partition",
                                "independent set whose removal shortens the longest path");
  lp->add_option("-i,--input", opt.input, "input graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(mycielski)) return run_mycielski(opt);
    if (app.got_subcommand(orient)) return run_orient(opt);
    if (app.got_subcommand(build)) return run_build(opt);
    if (app.got_subcommand(robust)) return run_check_robust(opt);
    if (app.got_subcommand(zhang)) return run_check_zhang(opt);
    if (app.got_subcommand(witness)) return run_witness(opt);
    if (app.got_subcommand(realize)) return run_realize(opt);
    if (app.got_subcommand(search)) return run_search_realization(opt);
    if (app.got_subcommand(profile)) return run_profile(opt);
    if (app.got_subcommand(complete)) return run_complete(opt);
    if (app.got_subcommand(irreducible)) return run_split_exact(opt, true);
    if (app.got_subcommand(split)) return run_split_exact(opt, false);
    if (app.got_subcommand(pipeline)) return run_pipeline(opt);
    if (app.got_subcommand(lp)) return run_lp_partition(opt);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const cc::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
