#include "cliquecover/construct.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cliquecover/clique.hpp"
#include "cliquecover/coloring.hpp"
#include "cliquecover/errors.hpp"
#include "cliquecover/mycielski.hpp"
#include "cliquecover/rng.hpp"

namespace cliquecover {

namespace {

struct Layout {
  std::vector<std::uint64_t> copies;
  std::vector<std::uint64_t> block_size;
  std::vector<int> start;
  std::uint64_t total = 1;
};

// Block sizes for one level of the recursion: block 0 is the single vertex
// x0, and a block in layer j holds h_i copies of the previous level, where
// h_i is the product of the sizes of its in-neighbor blocks.
Layout level_layout(const RootedDag& skel, std::uint64_t child_size) {
  const int nk = skel.base.vertex_count();
  Layout out;
  out.copies.assign(nk, 0);
  out.block_size.assign(nk, 0);
  out.copies[0] = 1;
  out.block_size[0] = 1;
  for (std::size_t j = 1; j < skel.layers.size(); ++j) {
    for (int i : skel.layers[j]) {
      std::uint64_t h = 1;
      for (int pred : skel.in_sets[i]) h *= out.block_size[pred];
      out.copies[i] = h;
      out.block_size[i] = h * child_size;
    }
  }
  out.start.assign(nk, 0);
  std::uint64_t cum = 1;
  for (int i = 1; i < nk; ++i) {
    out.start[i] = static_cast<int>(cum);
    cum += out.block_size[i];
  }
  out.total = cum;
  return out;
}

// Same recursion in arbitrary precision, for the budget pre-check.
mpz_class predicted_total_mpz(const RootedDag& skel, int m) {
  mpz_class size = 1;
  const int nk = skel.base.vertex_count();
  for (int level = 2; level <= m; ++level) {
    std::vector<mpz_class> block(nk);
    block[0] = 1;
    mpz_class total = 1;
    for (std::size_t j = 1; j < skel.layers.size(); ++j) {
      for (int i : skel.layers[j]) {
        mpz_class h = 1;
        for (int pred : skel.in_sets[i]) h *= block[pred];
        block[i] = h * size;
        total += block[i];
      }
    }
    size = total;
  }
  return size;
}

LayeredGraph base_level(const RootedDag& skel, int k) {
  LayeredGraph lg;
  lg.m = 1;
  lg.k = k;
  lg.skeleton = skel;
  lg.graph = Graph(1, {});
  lg.labels = {VertexLabel{0, 1, -1}};
  lg.copies = {1};
  lg.block_start = {0};
  lg.copy_size = 1;
  return lg;
}

LayeredGraph compose(std::shared_ptr<const LayeredGraph> child, const RootedDag& skel,
                     int k, int m) {
  const int nk = skel.base.vertex_count();
  const int c = child->graph.vertex_count();
  Layout lay = level_layout(skel, static_cast<std::uint64_t>(c));

  std::vector<std::pair<int, int>> edges;
  // inner edges of every copy
  for (int i = 1; i < nk; ++i) {
    for (std::uint64_t g = 0; g < lay.copies[i]; ++g) {
      int off = lay.start[i] + static_cast<int>(g) * c;
      for (auto [a, b] : child->graph.edges()) edges.emplace_back(off + a, off + b);
    }
  }
  // joining edges: the tuple of in-block vertices indexed by each copy is
  // joined to the whole copy (mixed-radix decoding of the copy index)
  for (int i = 1; i < nk; ++i) {
    const auto& preds = skel.in_sets[i];
    const int s = static_cast<int>(preds.size());
    std::vector<std::uint64_t> radix(s), suffix(s, 1);
    for (int r = 0; r < s; ++r) radix[r] = lay.block_size[preds[r]];
    for (int r = s - 2; r >= 0; --r) suffix[r] = suffix[r + 1] * radix[r + 1];
    for (std::uint64_t g = 0; g < lay.copies[i]; ++g) {
      int off = lay.start[i] + static_cast<int>(g) * c;
      for (int r = 0; r < s; ++r) {
        int src = lay.start[preds[r]] + static_cast<int>((g / suffix[r]) % radix[r]);
        for (int idx = 0; idx < c; ++idx) edges.emplace_back(src, off + idx);
      }
    }
  }

  LayeredGraph lg;
  lg.m = m;
  lg.k = k;
  lg.skeleton = skel;
  lg.graph = Graph(static_cast<int>(lay.total), std::move(edges));
  lg.labels.resize(lay.total);
  lg.labels[0] = VertexLabel{0, 1, -1};
  for (int i = 1; i < nk; ++i)
    for (std::uint64_t g = 0; g < lay.copies[i]; ++g)
      for (int idx = 0; idx < c; ++idx)
        lg.labels[lay.start[i] + g * c + idx] =
            VertexLabel{i, static_cast<int>(g) + 1, idx};
  lg.child = std::move(child);
  lg.copies = std::move(lay.copies);
  lg.block_start = std::move(lay.start);
  lg.copy_size = c;
  return lg;
}

LayeredGraph build_over(const RootedDag& skel, int m, int k, const Caps& caps) {
  mpz_class predicted = predicted_total_mpz(skel, m);
  if (predicted > mpz_class(static_cast<unsigned long>(caps.vertex_budget)))
    throw BudgetError("build: predicted size " + predicted.get_str() +
                      " exceeds vertex budget " + std::to_string(caps.vertex_budget));
  LayeredGraph cur = base_level(skel, k);
  for (int level = 2; level <= m; ++level)
    cur = compose(std::make_shared<LayeredGraph>(std::move(cur)), skel, k, level);
  return cur;
}

void check_build_params(int m, int k) {
  if (m < 1) throw std::invalid_argument("build: m must be >= 1");
  if (k < 2) throw std::invalid_argument("build: k must be >= 2");
}

// First index in [0, count) where check() fails, or -1. Workers scan
// ascending chunks and the global minimum is taken, so the answer does not
// depend on the thread count.
std::int64_t first_violation(std::uint64_t count, int threads,
                             const std::function<bool(std::uint64_t)>& check) {
  if (threads <= 1 || count < 1024) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (!check(i)) return static_cast<std::int64_t>(i);
    return -1;
  }
  std::atomic<std::uint64_t> best{count};
  const std::uint64_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(count, lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (!check(i)) {
          std::uint64_t prev = best.load(std::memory_order_relaxed);
          while (i < prev && !best.compare_exchange_weak(prev, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  std::uint64_t found = best.load();
  return found == count ? -1 : static_cast<std::int64_t>(found);
}

std::vector<int> decode_assignment(std::uint64_t index, int n, int k) {
  std::vector<int> a(n);
  for (int v = n - 1; v >= 0; --v) {
    a[v] = static_cast<int>(index % k);
    index /= k;
  }
  return a;
}

// k^n, or nullopt on overflow past the cap.
std::uint64_t partition_count_or_throw(int n, int k, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > cap / static_cast<std::uint64_t>(k))
      throw BudgetError("exhaustive partition scan: " + std::to_string(k) + "^" +
                        std::to_string(n) + " exceeds cap " + std::to_string(cap));
    count *= static_cast<std::uint64_t>(k);
  }
  if (count > cap)
    throw BudgetError("exhaustive partition scan: " + std::to_string(k) + "^" +
                      std::to_string(n) + " exceeds cap " + std::to_string(cap));
  return count;
}

Bitset part_bitset(const std::vector<int>& assignment, int part, int n) {
  Bitset b(n);
  for (int v = 0; v < n; ++v)
    if (assignment[v] == part) b.set(v);
  return b;
}

}  // namespace

LayeredGraph build(int m, int k, const Caps& caps) {
  check_build_params(m, k);
  Graph kgraph = triangle_free_chromatic(k + 1, caps.chromatic_cap);
  RootedDag skel = orient_from_root(kgraph, 0);
  return build_over(skel, m, k, caps);
}

LayeredGraph build_from_skeleton(int m, int k, const Graph& skeleton_graph, const Caps& caps) {
  check_build_params(m, k);
  if (!skeleton_graph.is_connected())
    throw std::invalid_argument("skeleton must be connected");
  if (has_clique_of_size(skeleton_graph, 3))
    throw std::invalid_argument("skeleton must be triangle-free");
  int chi = chromatic_number(skeleton_graph, caps.chromatic_cap);
  if (chi != k + 1)
    throw std::invalid_argument("skeleton must be (k+1)-chromatic, found chi = " +
                                std::to_string(chi));
  RootedDag skel = orient_from_root(skeleton_graph, 0);
  return build_over(skel, m, k, caps);
}

std::string predicted_size(int m, int k, const Caps& caps) {
  check_build_params(m, k);
  Graph kgraph = triangle_free_chromatic(k + 1, caps.chromatic_cap);
  RootedDag skel = orient_from_root(kgraph, 0);
  return predicted_total_mpz(skel, m).get_str();
}

PartitionCheck check_robustness(const Graph& g, int m, int k, const CheckMode& mode,
                                const Caps& caps) {
  if (k < 2) throw std::invalid_argument("check_robustness: k must be >= 2");
  const int n = g.vertex_count();
  auto adj = g.adjacency_bitsets();

  auto robust_for = [&](const std::vector<int>& assignment) {
    for (int t = 0; t < k; ++t)
      if (subset_has_clique(adj, part_bitset(assignment, t, n), m)) return true;
    return false;
  };

  PartitionCheck out;
  if (mode.exhaustive) {
    std::uint64_t count = partition_count_or_throw(n, k, caps.exhaustive_cap);
    out.examined = count;
    std::int64_t bad = first_violation(count, caps.threads, [&](std::uint64_t idx) {
      return robust_for(decode_assignment(idx, n, k));
    });
    if (bad >= 0) {
      out.holds = false;
      out.counterexample = decode_assignment(static_cast<std::uint64_t>(bad), n, k);
      out.examined = static_cast<std::uint64_t>(bad) + 1;
    }
  } else {
    Rng rng(mode.seed);
    out.examined = mode.trials;
    for (std::uint64_t t = 0; t < mode.trials; ++t) {
      std::vector<int> a(n);
      for (int v = 0; v < n; ++v) a[v] = static_cast<int>(rng.below(k));
      if (!robust_for(a)) {
        out.holds = false;
        out.counterexample = std::move(a);
        out.examined = t + 1;
        break;
      }
    }
  }
  return out;
}

PartitionCheck check_robustness(const LayeredGraph& lg, const CheckMode& mode,
                                const Caps& caps) {
  return check_robustness(lg.graph, lg.m, lg.k, mode, caps);
}

PartitionCheck check_zhang_inequality(const Graph& g, const CheckMode& mode,
                                      const Caps& caps) {
  const int n = g.vertex_count();
  PartitionCheck out;
  if (n < 2) return out;  // no nonempty 2-split exists
  auto adj = g.adjacency_bitsets();
  const int omega = max_clique(g).size;

  auto split_ok = [&](const std::vector<int>& assignment) {
    Bitset p0 = part_bitset(assignment, 0, n);
    Bitset p1 = part_bitset(assignment, 1, n);
    int w0 = subset_clique_number(adj, p0);
    // strict inequality needs w1 > omega - w0
    return subset_has_clique(adj, p1, omega - w0 + 1);
  };

  if (mode.exhaustive) {
    std::uint64_t count = partition_count_or_throw(n, 2, caps.exhaustive_cap);
    out.examined = count - 2;
    // skip index 0 (everything in part 1) and count-1 (everything in part 0)
    std::int64_t bad = first_violation(count - 2, caps.threads, [&](std::uint64_t idx) {
      return split_ok(decode_assignment(idx + 1, n, 2));
    });
    if (bad >= 0) {
      out.holds = false;
      out.counterexample = decode_assignment(static_cast<std::uint64_t>(bad) + 1, n, 2);
      out.examined = static_cast<std::uint64_t>(bad) + 1;
    }
  } else {
    Rng rng(mode.seed);
    out.examined = mode.trials;
    for (std::uint64_t t = 0; t < mode.trials; ++t) {
      std::vector<int> a(n);
      bool has0 = false, has1 = false;
      do {
        has0 = has1 = false;
        for (int v = 0; v < n; ++v) {
          a[v] = static_cast<int>(rng.below(2));
          (a[v] ? has1 : has0) = true;
        }
      } while (!has0 || !has1);
      if (!split_ok(a)) {
        out.holds = false;
        out.counterexample = std::move(a);
        out.examined = t + 1;
        break;
      }
    }
  }
  return out;
}

namespace {

void validate_partition_assignment(const LayeredGraph& lg, const std::vector<int>& part_of) {
  if (static_cast<int>(part_of.size()) != lg.graph.vertex_count())
    throw std::invalid_argument("witness: partition must assign every vertex");
  for (int p : part_of)
    if (p < 0 || p >= lg.k)
      throw std::invalid_argument("witness: part index out of range");
}

}  // namespace

Witness extract_witness(const LayeredGraph& lg, const std::vector<int>& part_of) {
  validate_partition_assignment(lg, part_of);
  if (lg.m == 1) return {part_of[0], {0}};

  const int n = lg.graph.vertex_count();
  const int c = lg.copy_size;
  const RootedDag& skel = lg.skeleton;
  const int nk = skel.base.vertex_count();
  auto adj = lg.graph.adjacency_bitsets();

  std::vector<Bitset> parts(lg.k, Bitset(n));
  for (int v = 0; v < n; ++v) parts[part_of[v]].set(v);

  std::vector<int> w_local(nk, -1);   // chosen vertex per block, block-local
  std::vector<int> t_of(nk, -1);      // part chosen per block
  std::vector<VertexSet> block_clique(nk);

  t_of[0] = part_of[0];
  w_local[0] = 0;

  for (std::size_t j = 1; j < skel.layers.size(); ++j) {
    for (int i : skel.layers[j]) {
      const auto& preds = skel.in_sets[i];
      const int s = static_cast<int>(preds.size());
      std::vector<std::uint64_t> radix(s), suffix(s, 1);
      for (int r = 0; r < s; ++r) radix[r] = static_cast<std::uint64_t>(lg.block_size(preds[r]));
      for (int r = s - 2; r >= 0; --r) suffix[r] = suffix[r + 1] * radix[r + 1];
      std::uint64_t g = 0;
      for (int r = 0; r < s; ++r) g += static_cast<std::uint64_t>(w_local[preds[r]]) * suffix[r];

      const int off = lg.block_start[i] + static_cast<int>(g) * c;
      Bitset copy_mask(n);
      for (int idx = 0; idx < c; ++idx) copy_mask.set(off + idx);

      for (int t = 0; t < lg.k; ++t) {
        Bitset candidates = copy_mask & parts[t];
        if (subset_has_clique(adj, candidates, lg.m - 1)) {
          t_of[i] = t;
          block_clique[i] = lex_smallest_clique(adj, candidates, lg.m - 1);
          w_local[i] = block_clique[i].front() - lg.block_start[i];
          break;
        }
      }
      if (t_of[i] < 0)
        throw std::logic_error(
            "witness: no part of copy " + std::to_string(g + 1) + " in block " +
            std::to_string(i) + " reaches clique number m-1; construction is broken");
    }
  }

  // A proper k-coloring of the skeleton is impossible, so some skeleton edge
  // is monochromatic under t; take the first in ascending edge order.
  int head = -1, tail = -1;
  for (auto [u, v] : skel.base.edges()) {
    if (t_of[u] != t_of[v]) continue;
    bool u_into_v = std::binary_search(skel.in_sets[v].begin(), skel.in_sets[v].end(), u);
    head = u_into_v ? v : u;
    tail = u_into_v ? u : v;
    break;
  }
  if (head < 0)
    throw std::logic_error("witness: no monochromatic skeleton edge; construction is broken");

  Witness result;
  result.part = t_of[head];
  result.clique = block_clique[head];
  result.clique.push_back(lg.flat_index(tail, w_local[tail]));
  std::sort(result.clique.begin(), result.clique.end());

  if (static_cast<int>(result.clique.size()) != lg.m || !is_clique(lg.graph, result.clique))
    throw std::logic_error("witness: assembled set is not an m-clique");
  for (int v : result.clique)
    if (part_of[v] != result.part)
      throw std::logic_error("witness: assembled clique is not monochromatic");
  return result;
}

Witness extract_witness(const LayeredGraph& lg, const std::vector<VertexSet>& partition) {
  if (static_cast<int>(partition.size()) != lg.k)
    throw std::invalid_argument("witness: partition must have exactly k parts");
  std::vector<int> part_of(lg.graph.vertex_count(), -1);
  for (int t = 0; t < lg.k; ++t)
    for (int v : partition[t]) {
      if (v < 0 || v >= lg.graph.vertex_count())
        throw std::invalid_argument("witness: partition vertex out of range");
      if (part_of[v] != -1)
        throw std::invalid_argument("witness: partition parts overlap at vertex " +
                                    std::to_string(v));
      part_of[v] = t;
    }
  for (int v = 0; v < lg.graph.vertex_count(); ++v)
    if (part_of[v] < 0)
      throw std::invalid_argument("witness: vertex " + std::to_string(v) + " not covered");
  return extract_witness(lg, part_of);
}

namespace {

nlohmann::ordered_json dag_to_json_obj(const RootedDag& d) {
  nlohmann::ordered_json j;
  j["n"] = d.base.vertex_count();
  j["root"] = d.root;
  auto arcs = nlohmann::ordered_json::array();
  for (auto [u, v] : d.arcs) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  j["l"] = d.l;
  return j;
}

RootedDag dag_from_json_obj(const nlohmann::json& j) {
  return rooted_dag_from_json(j.dump());
}

nlohmann::ordered_json layered_to_json_obj(const LayeredGraph& lg) {
  nlohmann::ordered_json j;
  j["m"] = lg.m;
  j["k"] = lg.k;
  j["skeleton"] = dag_to_json_obj(lg.skeleton);
  nlohmann::ordered_json graph;
  graph["n"] = lg.graph.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : lg.graph.edges()) edges.push_back({u, v});
  graph["edges"] = std::move(edges);
  j["graph"] = std::move(graph);
  auto labels = nlohmann::ordered_json::array();
  for (const auto& lab : lg.labels) labels.push_back({lab.host, lab.copy, lab.inner});
  j["labels"] = std::move(labels);
  j["child"] = lg.child ? layered_to_json_obj(*lg.child) : nlohmann::ordered_json(nullptr);
  return j;
}

LayeredGraph layered_from_json_obj(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  const int k = j.at("k").get<int>();
  check_build_params(m, k);
  RootedDag skel = dag_from_json_obj(j.at("skeleton"));

  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("graph").at("edges"))
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  Graph stored(j.at("graph").at("n").get<int>(), std::move(edges));

  std::vector<VertexLabel> labels;
  for (const auto& lab : j.at("labels"))
    labels.push_back({lab[0].get<int>(), lab[1].get<int>(), lab[2].get<int>()});

  LayeredGraph lg;
  if (m == 1) {
    if (j.at("child") != nullptr)
      throw std::invalid_argument("layered json: level 1 must not have a child");
    lg = base_level(skel, k);
  } else {
    if (j.at("child") == nullptr)
      throw std::invalid_argument("layered json: missing child level");
    auto child = std::make_shared<LayeredGraph>(layered_from_json_obj(j.at("child")));
    if (child->m != m - 1)
      throw std::invalid_argument("layered json: child level must have order m-1");
    lg = compose(std::move(child), skel, k, m);
  }
  if (!(lg.graph == stored))
    throw std::invalid_argument(
        "layered json: stored graph disagrees with reconstruction from skeleton/child");
  if (lg.labels != labels)
    throw std::invalid_argument("layered json: stored labels disagree with reconstruction");
  if (!has_clique_of_size(lg.graph, m) || has_clique_of_size(lg.graph, m + 1))
    throw std::invalid_argument("layered json: clique number is not m");
  return lg;
}

}  // namespace

std::string layered_graph_to_json(const LayeredGraph& lg) {
  return layered_to_json_obj(lg).dump();
}

LayeredGraph layered_graph_from_json(const std::string& text) {
  return layered_from_json_obj(nlohmann::json::parse(text));
}

}  // namespace cliquecover
