#include "cliquecover/orientation.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace cliquecover {

namespace {

// Topological order of the arc relation, or empty if a cycle exists.
std::vector<int> topological_order(int n, const std::vector<std::vector<int>>& out_adj) {
  std::vector<int> indegree(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : out_adj[u]) ++indegree[v];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) queue.push_back(v);
  std::vector<int> order;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    order.push_back(u);
    for (int v : out_adj[u])
      if (--indegree[v] == 0) queue.push_back(v);
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

std::vector<std::vector<int>> out_adjacency(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : arcs) out[u].push_back(v);
  return out;
}

}  // namespace

void RootedDag::recompute_derived() {
  const int n = base.vertex_count();
  auto out_adj = out_adjacency(n, arcs);
  auto order = topological_order(n, out_adj);
  if (order.empty() && n > 0)
    throw std::invalid_argument("rooted dag: arc relation contains a directed cycle");

  in_sets.assign(n, {});
  for (auto [u, v] : arcs) in_sets[v].push_back(u);
  for (auto& s : in_sets) std::sort(s.begin(), s.end());

  // longest path from root via DP over a topological order; -1 = unreachable
  l.assign(n, -1);
  l[root] = 0;
  for (int u : order) {
    if (l[u] < 0) continue;
    for (int v : out_adj[u]) l[v] = std::max(l[v], l[u] + 1);
  }
  for (int v = 0; v < n; ++v)
    if (l[v] < 0)
      throw std::invalid_argument("rooted dag: vertex " + std::to_string(v) +
                                  " not reachable from root");

  int depth = 0;
  for (int v = 0; v < n; ++v) depth = std::max(depth, l[v]);
  layers.assign(depth + 1, {});
  for (int v = 0; v < n; ++v) layers[l[v]].push_back(v);
}

RootedDag orient_from_root(const Graph& g, int root) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("orient_from_root: root out of range");
  if (!g.is_connected())
    throw std::invalid_argument("orient_from_root: graph must be connected");

  // iterative DFS, ascending neighbor order
  std::vector<int> disc(n, -1);
  int time = 0;
  struct Frame {
    int v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  disc[root] = time++;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    auto& f = stack.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next == nb.size()) {
      stack.pop_back();
      continue;
    }
    int w = nb[f.next++];
    if (disc[w] < 0) {
      disc[w] = time++;
      stack.push_back({w, 0});
    }
  }

  RootedDag d;
  d.base = g;
  d.root = root;
  d.arcs.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    if (disc[u] < disc[v])
      d.arcs.emplace_back(u, v);
    else
      d.arcs.emplace_back(v, u);
  }
  d.recompute_derived();
  return d;
}

LayerValidation validate_layers(const RootedDag& d) {
  const int n = d.base.vertex_count();

  // (a) every in-neighbor of a layer-j vertex lies in layers 0..j-1
  for (std::size_t j = 0; j < d.layers.size(); ++j) {
    for (int v : d.layers[j]) {
      if (v < 0 || v >= n) return {false, "layer member out of range"};
      for (int u : d.in_sets[v]) {
        if (u < 0 || u >= n) return {false, "in-set member out of range"};
        if (d.l[u] >= static_cast<int>(j))
          return {false, "condition (a): in-neighbor " + std::to_string(u) + " of vertex " +
                             std::to_string(v) + " is not in an earlier layer"};
      }
    }
  }

  // (b) no empty layer between 1 and depth
  for (std::size_t j = 1; j < d.layers.size(); ++j)
    if (d.layers[j].empty())
      return {false, "condition (b): layer " + std::to_string(j) + " is empty"};

  // (c) acyclicity
  auto out_adj = out_adjacency(n, d.arcs);
  if (topological_order(n, out_adj).empty() && n > 0)
    return {false, "condition (c): arc relation has a directed cycle"};

  // (d) reachability from root
  std::vector<char> seen(n, 0);
  std::vector<int> stack{d.root};
  seen[d.root] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : out_adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v])
      return {false, "condition (d): vertex " + std::to_string(v) + " unreachable from root"};

  return {};
}

std::string rooted_dag_to_json(const RootedDag& d) {
  nlohmann::ordered_json j;
  j["n"] = d.base.vertex_count();
  j["root"] = d.root;
  auto arcs = nlohmann::ordered_json::array();
  for (auto [u, v] : d.arcs) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  j["l"] = d.l;
  return j.dump();
}

RootedDag rooted_dag_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  RootedDag d;
  std::vector<std::pair<int, int>> undirected;
  for (const auto& a : j.at("arcs")) {
    d.arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    undirected.emplace_back(d.arcs.back());
  }
  d.base = Graph(n, std::move(undirected));
  if (d.arcs.size() != d.base.edges().size())
    throw std::invalid_argument("rooted dag json: duplicate or degenerate arcs");
  d.root = j.at("root").get<int>();
  if (d.root < 0 || d.root >= n) throw std::invalid_argument("rooted dag json: bad root");
  d.recompute_derived();
  auto stored = j.at("l").get<std::vector<int>>();
  if (stored != d.l)
    throw std::invalid_argument("rooted dag json: stored l-values disagree with recomputation");
  return d;
}

}  // namespace cliquecover
