#include "cliquecover/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cliquecover {

namespace {

Graph graph_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: each edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, std::move(edges));
}

Graph graph_from_text(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "graph") {
      if (!(ls >> n)) throw std::invalid_argument("graph text: bad header line");
    } else if (tag == "e") {
      int u, v;
      if (!(ls >> u >> v)) throw std::invalid_argument("graph text: bad edge line: " + line);
      edges.emplace_back(u, v);
    } else {
      throw std::invalid_argument("graph text: unrecognized line: " + line);
    }
  }
  if (n < 0) throw std::invalid_argument("graph text: missing 'graph <n>' header");
  return Graph(n, std::move(edges));
}

}  // namespace

Graph read_graph(std::istream& in) {
  // sniff for JSON
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
    in.get();
    c = in.peek();
  }
  if (c == '{') {
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
  }
  return graph_from_text(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream ss;
  write_graph_text(ss, g);
  return ss.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace cliquecover
