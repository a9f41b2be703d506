#pragma once

#include <iosfwd>
#include <string>

#include "cliquecover/graph.hpp"

namespace cliquecover {

// Text format:
//   graph <n>
//   e <u> <v>        (one per edge, 0-based)
//   # comment
// The JSON form {"n":..., "edges":[[u,v],...]} is accepted interchangeably
// on read (sniffed by the leading '{').
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph_text(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);
std::string graph_to_json(const Graph& g);

}  // namespace cliquecover
