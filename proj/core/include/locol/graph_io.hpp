#pragma once

#include <string>
#include <string_view>

#include "locol/graph.hpp"

namespace locol {

// Edge-list text:
//
//   # comment
//   n <order>
//   e <u> <v>
//
// serialize_graph writes u < v with edges in lexicographic order, LF line
// endings and no comments, so parse_graph(serialize_graph(g)) == g and the
// text of a graph is unique.
//
// parse_graph accepts blank lines, comments and edges in any order or
// orientation; errors carry the 1-based line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace locol
