#pragma once

#include <string>
#include <vector>

#include "cyclechain/graph.hpp"

namespace cyclechain {

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment; blank lines are ignored.  Throws input_error.
Graph parse_edge_list(const std::string& text, std::string label = {});
std::string to_edge_list(const Graph& g);

// graph6 codec for n <= 64 (long-form N(n) accepted for n in [63, 64]).
// Throws input_error on malformed bytes, truncation or trailing data.
Graph parse_graph6(const std::string& line, std::string label = {});
std::string to_graph6(const Graph& g);

// Reads .g6 (one graph per line) or .txt (single edge list) by extension.
// Labels are the file basename, suffixed with #k for multi-graph files.
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace cyclechain
