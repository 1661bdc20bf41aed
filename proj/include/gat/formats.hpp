#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gat/graph.hpp"

namespace gat {

// Edge-list text format:
//   # comment lines and blank lines are ignored
//   n <vertex-count>
//   u v            (one edge per line, 0-based indices)
Graph parse_edge_list(const std::string& text);

// One graph in graph6 short form (size byte 63+n, n <= 62, then the upper
// triangle of the adjacency matrix column-major in 6-bit groups). Long and
// extended size headers are rejected.
Graph parse_graph6(const std::string& line);

// Inverse of parse_graph6; requires 1 <= n <= 62.
std::string encode_graph6(const Graph& g);

// Reads graph6 graphs one per line; blank lines and the optional
// ">>graph6<<" header are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace gat
