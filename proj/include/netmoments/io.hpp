#pragma once

#include <iosfwd>
#include <string>

#include "netmoments/graph.hpp"
#include "netmoments/graphon.hpp"

namespace nm {

// Edge list: one "u v" pair per line, 0-based, '#' starts a comment. An
// optional "# n=<count>" line fixes the vertex count (so isolated trailing
// vertices survive a round trip); otherwise n = 1 + largest label.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// {"sizes": [...], "values": [[...], ...]}
Graphon parse_block_graphon(const std::string& json_text, const std::string& name = "block");
Graphon load_block_graphon(const std::string& path);

// Shortest decimal that round-trips, locale independent.
std::string format_double(double x);

}  // namespace nm
