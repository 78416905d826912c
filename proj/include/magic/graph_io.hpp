#pragma once

#include <iosfwd>
#include <string>

#include "magic/graph.hpp"

namespace magic {

// Text format:
//   # comment lines anywhere
//   p <n> <m>
//   <u> <v>        (m lines, 0-based)
// Throws InvalidInput on malformed input.
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const MultiGraph& g);
void write_graph_file(const std::string& path, const MultiGraph& g);

}  // namespace magic
