#include "magic/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "magic/errors.hpp"

namespace magic {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

MultiGraph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidInput("graph line " + std::to_string(lineno) + ": " + what);
  };
  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    std::string tag, extra;
    if (!(ss >> tag >> n >> m) || tag != "p" || (ss >> extra)) fail("expected 'p <n> <m>'");
    break;
  }
  if (n < 0) throw InvalidInput("graph: missing 'p <n> <m>' header");
  if (n < 1 || m < 0) fail("bad header counts");

  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream ss(line);
    long u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) fail("expected '<u> <v>'");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long>(edges.size()) != m) {
    throw InvalidInput("graph: header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
  }
  return build_graph(static_cast<int>(n), edges);
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::string& path, const MultiGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  write_graph(out, g);
}

}  // namespace magic
