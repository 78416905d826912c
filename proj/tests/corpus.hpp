#pragma once

#include <string>
#include <vector>

#include "magic/generators.hpp"

namespace corpus {

struct Entry {
  std::string name;
  magic::MultiGraph graph;
};

inline std::vector<Entry> desk_corpus() {
  using namespace magic;
  const std::vector<MultiGraph> c34 = {cycle_graph(3), cycle_graph(4)};
  const std::vector<int> jumps = {1, 2};
  return {
      {"K4", complete_graph(4)},
      {"K5", complete_graph(5)},
      {"K6", complete_graph(6)},
      {"K3,3", complete_bipartite_graph(3, 3)},
      {"Petersen", petersen_graph()},
      {"prism3", prism_graph(3)},
      {"Q3", prism_graph(4)},
      {"C3+C4", disjoint_union(c34)},
      {"circulant8(1,2)", circulant_graph(8, jumps)},
  };
}

}  // namespace corpus
