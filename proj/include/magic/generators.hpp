#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "magic/graph.hpp"

namespace magic {

MultiGraph cycle_graph(int n);                  // C_n, n >= 3
MultiGraph complete_graph(int n);               // K_n, n >= 1
MultiGraph complete_bipartite_graph(int a, int b);
// Vertex i joined to i +- j (mod n) for each jump j in [1, n/2].
MultiGraph circulant_graph(int n, std::span<const int> jumps);
MultiGraph petersen_graph();
// C_n x K_2. prism_graph(4) is the cube Q_3.
MultiGraph prism_graph(int n);
MultiGraph disjoint_union(std::span<const MultiGraph> parts);

// Simple r-regular graph from the pairing model. Pairings with a loop or a
// repeated pair are rejected; after max_attempts rejections the call throws
// GenerationFailure.
MultiGraph random_regular_graph(int n, int r, std::uint64_t seed, int max_attempts = 1000);

}  // namespace magic
