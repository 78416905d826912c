#pragma once

#include <utility>
#include <vector>

namespace magic::detail {

// Maximum cardinality matching in a general graph (Edmonds' blossom
// shrinking). Returns mate[v], or -1 for unmatched vertices.
std::vector<int> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace magic::detail
