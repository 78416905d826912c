#include "magic/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "magic/errors.hpp"

namespace magic {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

MultiGraph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  Pairs e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return MultiGraph(n, e);
}

MultiGraph complete_graph(int n) {
  if (n < 1) throw InvalidInput("complete graph needs n >= 1");
  Pairs e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return MultiGraph(n, e);
}

MultiGraph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InvalidInput("complete bipartite graph needs both sides >= 1");
  Pairs e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return MultiGraph(a + b, e);
}

MultiGraph circulant_graph(int n, std::span<const int> jumps) {
  if (n < 3) throw InvalidInput("circulant needs n >= 3");
  std::set<int> seen;
  for (int j : jumps) {
    if (j < 1 || 2 * j > n) throw InvalidInput("circulant jump out of range [1, n/2]");
    if (!seen.insert(j).second) throw InvalidInput("repeated circulant jump");
  }
  Pairs e;
  for (int j : seen) {
    for (int i = 0; i < n; ++i) {
      if (2 * j == n && i >= n / 2) break;
      e.emplace_back(i, (i + j) % n);
    }
  }
  return MultiGraph(n, e);
}

MultiGraph petersen_graph() {
  Pairs e;
  for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
  for (int i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
  return MultiGraph(10, e);
}

MultiGraph prism_graph(int n) {
  if (n < 3) throw InvalidInput("prism needs n >= 3");
  Pairs e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) e.emplace_back(n + i, n + (i + 1) % n);
  for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
  return MultiGraph(2 * n, e);
}

MultiGraph disjoint_union(std::span<const MultiGraph> parts) {
  Pairs e;
  int offset = 0;
  for (const auto& g : parts) {
    for (const auto& rec : g.edges()) e.emplace_back(rec.u + offset, rec.v + offset);
    offset += g.order();
  }
  return MultiGraph(offset, e);
}

MultiGraph random_regular_graph(int n, int r, std::uint64_t seed, int max_attempts) {
  if (n < 1 || r < 0 || r >= n) throw InvalidInput("random regular graph needs 0 <= r < n");
  if ((static_cast<long>(n) * r) % 2 != 0) throw InvalidInput("n * r must be even");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * r);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < r; ++i) points.push_back(v);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    Pairs e;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      Vertex a = points[i], b = points[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) {
        ok = false;
        break;
      }
      e.emplace_back(a, b);
    }
    if (ok) {
      std::sort(e.begin(), e.end());
      return MultiGraph(n, e);
    }
  }
  throw GenerationFailure("pairing model failed after " + std::to_string(max_attempts) +
                          " attempts");
}

}  // namespace magic
