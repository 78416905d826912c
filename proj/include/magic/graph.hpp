#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace magic {

using Vertex = int;
using EdgeId = int;
using EdgeSet = std::vector<EdgeId>;

struct EdgeRecord {
  EdgeId id = 0;
  Vertex u = 0;
  Vertex v = 0;
  // For edges of a derived graph: the id of the source-graph edge this one
  // stands for.
  std::optional<EdgeId> origin;

  Vertex other(Vertex w) const { return w == u ? v : u; }
};

// Undirected multigraph on vertices 0..n-1. Parallel edges are allowed,
// loops are not. Edge ids are 0..m-1 in insertion order and never change.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Throws InvalidInput on a loop or an out-of-range endpoint.
  MultiGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  MultiGraph(int n, std::vector<EdgeRecord> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(EdgeId e) const { return edges_[e]; }

  // Incident edge ids of v, in increasing id order. A parallel pair shows
  // up twice.
  const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }
  int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
  int min_degree() const;

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  void index();

  int n_ = 0;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

MultiGraph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

// Spanning subgraph on the same vertex set keeping the listed edges. Edge i
// of the result has origin = edges[i] (an id of g).
MultiGraph spanning_subgraph(const MultiGraph& g, std::span<const EdgeId> edges);

// Subgraph induced by a vertex set, vertices renumbered in the order given.
// Edge origins point into g.
struct VertexSubgraph {
  MultiGraph graph;
  std::vector<Vertex> vertex_map;  // local vertex -> g vertex
  std::vector<EdgeId> edge_map;    // local edge -> g edge
};
VertexSubgraph induced_subgraph(const MultiGraph& g, std::span<const Vertex> vertices);

// Common degree, or nullopt when g is not regular. An empty vertex set
// counts as 0-regular.
std::optional<int> regularity(const MultiGraph& g);

// Connected components ordered by smallest vertex; each sorted.
std::vector<std::vector<Vertex>> components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1 mod len]
  int length() const { return static_cast<int>(edges.size()); }
};

struct TwoRegularProfile {
  std::vector<Cycle> cycles;  // one per component, ordered by smallest vertex
  bool has_odd_cycle = false;

  std::vector<int> lengths() const;
};

// Throws InvalidInput when g is not 2-regular.
TwoRegularProfile two_regular_profile(const MultiGraph& g);

// Exact edge connectivity; 0 when disconnected or n <= 1.
int edge_connectivity(const MultiGraph& g);

// Edge ids whose removal disconnects their component. Parallel copies are
// never bridges.
std::vector<EdgeId> bridges(const MultiGraph& g);

}  // namespace magic
