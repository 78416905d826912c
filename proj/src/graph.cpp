#include "magic/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "magic/errors.hpp"

namespace magic {

MultiGraph::MultiGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : n_(n) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    edges_.push_back(EdgeRecord{static_cast<EdgeId>(edges_.size()), u, v, std::nullopt});
  }
  index();
}

MultiGraph::MultiGraph(int n, std::vector<EdgeRecord> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  for (std::size_t i = 0; i < edges_.size(); ++i) edges_[i].id = static_cast<EdgeId>(i);
  index();
}

void MultiGraph::index() {
  incident_.assign(n_, {});
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw InvalidInput("edge " + std::to_string(e.id) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw InvalidInput("edge " + std::to_string(e.id) + " is a loop");
    incident_[e.u].push_back(e.id);
    incident_[e.v].push_back(e.id);
  }
}

int MultiGraph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return n_ == 0 ? 0 : best;
}

std::vector<std::pair<Vertex, Vertex>> MultiGraph::edge_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  return a.n_ == b.n_ && a.edge_pairs() == b.edge_pairs();
}

MultiGraph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 1) throw InvalidInput("a graph needs at least one vertex");
  return MultiGraph(n, edges);
}

MultiGraph spanning_subgraph(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<EdgeRecord> kept;
  kept.reserve(edges.size());
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size()) throw InvalidInput("edge id out of range");
    const auto& rec = g.edge(e);
    kept.push_back(EdgeRecord{0, rec.u, rec.v, e});
  }
  return MultiGraph(g.order(), std::move(kept));
}

VertexSubgraph induced_subgraph(const MultiGraph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  VertexSubgraph out;
  out.vertex_map.assign(vertices.begin(), vertices.end());
  std::vector<EdgeRecord> kept;
  for (const auto& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      kept.push_back(EdgeRecord{0, local[e.u], local[e.v], e.id});
      out.edge_map.push_back(e.id);
    }
  }
  out.graph = MultiGraph(static_cast<int>(vertices.size()), std::move(kept));
  return out;
}

std::optional<int> regularity(const MultiGraph& g) {
  if (g.order() == 0) return 0;
  const int r = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

std::vector<std::vector<Vertex>> components(const MultiGraph& g) {
  std::vector<int> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> part{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (EdgeId e : g.incident(part[i])) {
        const Vertex w = g.edge(e).other(part[i]);
        if (!seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  return out;
}

bool is_connected(const MultiGraph& g) { return components(g).size() <= 1; }

std::vector<int> TwoRegularProfile::lengths() const {
  std::vector<int> out;
  for (const auto& c : cycles) out.push_back(c.length());
  return out;
}

TwoRegularProfile two_regular_profile(const MultiGraph& g) {
  if (regularity(g) != 2) throw InvalidInput("graph is not 2-regular");
  TwoRegularProfile profile;
  std::vector<int> used(g.size(), 0);
  for (const auto& comp : components(g)) {
    Cycle cycle;
    Vertex at = comp.front();
    EdgeId next = g.incident(at).front();
    while (!used[next]) {
      used[next] = 1;
      cycle.vertices.push_back(at);
      cycle.edges.push_back(next);
      at = g.edge(next).other(at);
      for (EdgeId e : g.incident(at)) {
        if (!used[e]) {
          next = e;
          break;
        }
      }
    }
    if (cycle.length() % 2 == 1) profile.has_odd_cycle = true;
    profile.cycles.push_back(std::move(cycle));
  }
  return profile;
}

namespace {

// Unit-capacity max flow between s and t on the undirected multigraph,
// stopping early once `cap` is reached.
int unit_max_flow(const MultiGraph& g, Vertex s, Vertex t, int cap) {
  // Each undirected edge becomes two opposite arcs of capacity 1.
  const int m = g.size();
  std::vector<int> flow(2 * m, 0);  // arc 2e: u->v, arc 2e+1: v->u
  auto arc_tail = [&](int a) { return a % 2 == 0 ? g.edge(a / 2).u : g.edge(a / 2).v; };
  auto arc_head = [&](int a) { return a % 2 == 0 ? g.edge(a / 2).v : g.edge(a / 2).u; };
  int total = 0;
  std::vector<int> via(g.order());
  while (total < cap) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = -2;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty() && via[t] == -1) {
      const Vertex x = q.front();
      q.pop();
      for (EdgeId e : g.incident(x)) {
        for (int a : {2 * e, 2 * e + 1}) {
          if (arc_tail(a) != x) continue;
          // residual of arc a is 1 - flow[a] + flow[a^1]
          if (1 - flow[a] + flow[a ^ 1] <= 0) continue;
          const Vertex y = arc_head(a);
          if (via[y] != -1) continue;
          via[y] = a;
          q.push(y);
        }
      }
    }
    if (via[t] == -1) break;
    for (Vertex y = t; y != s;) {
      const int a = via[y];
      if (flow[a ^ 1] > 0) {
        --flow[a ^ 1];
      } else {
        ++flow[a];
      }
      y = arc_tail(a);
    }
    ++total;
  }
  return total;
}

}  // namespace

int edge_connectivity(const MultiGraph& g) {
  if (g.order() <= 1 || !is_connected(g)) return 0;
  int best = g.min_degree();
  for (Vertex t = 1; t < g.order() && best > 0; ++t) {
    best = std::min(best, unit_max_flow(g, 0, t, best));
  }
  return best;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> out;
  int clock = 0;
  // Iterative DFS; the parent edge is skipped by id so parallel copies
  // count as back edges.
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const Vertex w = g.edge(e).other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = clock++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > disc[parent]) out.push_back(done.via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace magic
