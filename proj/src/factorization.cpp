#include "magic/factorization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "magic/errors.hpp"
#include "matching.hpp"

namespace magic {

DoublingMap double_graph(const MultiGraph& g) {
  const int m = g.size();
  std::vector<EdgeRecord> edges;
  edges.reserve(2 * static_cast<std::size_t>(m));
  for (const auto& e : g.edges()) edges.push_back(EdgeRecord{0, e.u, e.v, e.id});
  for (const auto& e : g.edges()) edges.push_back(EdgeRecord{0, e.u, e.v, e.id});
  DoublingMap map{g, MultiGraph(g.order(), std::move(edges)), {}};
  map.pairing.reserve(m);
  for (EdgeId i = 0; i < m; ++i) map.pairing.emplace_back(i, m + i);
  return map;
}

EulerCircuit euler_circuit(const MultiGraph& g, std::span<const Vertex> component) {
  if (component.empty()) throw InvalidInput("empty component");
  std::vector<char> inside(g.order(), 0);
  for (Vertex v : component) inside[v] = 1;
  for (Vertex v : component) {
    if (g.degree(v) % 2 != 0) {
      throw InvalidInput("vertex " + std::to_string(v) + " has odd degree");
    }
    for (EdgeId e : g.incident(v)) {
      if (!inside[g.edge(e).other(v)]) throw InvalidInput("component is not closed under edges");
    }
  }

  EulerCircuit out;
  out.component.assign(component.begin(), component.end());
  std::sort(out.component.begin(), out.component.end());
  const Vertex start = out.component.front();

  std::vector<char> used(g.size(), 0);
  std::vector<std::size_t> next(g.order(), 0);
  // (vertex, edge used to reach it)
  std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
  std::vector<std::pair<EdgeId, Vertex>> reversed;  // (edge, head)
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    const auto& inc = g.incident(v);
    while (next[v] < inc.size() && used[inc[next[v]]]) ++next[v];
    if (next[v] < inc.size()) {
      const EdgeId e = inc[next[v]];
      used[e] = 1;
      stack.emplace_back(g.edge(e).other(v), e);
    } else {
      stack.pop_back();
      if (via != -1) reversed.emplace_back(via, v);
    }
  }
  std::size_t expected = 0;
  for (Vertex v : out.component) expected += g.incident(v).size();
  if (2 * reversed.size() != expected) throw InvalidInput("component is disconnected");

  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
    out.edges.push_back(it->first);
    out.tails.push_back(g.edge(it->first).other(it->second));
  }
  return out;
}

namespace {

// Splits a rho-regular bipartite multigraph (left i -> right j per arc) into
// rho perfect matchings. Arcs are (left, right, edge id).
struct Arc {
  int left, right;
  EdgeId id;
};

std::vector<EdgeSet> decompose_regular_bipartite(int side, int rho, const std::vector<Arc>& arcs) {
  std::vector<std::vector<int>> out_arcs(side);
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) out_arcs[arcs[a].left].push_back(a);
  std::vector<char> removed(arcs.size(), 0);
  std::vector<EdgeSet> result;
  for (int round = 0; round < rho; ++round) {
    std::vector<int> match_right(side, -1);  // right vertex -> arc
    std::vector<char> visited(side);
    std::function<bool(int)> augment = [&](int u) {
      for (int a : out_arcs[u]) {
        if (removed[a]) continue;
        const int w = arcs[a].right;
        if (visited[w]) continue;
        visited[w] = 1;
        if (match_right[w] == -1 || augment(arcs[match_right[w]].left)) {
          match_right[w] = a;
          return true;
        }
      }
      return false;
    };
    for (int u = 0; u < side; ++u) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(u)) throw Error("regular bipartite graph without a perfect matching");
    }
    EdgeSet part;
    for (int w = 0; w < side; ++w) {
      removed[match_right[w]] = 1;
      part.push_back(arcs[match_right[w]].id);
    }
    std::sort(part.begin(), part.end());
    result.push_back(std::move(part));
  }
  return result;
}

}  // namespace

FactorDecomposition two_factorization(const MultiGraph& g) {
  const auto r2 = regularity(g);
  if (!r2 || *r2 % 2 != 0) throw InvalidInput("two_factorization needs an even-regular graph");
  const int rho = *r2 / 2;
  FactorDecomposition out;
  out.parts.assign(rho, {});
  out.degrees.assign(rho, 2);
  if (rho == 0) return out;

  for (const auto& comp : components(g)) {
    const EulerCircuit circuit = euler_circuit(g, comp);
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    const std::size_t len = circuit.edges.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex tail = circuit.tails[i];
      const Vertex head = g.edge(circuit.edges[i]).other(tail);
      arcs.push_back(Arc{local[tail], local[head], circuit.edges[i]});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.id < b.id; });
    auto parts = decompose_regular_bipartite(static_cast<int>(comp.size()), rho, arcs);
    for (int j = 0; j < rho; ++j) {
      out.parts[j].insert(out.parts[j].end(), parts[j].begin(), parts[j].end());
    }
  }
  for (auto& p : out.parts) std::sort(p.begin(), p.end());
  return out;
}

FactorDecomposition extract_2h_factor(const MultiGraph& g, int h) {
  const auto r2 = regularity(g);
  if (!r2 || *r2 % 2 != 0) throw InvalidInput("extract_2h_factor needs an even-regular graph");
  const int rho = *r2 / 2;
  if (h < 1 || h > rho) throw InvalidInput("h must lie in [1, r]");
  const auto two = two_factorization(g);
  EdgeSet first, rest;
  for (int j = 0; j < rho; ++j) {
    auto& dst = j < h ? first : rest;
    dst.insert(dst.end(), two.parts[j].begin(), two.parts[j].end());
  }
  std::sort(first.begin(), first.end());
  std::sort(rest.begin(), rest.end());
  return FactorDecomposition{{std::move(first), std::move(rest)}, {2 * h, 2 * (rho - h)}};
}

std::vector<int> factor_degrees(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

EdgeSet complement_edges(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<char> in(g.size(), 0);
  for (EdgeId e : edges) in[e] = 1;
  EdgeSet out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!in[e]) out.push_back(e);
  return out;
}

std::optional<EdgeSet> degree_set_factor_search(const MultiGraph& g,
                                                std::span<const std::vector<int>> allowed) {
  const int n = g.order();
  const int m = g.size();
  if (static_cast<int>(allowed.size()) != n) throw InvalidInput("one degree set per vertex");
  std::vector<int> deg(n, 0), left(n, 0);
  for (Vertex v = 0; v < n; ++v) left[v] = g.degree(v);
  std::vector<char> take(m, 0);

  auto reachable = [&](Vertex v) {
    // some allowed degree in [deg, deg + left]
    for (int d : allowed[v])
      if (d >= deg[v] && d <= deg[v] + left[v]) return true;
    return false;
  };
  auto closed_ok = [&](Vertex v) {
    return left[v] > 0 ||
           std::find(allowed[v].begin(), allowed[v].end(), deg[v]) != allowed[v].end();
  };
  for (Vertex v = 0; v < n; ++v)
    if (!reachable(v)) return std::nullopt;

  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == m) return true;
    const auto& e = g.edge(i);
    --left[e.u];
    --left[e.v];
    for (int choice : {1, 0}) {
      take[i] = static_cast<char>(choice);
      deg[e.u] += choice;
      deg[e.v] += choice;
      if (reachable(e.u) && reachable(e.v) && closed_ok(e.u) && closed_ok(e.v) && go(i + 1)) {
        return true;
      }
      deg[e.u] -= choice;
      deg[e.v] -= choice;
    }
    ++left[e.u];
    ++left[e.v];
    return false;
  };
  if (!go(0)) return std::nullopt;
  EdgeSet out;
  for (EdgeId e = 0; e < m; ++e)
    if (take[e]) out.push_back(e);
  return out;
}

namespace {

// Tutte's gadget: vertex v becomes deg(v) outer slots (one per incident
// edge) plus deg(v) - target(v) inner vertices joined to all its slots; edge
// uv joins the two slots it owns. Perfect matchings of the gadget are
// exactly the target-factors of g.
std::optional<EdgeSet> degree_factor_by_matching(const MultiGraph& g, std::span<const int> target) {
  const int n = g.order();
  std::vector<std::vector<int>> slot_of(n);  // parallel to g.incident(v)
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    slot_of[v].resize(g.degree(v));
    for (int i = 0; i < g.degree(v); ++i) slot_of[v][i] = next++;
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> edge_slots(g.size(), {-1, -1});
  for (Vertex v = 0; v < n; ++v) {
    const auto& inc = g.incident(v);
    for (int i = 0; i < static_cast<int>(inc.size()); ++i) {
      auto& es = edge_slots[inc[i]];
      (es.first == -1 ? es.first : es.second) = slot_of[v][i];
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) edges.push_back(edge_slots[e]);
  for (Vertex v = 0; v < n; ++v) {
    const int inner = g.degree(v) - target[v];
    for (int j = 0; j < inner; ++j) {
      const int w = next++;
      for (int s : slot_of[v]) edges.emplace_back(w, s);
    }
  }
  const auto mate = detail::maximum_matching(next, edges);
  for (int x = 0; x < next; ++x)
    if (mate[x] == -1) return std::nullopt;
  EdgeSet out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (mate[edge_slots[e].first] == edge_slots[e].second) out.push_back(e);
  }
  return out;
}

}  // namespace

std::optional<EdgeSet> degree_factor(const MultiGraph& g, std::span<const int> target,
                                     const FactorOptions& opts) {
  if (static_cast<int>(target.size()) != g.order()) throw InvalidInput("one target per vertex");
  long total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (target[v] < 0 || target[v] > g.degree(v)) throw InvalidInput("degree target out of range");
    total += target[v];
  }
  if (total % 2 != 0) return std::nullopt;
  if (g.size() <= opts.exhaustive_max_edges) {
    std::vector<std::vector<int>> allowed;
    for (int t : target) allowed.push_back({t});
    return degree_set_factor_search(g, allowed);
  }
  return degree_factor_by_matching(g, target);
}

std::optional<EdgeSet> f_factor(const MultiGraph& g, int h, const FactorOptions& opts) {
  if (h < 0 || h > g.min_degree()) throw InvalidInput("h must lie in [0, min degree]");
  const std::vector<int> target(g.order(), h);
  return degree_factor(g, target, opts);
}

std::optional<EdgeSet> congruence_factor(const MultiGraph& g, int residue, int modulus,
                                         const FactorOptions& opts) {
  if (modulus < 1) throw InvalidInput("modulus must be positive");
  residue = ((residue % modulus) + modulus) % modulus;
  const int n = g.order();
  std::vector<std::vector<int>> allowed(n);
  for (Vertex v = 0; v < n; ++v) {
    for (int d = residue; d <= g.degree(v); d += modulus) allowed[v].push_back(d);
    if (allowed[v].empty()) return std::nullopt;
  }

  if (g.size() <= opts.exhaustive_max_edges) return degree_set_factor_search(g, allowed);
  double count = 1;
  for (const auto& a : allowed) count *= static_cast<double>(a.size());
  FactorOptions inner = opts;
  inner.exhaustive_max_edges = 0;
  if (count > static_cast<double>(opts.max_profiles)) {
    // Too many profiles: only uniform degrees are tried, and failure is
    // reported as a budget overrun, not as absence.
    for (int d = residue; d <= g.min_degree(); d += modulus) {
      const std::vector<int> profile(n, d);
      if (auto h = degree_factor(g, profile, inner)) return h;
    }
    throw BudgetExceeded("congruence factor: too many degree profiles");
  }

  // Enumerate profiles, then order by total degree and lexicographically.
  std::vector<std::vector<int>> profiles;
  std::vector<int> cur(n);
  std::function<void(int)> fill = [&](int v) {
    if (v == n) {
      if (std::accumulate(cur.begin(), cur.end(), 0L) % 2 == 0) profiles.push_back(cur);
      return;
    }
    for (int d : allowed[v]) {
      cur[v] = d;
      fill(v + 1);
    }
  };
  fill(0);
  std::stable_sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) {
    const long sa = std::accumulate(a.begin(), a.end(), 0L);
    const long sb = std::accumulate(b.begin(), b.end(), 0L);
    return sa != sb ? sa < sb : a < b;
  });
  for (const auto& profile : profiles) {
    if (auto h = degree_factor(g, profile, inner)) return h;
  }
  return std::nullopt;
}

std::optional<EdgeSet> mod3_factor(const MultiGraph& g, const FactorOptions& opts) {
  const auto r = regularity(g);
  if (!r || *r % 3 != 0 || *r % 2 == 0) {
    throw InvalidInput("mod3_factor needs an r-regular graph with r odd and divisible by 3");
  }
  return congruence_factor(g, 1, 3, opts);
}

}  // namespace magic
