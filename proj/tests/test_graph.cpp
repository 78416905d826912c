#include <doctest.h>

#include <set>
#include <sstream>

#include "corpus.hpp"
#include "magic/errors.hpp"
#include "magic/generators.hpp"
#include "magic/graph_io.hpp"
#include "oracles.hpp"

using namespace magic;

TEST_CASE("build_graph") {
  const std::vector<std::pair<int, int>> tri = {{0, 1}, {1, 2}, {2, 0}};
  const MultiGraph c3 = build_graph(3, tri);
  CHECK(c3.size() == 3);
  CHECK(c3.edge(2).u == 2);
  CHECK(c3.edge(2).v == 0);

  const std::vector<std::pair<int, int>> parallel = {{0, 1}, {0, 1}};
  const MultiGraph two = build_graph(2, parallel);
  CHECK(two.degree(0) == 2);
  CHECK(two.degree(1) == 2);

  const std::vector<std::pair<int, int>> loop = {{0, 0}};
  CHECK_THROWS_AS(build_graph(2, loop), InvalidInput);
  const std::vector<std::pair<int, int>> far = {{0, 5}};
  CHECK_THROWS_AS(build_graph(2, far), InvalidInput);
  CHECK_THROWS_AS(build_graph(0, {}), InvalidInput);
}

TEST_CASE("generators") {
  CHECK(cycle_graph(4).size() == 4);
  CHECK(regularity(cycle_graph(4)) == 2);
  CHECK(complete_graph(5).size() == 10);
  CHECK(regularity(complete_graph(5)) == 4);
  CHECK(regularity(petersen_graph()) == 3);
  CHECK(petersen_graph().order() == 10);
  CHECK(regularity(prism_graph(4)) == 3);
  CHECK(regularity(complete_bipartite_graph(3, 3)) == 3);
  const std::vector<int> jumps = {1, 2};
  CHECK(regularity(circulant_graph(8, jumps)) == 4);
  const std::vector<int> diameter = {4};
  CHECK(regularity(circulant_graph(8, diameter)) == 1);

  const MultiGraph a = random_regular_graph(8, 3, 1);
  CHECK(a.size() == 12);
  CHECK(regularity(a) == 3);
  CHECK(a == random_regular_graph(8, 3, 1));
  std::set<std::pair<int, int>> seen;
  for (const auto& e : a.edges()) {
    CHECK(e.u != e.v);
    CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
  }
  CHECK_THROWS_AS(random_regular_graph(5, 3, 1), InvalidInput);
  CHECK_THROWS_AS(random_regular_graph(4, 5, 1), InvalidInput);
}

TEST_CASE("regular corpus: handshake") {
  for (const auto& entry : corpus::desk_corpus()) {
    const int r = *regularity(entry.graph);
    CHECK(2 * entry.graph.size() == entry.graph.order() * r);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MultiGraph g = random_regular_graph(10, 4, seed);
    CHECK(2 * g.size() == 40);
  }
}

TEST_CASE("regularity") {
  CHECK(regularity(cycle_graph(4)) == 2);
  CHECK(regularity(complete_graph(5)) == 4);
  const std::vector<std::pair<int, int>> path = {{0, 1}, {1, 2}};
  CHECK_FALSE(regularity(build_graph(3, path)).has_value());
}

TEST_CASE("components") {
  const std::vector<MultiGraph> parts = {cycle_graph(3), cycle_graph(4)};
  const auto comps = components(disjoint_union(parts));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 4);
  CHECK(components(complete_graph(4)).size() == 1);
  CHECK(components(build_graph(2, {})).size() == 2);

  for (const auto& entry : corpus::desk_corpus()) {
    const auto& g = entry.graph;
    std::vector<int> part_of(g.order(), -1);
    const auto cs = components(g);
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (int v : cs[i]) {
        CHECK(part_of[v] == -1);
        part_of[v] = static_cast<int>(i);
      }
    for (int p : part_of) CHECK(p >= 0);
    for (const auto& e : g.edges()) CHECK(part_of[e.u] == part_of[e.v]);
  }
}

TEST_CASE("two_regular_profile") {
  const auto c6 = two_regular_profile(cycle_graph(6));
  CHECK_FALSE(c6.has_odd_cycle);
  CHECK(c6.lengths() == std::vector<int>{6});

  const std::vector<MultiGraph> parts = {cycle_graph(3), cycle_graph(4)};
  const auto mixed = two_regular_profile(disjoint_union(parts));
  CHECK(mixed.has_odd_cycle);
  CHECK(mixed.lengths() == std::vector<int>{3, 4});

  const std::vector<std::pair<int, int>> digon = {{0, 1}, {0, 1}};
  const auto two = two_regular_profile(build_graph(2, digon));
  CHECK_FALSE(two.has_odd_cycle);
  CHECK(two.lengths() == std::vector<int>{2});

  CHECK_THROWS_AS(two_regular_profile(complete_graph(4)), InvalidInput);

  const auto big = two_regular_profile(disjoint_union(parts));
  int total = 0;
  for (int l : big.lengths()) total += l;
  CHECK(total == 7);
}

TEST_CASE("edge_connectivity and bridges") {
  CHECK(edge_connectivity(complete_graph(4)) == 3);
  CHECK(edge_connectivity(cycle_graph(5)) == 2);
  const std::vector<MultiGraph> two_triangles = {cycle_graph(3), cycle_graph(3)};
  CHECK(edge_connectivity(disjoint_union(two_triangles)) == 0);
  CHECK(edge_connectivity(petersen_graph()) == 3);

  const MultiGraph bc = oracle::bridged_cubic();
  CHECK(edge_connectivity(bc) == 1);
  std::set<EdgeId> br;
  for (EdgeId e : bridges(bc)) br.insert(e);
  for (EdgeId e : bc.incident(0)) CHECK(br.count(e) == 1);

  for (const auto& entry : corpus::desk_corpus()) {
    const auto& g = entry.graph;
    CHECK(edge_connectivity(g) <= g.min_degree());
    if (*regularity(g) % 2 == 0 && is_connected(g)) {
      CHECK(edge_connectivity(g) >= 2);
      CHECK(bridges(g).empty());
    }
  }
}

TEST_CASE("subgraphs") {
  const MultiGraph k4 = complete_graph(4);
  const std::vector<EdgeId> pick = {0, 5};
  const MultiGraph s = spanning_subgraph(k4, pick);
  CHECK(s.order() == 4);
  CHECK(s.size() == 2);
  CHECK(s.edge(1).origin == 5);

  const std::vector<MultiGraph> parts = {cycle_graph(3), cycle_graph(4)};
  const MultiGraph u = disjoint_union(parts);
  const std::vector<Vertex> square = {3, 4, 5, 6};
  const auto sub = induced_subgraph(u, square);
  CHECK(sub.graph.order() == 4);
  CHECK(sub.graph.size() == 4);
  for (EdgeId e = 0; e < sub.graph.size(); ++e) {
    const auto& a = sub.graph.edge(e);
    const auto& b = u.edge(sub.edge_map[e]);
    CHECK(sub.vertex_map[a.u] == b.u);
    CHECK(sub.vertex_map[a.v] == b.v);
  }
}

TEST_CASE("graph text format") {
  const MultiGraph p = petersen_graph();
  std::stringstream ss;
  write_graph(ss, p);
  CHECK(read_graph(ss) == p);

  std::stringstream text("# comment\n\np 3 3\n0 1\n# inside\n1 2\n2 0\n");
  const MultiGraph c3 = read_graph(text);
  CHECK(c3 == cycle_graph(3));

  std::stringstream short_count("p 3 3\n0 1\n1 2\n");
  CHECK_THROWS_AS(read_graph(short_count), InvalidInput);
  std::stringstream bad_vertex("p 2 1\n0 2\n");
  CHECK_THROWS_AS(read_graph(bad_vertex), InvalidInput);
  std::stringstream junk("q 2 1\n0 1\n");
  CHECK_THROWS_AS(read_graph(junk), InvalidInput);
  std::stringstream loop("p 2 1\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), InvalidInput);

  std::stringstream out;
  write_graph(out, cycle_graph(3));
  CHECK(out.str() == "p 3 3\n0 1\n1 2\n2 0\n");
}
