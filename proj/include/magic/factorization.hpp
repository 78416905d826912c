#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "magic/graph.hpp"

namespace magic {

// G' built from G by duplicating every edge. Edge i of G' (i < m) is the
// copy of G-edge i; edge m + i is its duplicate.
struct DoublingMap {
  MultiGraph source;
  MultiGraph doubled;
  std::vector<std::pair<EdgeId, EdgeId>> pairing;  // G edge -> (copy, duplicate)
};

DoublingMap double_graph(const MultiGraph& g);

struct EulerCircuit {
  std::vector<Vertex> component;
  std::vector<EdgeId> edges;   // traversal order
  std::vector<Vertex> tails;   // edges[i] is traversed tails[i] -> tails[i+1 mod len]
};

// Hierholzer from the smallest vertex of `component`, lowest edge id first.
// Throws InvalidInput on an odd-degree vertex or a disconnected vertex set.
EulerCircuit euler_circuit(const MultiGraph& g, std::span<const Vertex> component);

struct FactorDecomposition {
  std::vector<EdgeSet> parts;
  std::vector<int> degrees;  // degrees[i] is the constant degree of parts[i]
};

// Partition of a 2r-regular multigraph into r 2-factors.
FactorDecomposition two_factorization(const MultiGraph& g);

// {2h-factor, (2r-2h)-factor} from the first h parts of two_factorization.
FactorDecomposition extract_2h_factor(const MultiGraph& g, int h);

struct FactorOptions {
  // At or below this edge count the exact subset search answers instead of
  // the matching reduction. 0 always uses the matching reduction.
  int exhaustive_max_edges = 20;
  // Upper bound on degree profiles tried by mod3_factor.
  long max_profiles = 200000;
};

// Spanning subgraph with prescribed degree target[v] at every v, or nullopt
// if none exists. Exact.
std::optional<EdgeSet> degree_factor(const MultiGraph& g, std::span<const int> target,
                                     const FactorOptions& opts = {});

// h-regular spanning subgraph. Throws InvalidInput unless 0 <= h <= min degree.
std::optional<EdgeSet> f_factor(const MultiGraph& g, int h, const FactorOptions& opts = {});

// Backtracking search for a spanning subgraph with deg(v) in allowed[v].
// Exhaustive; meant for small graphs.
std::optional<EdgeSet> degree_set_factor_search(const MultiGraph& g,
                                                std::span<const std::vector<int>> allowed);

// Spanning subgraph with d_H(v) = residue (mod modulus) at every vertex, or
// nullopt. Subset search for small graphs, otherwise degree profiles in
// increasing total degree, each tried as a degree_factor. Past
// opts.max_profiles profiles only uniform degrees are tried, and if none
// works it throws BudgetExceeded.
std::optional<EdgeSet> congruence_factor(const MultiGraph& g, int residue, int modulus,
                                         const FactorOptions& opts = {});

// Factor H with d_H(v) = 1 (mod 3) everywhere, for r-regular g with r odd and
// divisible by 3. Throws InvalidInput on a violated precondition and
// BudgetExceeded when neither search route fits the options.
std::optional<EdgeSet> mod3_factor(const MultiGraph& g, const FactorOptions& opts = {});

// Degree of each vertex in the spanning subgraph given by `edges`.
std::vector<int> factor_degrees(const MultiGraph& g, std::span<const EdgeId> edges);

// Edge ids of g not in `edges`, ascending.
EdgeSet complement_edges(const MultiGraph& g, std::span<const EdgeId> edges);

}  // namespace magic
