#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magic/factorization.hpp"
#include "magic/graph.hpp"

namespace magic {

using Label = std::int64_t;

// Reduces v into [0, k) for k >= 2; k == 1 is the integers, left as is.
Label reduce(Label v, std::int64_t k);

// Edge labels over Z_k (k >= 2, values in 1..k-1) or over the integers
// (k == 1, nonzero values). labels[e] belongs to edge id e.
struct EdgeLabeling {
  std::int64_t k = 1;
  std::vector<Label> labels;

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

// The magic sum when every vertex sum agrees, nullopt otherwise.
// Throws InvalidInput on a missing, zero or out-of-range label.
std::optional<Label> verify(const MultiGraph& g, const EdgeLabeling& labeling);

// l'(e) = k - l(e); turns a c-sum labeling into a (k - c)-sum one. Throws
// InvalidInput for k == 1 or when the input is not magic on g.
EdgeLabeling complement(const MultiGraph& g, const EdgeLabeling& labeling);

// The k == 1 counterpart of complement: l'(e) = -l(e).
EdgeLabeling negate(const EdgeLabeling& labeling);

struct FoldResult {
  EdgeLabeling labeling;
  Label sum = 0;
};

// Maps a magic labeling of the doubled graph back onto the source graph:
// l(e) = (l'(e) + l'(e')) / divisor + offset. For divisor 2 the pair sum is
// taken over representatives in 1..k-1 and must be even. Throws InvalidInput
// when the doubled labeling is not magic, a pair sum is odd, or a folded
// label vanishes.
FoldResult fold(const DoublingMap& doubling, const EdgeLabeling& doubled_labeling, int divisor,
                Label offset = 0);

// Labels g with `factor_labeling` on the h-factor `factor` and 1 elsewhere.
// factor_labeling is indexed like spanning_subgraph(g, factor). When
// expected_sum is given, the factor labeling must sum to
// expected_sum - (r - h). Needs 2 <= h <= r and k != 2.
EdgeLabeling extend_by_factor(const MultiGraph& g, std::span<const EdgeId> factor,
                              const EdgeLabeling& factor_labeling,
                              std::optional<Label> expected_sum = std::nullopt);

// A construction certificate: a small stack program whose replay rebuilds
// the labeling. Edge ids refer to the graph (Space::Graph) or to its doubled
// graph as laid out by double_graph (Space::Doubled).
enum class TraceOp { Assign, Fold, Merge, Add, Complement, Note };
enum class Space { Graph, Doubled };

struct TraceStep {
  std::string rule;
  TraceOp op = TraceOp::Note;
  Space space = Space::Graph;
  std::vector<EdgeSet> factors;  // Assign: edge sets
  std::vector<Label> values;     // Assign: one label per factor
  int divisor = 1;               // Fold
  Label offset = 0;              // Fold
  std::map<std::string, Label> params;
};

struct ConstructionTrace {
  std::vector<TraceStep> steps;

  void append(const ConstructionTrace& other);
  void note(std::string rule, std::map<std::string, Label> params = {});
};

// Runs the trace program. Throws InvalidInput if it is malformed or does not
// leave exactly one labeling of every edge of g.
EdgeLabeling replay(const MultiGraph& g, std::int64_t k, const ConstructionTrace& trace);

// Rewrites a trace built on a spanning subgraph (edge i of the subgraph is
// edge edge_map[i] of the parent) into parent edge ids.
ConstructionTrace remap_trace(const ConstructionTrace& trace, std::span<const EdgeId> edge_map,
                              int parent_edges);

std::string to_string(TraceOp op);
std::string to_string(Space space);

}  // namespace magic
