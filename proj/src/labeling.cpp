#include "magic/labeling.hpp"

#include <algorithm>
#include <string>

#include "magic/errors.hpp"

namespace magic {

Label reduce(Label v, std::int64_t k) {
  if (k <= 1) return v;
  const Label r = v % k;
  return r < 0 ? r + k : r;
}

namespace {

void check_labels(const MultiGraph& g, const EdgeLabeling& l) {
  if (l.k < 1) throw InvalidInput("modulus k must be positive");
  if (static_cast<int>(l.labels.size()) != g.size()) {
    throw InvalidInput("labeling has " + std::to_string(l.labels.size()) + " labels for " +
                       std::to_string(g.size()) + " edges");
  }
  for (std::size_t e = 0; e < l.labels.size(); ++e) {
    const Label x = l.labels[e];
    if (x == 0) throw InvalidInput("edge " + std::to_string(e) + " has label 0");
    if (l.k >= 2 && (x < 1 || x >= l.k)) {
      throw InvalidInput("edge " + std::to_string(e) + " label out of range 1..k-1");
    }
  }
}

std::vector<Label> vertex_sums(const MultiGraph& g, std::span<const Label> labels, std::int64_t k) {
  std::vector<Label> sum(g.order(), 0);
  for (const auto& e : g.edges()) {
    sum[e.u] = reduce(sum[e.u] + labels[e.id], k);
    sum[e.v] = reduce(sum[e.v] + labels[e.id], k);
  }
  return sum;
}

}  // namespace

std::optional<Label> verify(const MultiGraph& g, const EdgeLabeling& l) {
  check_labels(g, l);
  const auto sum = vertex_sums(g, l.labels, l.k);
  if (sum.empty()) return 0;
  for (Label s : sum)
    if (s != sum.front()) return std::nullopt;
  return sum.front();
}

EdgeLabeling complement(const MultiGraph& g, const EdgeLabeling& l) {
  if (l.k < 2) throw InvalidInput("complement needs k >= 2; use negate for the integers");
  if (!verify(g, l)) throw InvalidInput("complement needs a magic labeling");
  EdgeLabeling out = l;
  for (auto& x : out.labels) x = l.k - x;
  return out;
}

EdgeLabeling negate(const EdgeLabeling& l) {
  EdgeLabeling out = l;
  for (auto& x : out.labels) x = l.k == 1 ? -x : reduce(-x, l.k);
  return out;
}

FoldResult fold(const DoublingMap& d, const EdgeLabeling& doubled, int divisor, Label offset) {
  if (divisor != 1 && divisor != 2) throw InvalidInput("fold divisor must be 1 or 2");
  if (!verify(d.doubled, doubled)) throw InvalidInput("fold needs a magic labeling of G'");
  const std::int64_t k = doubled.k;
  EdgeLabeling out{k, std::vector<Label>(d.source.size(), 0)};
  for (EdgeId e = 0; e < d.source.size(); ++e) {
    const auto [a, b] = d.pairing[e];
    Label pair = doubled.labels[a] + doubled.labels[b];
    if (divisor == 2) {
      if (pair % 2 != 0) throw InvalidInput("odd pair sum at edge " + std::to_string(e));
      pair /= 2;
    }
    const Label x = reduce(pair + offset, k);
    if (x == 0) throw InvalidInput("folded label of edge " + std::to_string(e) + " is 0");
    out.labels[e] = x;
  }
  const auto sum = verify(d.source, out);
  if (!sum) throw InvalidInput("folded labeling is not magic");
  return FoldResult{std::move(out), *sum};
}

EdgeLabeling extend_by_factor(const MultiGraph& g, std::span<const EdgeId> factor,
                              const EdgeLabeling& factor_labeling,
                              std::optional<Label> expected_sum) {
  const auto r = regularity(g);
  if (!r) throw InvalidInput("extend_by_factor needs a regular graph");
  const MultiGraph h_graph = spanning_subgraph(g, factor);
  const auto h = regularity(h_graph);
  if (!h) throw InvalidInput("factor is not regular");
  if (*h < 2 || *h > *r) throw InvalidInput("factor degree must lie in [2, r]");
  if (factor_labeling.k == 2) throw InvalidInput("extend_by_factor needs k != 2");
  const auto alpha = verify(h_graph, factor_labeling);
  if (!alpha) throw InvalidInput("factor labeling is not magic");
  const std::int64_t k = factor_labeling.k;
  if (expected_sum && reduce(*expected_sum - (*r - *h), k) != *alpha) {
    throw InvalidInput("factor labeling sum does not match c - (r - h)");
  }
  EdgeLabeling out{k, std::vector<Label>(g.size(), 1)};
  for (std::size_t i = 0; i < factor.size(); ++i) out.labels[factor[i]] = factor_labeling.labels[i];
  return out;
}

void ConstructionTrace::append(const ConstructionTrace& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

void ConstructionTrace::note(std::string rule, std::map<std::string, Label> params) {
  TraceStep s;
  s.rule = std::move(rule);
  s.op = TraceOp::Note;
  s.params = std::move(params);
  steps.push_back(std::move(s));
}

namespace {

struct Partial {
  Space space;
  std::vector<std::optional<Label>> labels;
};

}  // namespace

EdgeLabeling replay(const MultiGraph& g, std::int64_t k, const ConstructionTrace& trace) {
  const int m = g.size();
  std::vector<Partial> stack;
  auto pop = [&]() {
    if (stack.empty()) throw InvalidInput("trace pops an empty stack");
    Partial p = std::move(stack.back());
    stack.pop_back();
    return p;
  };
  for (const auto& step : trace.steps) {
    switch (step.op) {
      case TraceOp::Note:
        break;
      case TraceOp::Assign: {
        if (step.factors.size() != step.values.size()) {
          throw InvalidInput("assign step needs one value per factor");
        }
        const int size = step.space == Space::Graph ? m : 2 * m;
        Partial p{step.space, std::vector<std::optional<Label>>(size)};
        for (std::size_t i = 0; i < step.factors.size(); ++i) {
          for (EdgeId e : step.factors[i]) {
            if (e < 0 || e >= size) throw InvalidInput("assign step edge out of range");
            if (p.labels[e]) throw InvalidInput("assign step labels an edge twice");
            p.labels[e] = reduce(step.values[i], k);
          }
        }
        stack.push_back(std::move(p));
        break;
      }
      case TraceOp::Fold: {
        Partial src = pop();
        if (src.space != Space::Doubled) throw InvalidInput("fold needs a doubled-graph labeling");
        if (step.divisor != 1 && step.divisor != 2) throw InvalidInput("bad fold divisor");
        Partial p{Space::Graph, std::vector<std::optional<Label>>(m)};
        for (EdgeId e = 0; e < m; ++e) {
          const auto& a = src.labels[e];
          const auto& b = src.labels[m + e];
          if (!a || !b) continue;
          Label pair = *a + *b;
          if (step.divisor == 2) {
            if (pair % 2 != 0) throw InvalidInput("fold with divisor 2 meets an odd pair sum");
            pair /= 2;
          }
          p.labels[e] = reduce(pair + step.offset, k);
        }
        stack.push_back(std::move(p));
        break;
      }
      case TraceOp::Merge:
      case TraceOp::Add: {
        Partial b = pop();
        Partial a = pop();
        if (a.space != b.space) throw InvalidInput("combining labelings of different graphs");
        for (std::size_t e = 0; e < a.labels.size(); ++e) {
          if (step.op == TraceOp::Merge) {
            if (a.labels[e] && b.labels[e]) throw InvalidInput("merge of overlapping labelings");
            if (!a.labels[e]) a.labels[e] = b.labels[e];
          } else {
            if (a.labels[e].has_value() != b.labels[e].has_value()) {
              throw InvalidInput("add of labelings with different domains");
            }
            if (a.labels[e]) a.labels[e] = reduce(*a.labels[e] + *b.labels[e], k);
          }
        }
        stack.push_back(std::move(a));
        break;
      }
      case TraceOp::Complement: {
        Partial p = pop();
        for (auto& x : p.labels)
          if (x) x = k == 1 ? -*x : reduce(k - *x, k);
        stack.push_back(std::move(p));
        break;
      }
    }
  }
  if (stack.size() != 1 || stack.front().space != Space::Graph) {
    throw InvalidInput("trace must leave exactly one labeling of the graph");
  }
  EdgeLabeling out{k, std::vector<Label>(m, 0)};
  for (EdgeId e = 0; e < m; ++e) {
    if (!stack.front().labels[e]) throw InvalidInput("trace leaves an edge unlabeled");
    out.labels[e] = *stack.front().labels[e];
  }
  return out;
}

ConstructionTrace remap_trace(const ConstructionTrace& trace, std::span<const EdgeId> edge_map,
                              int parent_edges) {
  const int sub_edges = static_cast<int>(edge_map.size());
  ConstructionTrace out = trace;
  for (auto& step : out.steps) {
    for (auto& part : step.factors) {
      for (auto& e : part) {
        if (step.space == Space::Graph) {
          e = edge_map[e];
        } else {
          e = e < sub_edges ? edge_map[e] : parent_edges + edge_map[e - sub_edges];
        }
      }
      std::sort(part.begin(), part.end());
    }
  }
  return out;
}

std::string to_string(TraceOp op) {
  switch (op) {
    case TraceOp::Assign: return "assign";
    case TraceOp::Fold: return "fold";
    case TraceOp::Merge: return "merge";
    case TraceOp::Add: return "add";
    case TraceOp::Complement: return "complement";
    case TraceOp::Note: return "note";
  }
  return "note";
}

std::string to_string(Space space) { return space == Space::Graph ? "graph" : "doubled"; }

}  // namespace magic
