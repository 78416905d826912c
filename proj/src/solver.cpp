// Backtracking search for c-sum labelings. The next edge is always taken at
// the open vertex with the fewest unlabeled edges, so a vertex down to its
// last edge forces that label.

#include <algorithm>
#include <string>

#include "magic/errors.hpp"
#include "magic/spectrum.hpp"

namespace magic {

namespace {

class LabelSearch {
 public:
  using Clock = std::chrono::steady_clock;

  LabelSearch(const MultiGraph& g, std::int64_t k, const SolverBudget& budget, long long& nodes,
              Clock::time_point start)
      : g_(g), k_(k), budget_(budget), nodes_(nodes), start_(start) {}

  std::optional<EdgeLabeling> run(Label c) {
    c_ = reduce(c, k_);
    labels_.assign(g_.size(), 0);
    sum_.assign(g_.order(), 0);
    open_.assign(g_.order(), 0);
    for (Vertex v = 0; v < g_.order(); ++v) {
      open_[v] = g_.degree(v);
      if (open_[v] == 0 && c_ != 0) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    return EdgeLabeling{k_, labels_};
  }

 private:
  void tick() {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("solver node budget of " + std::to_string(budget_.max_nodes) +
                           " exceeded");
    }
    if (budget_.time_cap && (nodes_ & 0xfff) == 0 && Clock::now() - start_ > *budget_.time_cap) {
      throw BudgetExceeded("solver time cap exceeded");
    }
  }

  // Labels e with x; false if a vertex it closes misses the target.
  bool place(EdgeId e, Label x) {
    labels_[e] = x;
    const auto& rec = g_.edge(e);
    bool ok = true;
    for (Vertex w : {rec.u, rec.v}) {
      sum_[w] = reduce(sum_[w] + x, k_);
      if (--open_[w] == 0 && sum_[w] != c_) ok = false;
    }
    return ok;
  }

  void unplace(EdgeId e) {
    const auto& rec = g_.edge(e);
    for (Vertex w : {rec.u, rec.v}) {
      sum_[w] = reduce(sum_[w] - labels_[e], k_);
      ++open_[w];
    }
    labels_[e] = 0;
  }

  bool search() {
    tick();
    Vertex best = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (open_[v] > 0 && (best == -1 || open_[v] < open_[best])) best = v;
    }
    if (best == -1) return true;
    EdgeId e = -1;
    for (EdgeId f : g_.incident(best)) {
      if (labels_[f] == 0) {
        e = f;
        break;
      }
    }
    if (open_[best] == 1) {
      const Label forced = reduce(c_ - sum_[best], k_);
      if (forced == 0) return false;
      const bool ok = place(e, forced) && search();
      if (!ok) unplace(e);
      return ok;
    }
    for (Label x : candidates()) {
      if (place(e, x) && search()) return true;
      unplace(e);
    }
    return false;
  }

  std::vector<Label> candidates() const {
    std::vector<Label> out;
    if (k_ >= 2) {
      for (Label x = 1; x < k_; ++x) out.push_back(x);
    } else {
      for (Label x = 1; x <= budget_.integer_bound; ++x) {
        out.push_back(x);
        out.push_back(-x);
      }
    }
    return out;
  }

  const MultiGraph& g_;
  std::int64_t k_;
  const SolverBudget& budget_;
  long long& nodes_;
  Clock::time_point start_;
  Label c_ = 0;
  std::vector<Label> labels_;
  std::vector<Label> sum_;
  std::vector<int> open_;
};

void check_instance(const MultiGraph& g, std::int64_t k, const SolverBudget& budget) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (g.size() > budget.max_edges) {
    throw BudgetExceeded("graph has " + std::to_string(g.size()) + " edges, solver limit is " +
                         std::to_string(budget.max_edges));
  }
}

}  // namespace

std::optional<EdgeLabeling> solve_labeling(const MultiGraph& g, std::int64_t k, Label c,
                                           const SolverBudget& budget) {
  check_instance(g, k, budget);
  long long nodes = 0;
  LabelSearch search(g, k, budget, nodes, LabelSearch::Clock::now());
  return search.run(c);
}

SpectrumSet brute_force_spectrum(const MultiGraph& g, std::int64_t k, const SolverBudget& budget) {
  if (k < 2) throw InvalidInput("brute_force_spectrum needs k >= 2");
  check_instance(g, k, budget);
  long long nodes = 0;
  LabelSearch search(g, k, budget, nodes, LabelSearch::Clock::now());
  SpectrumSet out;
  out.k = k;
  for (Label c = 0; c < k; ++c) {
    if (search.run(c)) out.residues.push_back(c);
  }
  out.provenance.push_back("exhaustive labeling search");
  return out;
}

}  // namespace magic
