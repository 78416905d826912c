#pragma once

// Seeded random regular graphs and the labeling contracts checked on them.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "magic/construct.hpp"
#include "magic/errors.hpp"
#include "magic/generators.hpp"
#include "oracles.hpp"

namespace props {

struct Report {
  int graphs = 0;
  int checks = 0;
  int oracle_skipped = 0;  // oracle comparisons over the node budget
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

struct Sample {
  magic::MultiGraph graph;
  int n, r;
  std::uint64_t seed;
};

// count random regular graphs with n <= 10, 1 <= r <= 5.
inline std::vector<Sample> random_samples(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < count) {
    const int r = std::uniform_int_distribution<int>(1, 5)(rng);
    const int n = std::uniform_int_distribution<int>(r + 1, 10)(rng);
    if (n * r % 2 != 0) continue;
    const std::uint64_t s = rng();
    try {
      out.push_back({magic::random_regular_graph(n, r, s), n, r, s});
    } catch (const magic::GenerationFailure&) {
    }
  }
  return out;
}

inline void check_sample(const Sample& sample, std::int64_t k, Report& rep) {
  using namespace magic;
  const MultiGraph& g = sample.graph;
  std::ostringstream tag;
  tag << "n=" << sample.n << " r=" << sample.r << " seed=" << sample.seed << " k=" << k;
  const SpectrumSet predicted = predict_spectrum(g, k);
  rep.expect(predicted.undecided.empty(), tag.str() + " undecided residues");
  SolverBudget budget;
  budget.max_nodes = 1'000'000;
  try {
    rep.expect(predicted.residues == brute_force_spectrum(g, k, budget).residues,
               tag.str() + " predict != oracle");
  } catch (const BudgetExceeded&) {
    ++rep.oracle_skipped;
  }

  for (Label c : predicted.residues) {
    const auto res = construct(g, k, c);
    rep.expect(res.status == ConstructStatus::Found, tag.str() + " construct c=" + std::to_string(c));
    if (!res.labeling) continue;
    const EdgeLabeling& l = *res.labeling;
    const auto sum = verify(g, l);
    rep.expect(sum && *sum == c, tag.str() + " verify c=" + std::to_string(c));
    rep.expect(oracle::vertex_sum(g, l.labels, k) == std::optional<std::int64_t>(c),
               tag.str() + " oracle sum c=" + std::to_string(c));
    rep.expect(replay(g, k, res.trace) == l, tag.str() + " replay c=" + std::to_string(c));

    // complement: involution, sum k - c
    const EdgeLabeling comp = complement(g, l);
    rep.expect(verify(g, comp) == std::optional<Label>(reduce(k - c, k)), tag.str() + " complement sum");
    rep.expect(complement(g, comp) == l, tag.str() + " complement involution");

    // fold: copy l onto both edges of each pair
    const DoublingMap dm = double_graph(g);
    EdgeLabeling doubled{k, std::vector<Label>(2 * g.size())};
    for (EdgeId e = 0; e < g.size(); ++e) {
      doubled.labels[dm.pairing[e].first] = l.labels[e];
      doubled.labels[dm.pairing[e].second] = l.labels[e];
    }
    const auto halved = fold(dm, doubled, 2);
    rep.expect(halved.labeling == l && halved.sum == c, tag.str() + " fold divisor 2");
    bool vanishes = false;
    for (Label x : l.labels) vanishes = vanishes || reduce(2 * x, k) == 0;
    try {
      const auto summed = fold(dm, doubled, 1);
      rep.expect(!vanishes && summed.sum == reduce(2 * c, k), tag.str() + " fold divisor 1");
    } catch (const InvalidInput&) {
      rep.expect(vanishes, tag.str() + " fold divisor 1 threw without a vanishing label");
    }
  }
  for (Label c = 0; c < k; ++c) {
    if (predicted.contains(c) || !predicted.undecided.empty()) continue;
    rep.expect(construct(g, k, c).status == ConstructStatus::Absent,
               tag.str() + " absent c=" + std::to_string(c));
  }

  // extend: an h-factor with 2 <= h <= r labeled on its own, the rest 1.
  if (sample.r < 2 || k == 2) return;
  std::optional<EdgeSet> factor;
  if (sample.r % 2 == 0) {
    factor = two_factorization(g).parts[0];
  } else if (auto m = f_factor(g, 1)) {
    factor = complement_edges(g, *m);
    if (sample.r - 1 < 2) factor.reset();
  }
  if (!factor) return;
  const MultiGraph h = spanning_subgraph(g, *factor);
  const int hdeg = *regularity(h);
  for (Label c = 0; c < k; ++c) {
    const Label alpha = reduce(c - (sample.r - hdeg), k);
    const auto inner = construct(h, k, alpha);
    if (inner.status != ConstructStatus::Found) continue;
    const EdgeLabeling ext = extend_by_factor(g, *factor, *inner.labeling, c);
    rep.expect(verify(g, ext) == std::optional<Label>(c), tag.str() + " extend sum c=" + std::to_string(c));
    bool restricted = true, others = true;
    std::vector<char> in(g.size(), 0);
    for (std::size_t i = 0; i < factor->size(); ++i) {
      in[(*factor)[i]] = 1;
      restricted = restricted && ext.labels[(*factor)[i]] == inner.labeling->labels[i];
    }
    for (EdgeId e = 0; e < g.size(); ++e)
      if (!in[e]) others = others && ext.labels[e] == 1;
    rep.expect(restricted && others, tag.str() + " extend restriction");
  }
}

inline Report run(int count, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& sample : random_samples(count, seed)) {
    ++rep.graphs;
    const std::int64_t k = std::uniform_int_distribution<int>(3, 8)(rng);
    try {
      check_sample(sample, k, rep);
    } catch (const std::exception& e) {
      rep.expect(false, "n=" + std::to_string(sample.n) + " r=" + std::to_string(sample.r) +
                            " seed=" + std::to_string(sample.seed) + " threw: " + e.what());
    }
  }
  return rep;
}

}  // namespace props
