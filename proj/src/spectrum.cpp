#include "magic/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "magic/errors.hpp"

namespace magic {

std::string to_string(SymbolicSpectrum s) {
  switch (s) {
    case SymbolicSpectrum::Integers: return "Z";
    case SymbolicSpectrum::NonzeroIntegers: return "Z\\{0}";
    case SymbolicSpectrum::EvenIntegers: return "2Z";
    case SymbolicSpectrum::NonzeroEvenIntegers: return "2Z\\{0}";
  }
  return "Z";
}

bool contains(SymbolicSpectrum s, Label c) {
  const bool even = c % 2 == 0;
  switch (s) {
    case SymbolicSpectrum::Integers: return true;
    case SymbolicSpectrum::NonzeroIntegers: return c != 0;
    case SymbolicSpectrum::EvenIntegers: return even;
    case SymbolicSpectrum::NonzeroEvenIntegers: return even && c != 0;
  }
  return false;
}

bool SpectrumSet::contains(Label c) const {
  if (symbolic) return magic::contains(*symbolic, c);
  return std::binary_search(residues.begin(), residues.end(), reduce(c, k));
}

bool SpectrumSet::complete() const {
  return !symbolic && k >= 2 && static_cast<std::int64_t>(residues.size()) == k &&
         undecided.empty();
}

namespace {

std::vector<Label> all_residues(std::int64_t k) {
  std::vector<Label> out(k);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::vector<Label> nonzero_residues(std::int64_t k) {
  std::vector<Label> out;
  for (Label c = 1; c < k; ++c) out.push_back(c);
  return out;
}

std::vector<Label> even_residues(std::int64_t k) {
  std::vector<Label> out;
  for (Label c = 0; c < k; c += 2) out.push_back(c);
  return out;
}

struct Piece {
  std::vector<Label> residues;
  std::vector<Label> undecided;
  std::string why;
};

struct Flags {
  bool even_only = false;
  bool nonzero = false;
};

void check_regular_input(const MultiGraph& g, std::int64_t k, int& r) {
  if (k < 1) throw InvalidInput("k must be positive");
  const auto reg = regularity(g);
  if (!reg) throw InvalidInput("graph is not regular");
  if (*reg < 1) throw InvalidInput("graph has no edges");
  r = *reg;
}

// Spectrum of one connected r-regular component over Z_k, k >= 2.
Piece predict_connected(const MultiGraph& c, int r, std::int64_t k, const PredictOptions& opts) {
  const int n = c.order();
  if (k == 2) {
    try {
      const auto s = brute_force_spectrum(c, 2, opts.budget);
      return {s.residues, {}, "k = 2: exhaustive search (no closed form)"};
    } catch (const BudgetExceeded&) {
      return {{}, {0, 1}, "k = 2: exhaustive search over budget"};
    }
  }
  if (r == 1) return {nonzero_residues(k), {}, "1-regular: every nonzero residue"};
  if (r == 2) {
    if (n % 2 == 0) return {all_residues(k), {}, "even cycle: completely k-magic"};
    if (k % 2 == 1) return {nonzero_residues(k), {}, "odd cycle, odd k: nonzero residues"};
    return {even_residues(k), {}, "odd cycle, even k: even residues"};
  }
  if (k >= 5) {
    if (r % 2 == 1) return {all_residues(k), {}, "k >= 5 and r >= 3 odd: completely k-magic"};
    if (n % 2 == 0) {
      return {all_residues(k), {}, "k >= 5, r >= 4 even, even order: completely k-magic"};
    }
    if (k % 2 == 1) {
      return {all_residues(k), {}, "k >= 5 odd, r >= 4 even, odd order: completely k-magic"};
    }
    return {even_residues(k), {}, "k even, odd order: magic sums are even; every even sum occurs"};
  }
  if (k == 4) {
    if (r % 2 == 0) {
      if (n % 2 == 0) return {all_residues(4), {}, "k = 4, r even (zero-sum), even order: complete"};
      return {{0, 2}, {}, "k = 4, r even, odd order: {0, 2}"};
    }
    try {
      if (zero_sum_4_magic(c, opts)) {
        return {all_residues(4), {}, "k = 4, r odd, zero-sum 4-magic, even order: complete"};
      }
      return {{1, 2, 3}, {},
              "k = 4, r odd, not zero-sum 4-magic: {1, 2, 3} (gcd(r, 4) = 1) [derived]"};
    } catch (const BudgetExceeded&) {
      return {{1, 2, 3}, {0}, "k = 4, r odd: zero-sum 4-magic status undecided"};
    }
  }
  // k == 3
  if (r % 3 != 0) return {all_residues(3), {}, "k = 3, r not divisible by 3: complete"};
  if (r % 6 == 0) return {all_residues(3), {}, "k = 3, r divisible by 6: complete"};
  try {
    if (mod3_factor(c, opts.factors)) {
      return {all_residues(3), {}, "k = 3, r = 3 (mod 6), factor with degrees 1 (mod 3): complete"};
    }
    return {{0}, {},
            "k = 3, r = 3 (mod 6), no factor with degrees 1 (mod 3): {0} [derived]"};
  } catch (const BudgetExceeded&) {
    return {{0}, {1, 2}, "k = 3, r = 3 (mod 6): mod-3 factor search undecided"};
  }
}

Flags predict_symbolic_connected(const MultiGraph& c, int r, std::string& why) {
  const int n = c.order();
  if (r == 1) {
    why = "k = 1, 1-regular: Z\\{0}";
    return {false, true};
  }
  if (r == 2) {
    if (n % 2 == 0) {
      why = "k = 1, even cycle: Z";
      return {false, false};
    }
    why = "k = 1, odd cycle: 2Z\\{0}";
    return {true, true};
  }
  if (n % 2 == 0) {
    why = "k = 1, r >= 3, even order: Z";
    return {false, false};
  }
  why = "k = 1, r >= 3 even, odd order: 2Z";
  return {true, false};
}

}  // namespace

SpectrumSet predict_spectrum(const MultiGraph& g, std::int64_t k, const PredictOptions& opts) {
  int r = 0;
  check_regular_input(g, k, r);
  const auto comps = components(g);
  SpectrumSet out;
  out.k = k;
  std::set<std::string> reasons;

  if (k == 1) {
    Flags total;
    for (const auto& comp : comps) {
      const auto sub = induced_subgraph(g, comp);
      std::string why;
      const Flags f = predict_symbolic_connected(sub.graph, r, why);
      total.even_only |= f.even_only;
      total.nonzero |= f.nonzero;
      if (reasons.insert(why).second) out.provenance.push_back(why);
    }
    out.symbolic = total.even_only ? (total.nonzero ? SymbolicSpectrum::NonzeroEvenIntegers
                                                    : SymbolicSpectrum::EvenIntegers)
                                   : (total.nonzero ? SymbolicSpectrum::NonzeroIntegers
                                                    : SymbolicSpectrum::Integers);
    return out;
  }

  // A residue survives when every component admits it; it is undecided when
  // no component rules it out and some component left it open.
  std::vector<int> state(k, 1);  // 1 in, 2 undecided, 0 out
  for (const auto& comp : comps) {
    const auto sub = induced_subgraph(g, comp);
    const Piece p = predict_connected(sub.graph, r, k, opts);
    if (reasons.insert(p.why).second) out.provenance.push_back(p.why);
    std::vector<int> local(k, 0);
    for (Label c : p.residues) local[c] = 1;
    for (Label c : p.undecided) local[c] = 2;
    for (Label c = 0; c < k; ++c) {
      if (state[c] == 0 || local[c] == 0) {
        state[c] = 0;
      } else if (local[c] == 2) {
        state[c] = 2;
      }
    }
  }
  if (comps.size() > 1) out.provenance.push_back("disconnected: intersection over components");
  for (Label c = 0; c < k; ++c) {
    if (state[c] == 1) out.residues.push_back(c);
    if (state[c] == 2) out.undecided.push_back(c);
  }
  return out;
}

bool zero_sum_4_magic(const MultiGraph& g, const PredictOptions& opts) {
  int r = 0;
  check_regular_input(g, 4, r);
  if (r < 3) throw InvalidInput("zero_sum_4_magic needs r >= 3");
  if (r % 2 == 0) return true;
  for (const auto& comp : components(g)) {
    const auto sub = induced_subgraph(g, comp);
    const MultiGraph& c = sub.graph;
    // A vertex whose incident edges are all cut-edges rules it out.
    std::vector<int> bridge_degree(c.order(), 0);
    for (EdgeId e : bridges(c)) {
      ++bridge_degree[c.edge(e).u];
      ++bridge_degree[c.edge(e).v];
    }
    for (Vertex v = 0; v < c.order(); ++v)
      if (bridge_degree[v] == r) return false;
    // r = 3 (mod 4): a perfect matching labeled 2, the rest 1.
    if (r % 4 == 3 && f_factor(c, 1, opts.factors)) continue;
    // More generally a factor with degrees -r (mod 4) labeled 2, the rest 1.
    try {
      if (congruence_factor(c, (4 - r % 4) % 4, 4, opts.factors)) continue;
    } catch (const BudgetExceeded&) {
    }
    if (!solve_labeling(c, 4, 0, opts.budget)) return false;
  }
  return true;
}

CompletenessVerdict is_completely_k_magic(const MultiGraph& g, std::int64_t k,
                                          const PredictOptions& opts) {
  if (k < 2) throw InvalidInput("is_completely_k_magic needs k >= 2");
  if (g.order() < 3) throw InvalidInput("is_completely_k_magic needs n >= 3");
  const SpectrumSet s = predict_spectrum(g, k, opts);
  if (!s.undecided.empty()) throw BudgetExceeded("spectrum prediction left residues undecided");
  CompletenessVerdict v;
  v.complete = s.complete();
  if (k == 2) {
    v.condition = "no 2-magic graph is completely 2-magic";
    return v;
  }
  std::string joined;
  for (const auto& p : s.provenance) joined += (joined.empty() ? "" : "; ") + p;
  v.condition = joined;
  return v;
}

NullSet null_set(const MultiGraph& g, int kmax, const PredictOptions& opts) {
  if (kmax < 1) throw InvalidInput("kmax must be positive");
  NullSet out;
  for (int k = 1; k <= kmax; ++k) {
    const SpectrumSet s = predict_spectrum(g, k, opts);
    if (std::find(s.undecided.begin(), s.undecided.end(), 0) != s.undecided.end()) {
      out.undecided.push_back(k);
    } else if (s.contains(0)) {
      out.members.push_back(k);
    }
  }
  return out;
}

}  // namespace magic
