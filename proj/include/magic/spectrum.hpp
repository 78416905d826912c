#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magic/factorization.hpp"
#include "magic/graph.hpp"
#include "magic/labeling.hpp"

namespace magic {

// Infinite spectra over the integers (k == 1).
enum class SymbolicSpectrum { Integers, NonzeroIntegers, EvenIntegers, NonzeroEvenIntegers };

std::string to_string(SymbolicSpectrum s);
bool contains(SymbolicSpectrum s, Label c);

struct SpectrumSet {
  std::int64_t k = 2;
  std::vector<Label> residues;                 // sorted, k >= 2
  std::optional<SymbolicSpectrum> symbolic;    // k == 1 only
  std::vector<std::string> provenance;
  std::vector<Label> undecided;                // residues the budget could not settle

  bool contains(Label c) const;
  // Every residue present and none undecided. Never true for k == 1.
  bool complete() const;
};

struct SolverBudget {
  int max_edges = 64;
  long long max_nodes = 100'000'000;
  std::optional<std::chrono::milliseconds> time_cap;
  // k == 1 only: free labels range over +-1..+-integer_bound.
  int integer_bound = 3;
};

// A c-sum labeling found by backtracking over edge labels, or nullopt if
// none exists. For k == 1 the search is bounded by budget.integer_bound and a
// nullopt answer is not a proof of absence. Throws BudgetExceeded.
std::optional<EdgeLabeling> solve_labeling(const MultiGraph& g, std::int64_t k, Label c,
                                           const SolverBudget& budget = {});

// Exact spectrum by exhaustive search, k >= 2. Throws BudgetExceeded.
SpectrumSet brute_force_spectrum(const MultiGraph& g, std::int64_t k,
                                 const SolverBudget& budget = {});

struct PredictOptions {
  SolverBudget budget;
  FactorOptions factors;
};

// Closed-form spectrum of a regular graph, computed per component and
// intersected. Predicates without a closed form (zero-sum over Z_4 for odd
// r, existence of a mod-3 factor, every k == 2 case) are settled by the
// factor finders or the solver; residues they leave open go to `undecided`.
SpectrumSet predict_spectrum(const MultiGraph& g, std::int64_t k, const PredictOptions& opts = {});

struct CompletenessVerdict {
  bool complete = false;
  std::string condition;
};

// Needs n >= 3 and k >= 2. Throws BudgetExceeded if the prediction leaves a
// residue undecided.
CompletenessVerdict is_completely_k_magic(const MultiGraph& g, std::int64_t k,
                                          const PredictOptions& opts = {});

// Zero-sum labeling over Z_4 exists. Needs r >= 3. Throws BudgetExceeded.
bool zero_sum_4_magic(const MultiGraph& g, const PredictOptions& opts = {});

struct NullSet {
  std::vector<int> members;
  std::vector<int> undecided;
};

// { k in [1, kmax] : 0 is a magic sum over Z_k }.
NullSet null_set(const MultiGraph& g, int kmax, const PredictOptions& opts = {});

}  // namespace magic
