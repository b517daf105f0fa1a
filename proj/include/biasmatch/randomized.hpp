#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biasmatch/exactmath.hpp"
#include "biasmatch/hypergraph.hpp"
#include "biasmatch/oracle.hpp"
#include "biasmatch/search_budget.hpp"

namespace biasmatch {

// Binomial random k-graph: every k-set is an edge independently with
// probability p. Deterministic protocol (documented in the README):
// std::mt19937_64(seed); k-sets visited in lexicographic order; each
// consumes one 64-bit draw v and is included iff v * den(p) < num(p) * 2^64,
// compared exactly. Output is uncoloured (r = 0). Requires 0 <= p <= 1.
ColouredHypergraph sample_hkp(int n, int k, const Rational& p, std::uint64_t seed);

// Deterministic r-colouring for experiments: edges in canonical order each
// consume one draw v; colour = 1 + (v mod r).
ColouredHypergraph colour_edges_random(const ColouredHypergraph& h, int r, std::uint64_t seed);

struct PairWitness {
  int x = 0, y = 0;
  std::vector<int> avoid_set;  // ceil(n/3) vertices containing no common (k-1)-set
};

struct PropertyReport {
  // (i): every vertex set of size >= ceil(n/(2r)) contains an edge.
  bool property_i = false;
  std::optional<std::vector<int>> independent_witness;  // counterexample set
  // (ii): for all x != y, every vertex set of size >= ceil(n/3) contains a
  // common (k-1)-set of N(x) and N(y). Checked per pair via a minimum-cover
  // bound rather than enumerating all sets.
  bool property_ii = false;
  std::optional<PairWitness> witness_ii;
  std::uint64_t nodes = 0;
  bool sampled = false;  // true => results are "no counterexample found" only
};

struct PropertyCheckOptions {
  bool sampled = false;        // sampling mode for n > 14
  int samples = 2000;          // random sets per property in sampling mode
  std::uint64_t seed = 0;
  SearchBudget* budget = nullptr;
};

// Exhaustive for n <= 14; beyond that requires options.sampled (else
// BudgetExceededError). r >= 1 enters only through the size thresholds.
PropertyReport check_random_properties(const ColouredHypergraph& h, int r,
                                       const PropertyCheckOptions& options = {});

struct BiasSearchConfig {
  Rational gamma_target = Rational(0);  // target bias is gamma_target * n
  int switcher_budget = -1;             // max switcher order; -1 => k^2 + k
  std::uint64_t seed = 0;
  std::uint64_t max_nodes = UINT64_MAX; // residual-heuristic node cap
  SearchBudget* budget = nullptr;       // global node budget (optional)
};

struct BiasSearchResult {
  Matching matching;                 // best perfect matching found
  std::vector<long long> counts;     // its colour profile
  int majority_colour = 0;           // 1-based; smallest index on ties
  Rational bias;                     // counts[majority-1] - n/(kr)
  int switchers_used = 0;
  bool met_target = false;           // bias >= gamma_target * n
  std::uint64_t nodes = 0;
};

// Constructive bias search: greedily collects a maximal family of
// vertex-disjoint switchers of order <= switcher_budget (repeated
// minimum-order/lex-least search on the shrinking residual), finds a perfect
// matching on the leftover vertices (exhaustive when <= 15 remain, seeded
// greedy restarts above), then flips every switcher to the state that
// maximizes the best colour's count. With no switchers the result is the
// plain (balanced, on family members) matching. Throws
// NoResidualMatchingError when the residual provably has no perfect matching,
// BudgetExceededError when the heuristic exhausts max_nodes, and
// std::invalid_argument when k does not divide n or H is uncoloured.
BiasSearchResult bias_search(const ColouredHypergraph& h, const BiasSearchConfig& config = {});

}  // namespace biasmatch
