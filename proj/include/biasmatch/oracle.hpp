#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "biasmatch/constructor.hpp"
#include "biasmatch/exactmath.hpp"
#include "biasmatch/hypergraph.hpp"
#include "biasmatch/search_budget.hpp"

namespace biasmatch {

// A set of pairwise vertex-disjoint edges of some host hypergraph together
// with its per-colour edge counts (index c-1 for colour c).
struct Matching {
  std::vector<Edge> edges;
  std::vector<long long> colour_profile;

  bool perfect(int host_n, int k) const {
    return static_cast<long long>(edges.size()) * k == host_n;
  }
};

Matching make_matching(const std::vector<Edge>& edges, int r);

// Visits every perfect matching exactly once, in the canonical order induced
// by branching on the lowest uncovered vertex (edges tried in canonical edge
// order). Return false from the visitor to stop. Empty when k does not
// divide n or none exists. Requires n <= 64. Each enumerated node ticks
// *budget when given.
void for_each_perfect_matching(const ColouredHypergraph& h,
                               const std::function<bool(const Matching&)>& visit,
                               SearchBudget* budget = nullptr);

// Convenience wrappers over the enumerator.
std::uint64_t count_perfect_matchings(const ColouredHypergraph& h, SearchBudget* budget = nullptr);
std::optional<Matching> first_perfect_matching(const ColouredHypergraph& h,
                                               SearchBudget* budget = nullptr);

struct BalanceViolation {
  Matching matching;
  int colour = 0;
  long long observed = 0;
  long long expected = 0;
};

struct BalanceReport {
  std::uint64_t matchings_checked = 0;
  bool all_balanced = true;
  std::vector<long long> expected_profile;     // alpha_i * n / k
  std::vector<BalanceViolation> violations;    // capped
  std::uint64_t violations_total = 0;
};

inline constexpr std::size_t kBalanceViolationCap = 64;

// Checks that every perfect matching of `member` has colour profile exactly
// alpha_i * n/k. Requires k | n, alpha.size() == r, alpha_i >= 0,
// sum(alpha) = 1, and every alpha_i * n/k integral (std::invalid_argument).
BalanceReport verify_balance(const ColouredHypergraph& member, const std::vector<Rational>& alpha,
                             SearchBudget* budget = nullptr);

// Builds the edge-maximal member with part sizes (j_i + sigma*alpha_i)*n/k
// (the spec's fixed sizes are the alpha_i = 1/r case) and checks it.
BalanceReport verify_balance(const ExtremalSpec& spec, const std::vector<Rational>& alpha,
                             SearchBudget* budget = nullptr);

// Two matchings on the same vertex set whose counts of `colour` differ;
// m1 holds strictly more. Order = |V(m1)|.
struct Switcher {
  Matching m1, m2;
  int colour = 0;
  int order = 0;
};

// Minimum-order switcher of order <= max_order, or nullopt if none exists.
// Exhaustive: supports of size k, 2k, ... <= max_order in lexicographic
// order; within a support, matchings in canonical enumeration order, first
// differing profile pair wins (deterministic). Ticks *budget per support and
// per enumerated matching; exhaustion raises BudgetExceededError (always
// distinguishable from nullopt). Requires n <= 64 and a coloured host.
std::optional<Switcher> find_switcher(const ColouredHypergraph& h, int max_order,
                                      SearchBudget* budget = nullptr);

struct MembershipWitness {
  std::vector<int> part_of;  // vertex -> part in [1..r]
  ValidPair pair;
};

// Searches for a partition (V_1..V_r) and k-valid (j, sigma) such that every
// colour-i edge has type j + sigma*e_i. Outer loop over (sigma, j) candidate
// vectors (all coordinate orderings), inner constraint propagation edge by
// edge (most-constrained edge first). Vertices in no edge go to part 1.
// Requires a coloured host; n <= 12 guard unless `unguarded`.
std::optional<MembershipWitness> family_membership(const ColouredHypergraph& h,
                                                   SearchBudget* budget = nullptr,
                                                   bool unguarded = false);

// Independent checker used to validate witnesses.
bool is_family_member(const ColouredHypergraph& h, const MembershipWitness& w);

struct DisjointNbhdResult {
  int value = 0;                              // max pairwise-disjoint (k-1)-sets
  std::vector<std::vector<int>> witness;      // one optimal (or greedy) packing
  bool exhaustive = true;                     // false => greedy lower bound
};

// Common (k-1)-sets: S with S+{x} and S+{y} both edges (S avoids x and y).
std::vector<std::vector<int>> common_neighbourhood_sets(const ColouredHypergraph& h, int x, int y);

// Maximum number of pairwise vertex-disjoint (k-1)-sets in N(x) ∩ N(y).
// Exhaustive branch-and-bound at n <= 15, greedy lower bound above.
// Requires x != y in range.
DisjointNbhdResult disjoint_common_neighbourhood(const ColouredHypergraph& h, int x, int y,
                                                 SearchBudget* budget = nullptr);

struct StructuralImplicationCheck {
  bool edge_in_every_colour = false;
  int min_disjoint_nbhd = 0;           // min over unordered vertex pairs
  bool switcher_free = false;          // none of order <= k^2 + k
  bool antecedent = false;             // all three hypotheses hold
  std::optional<MembershipWitness> member;
  bool implication_holds = false;      // !antecedent || member
};

// Desk-scale soundness check of the structural implication: every-colour
// edges + >= k^2 disjoint common (k-1)-sets for all pairs + no switcher of
// order <= k^2+k must imply family membership.
StructuralImplicationCheck structural_implication_check(const ColouredHypergraph& h,
                                                        SearchBudget* budget = nullptr);

}  // namespace biasmatch
