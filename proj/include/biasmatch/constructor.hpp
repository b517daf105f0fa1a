#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "biasmatch/exactmath.hpp"
#include "biasmatch/hypergraph.hpp"

namespace biasmatch {

// One member of the fixed-part-size family: (k, r, pair, n) with derived
// part sizes |V_i| = (r*j_i + sigma) * n / (r*k).
struct ExtremalSpec {
  int k = 0;
  int r = 0;
  ValidPair pair;
  long long n = 0;
  std::vector<long long> part_sizes;
};

// Validates (pair k-valid for (k,r), n divisible by k*r, every part >= 1)
// and fills part_sizes. Throws std::invalid_argument.
ExtremalSpec make_extremal_spec(int k, int r, const ValidPair& pair, long long n);

// Type vector of colour-i edges (1-based i): j + sigma*e_i.
std::vector<int> type_of_colour(const ValidPair& pair, int colour);

// Edge-maximal member with explicit part sizes: parts are contiguous vertex
// ranges in order (V_1 = first part_sizes[0] vertices, ...), and for each
// colour i ALL k-sets of type j+sigma*e_i are present with colour i. Colours
// whose type cannot be realized come out empty; a note per empty colour goes
// to *warnings when given. Throws BudgetExceededError when the edge count
// would exceed an internal materialization cap.
ColouredHypergraph build_family_member(int k, int r, const ValidPair& pair,
                                       const std::vector<long long>& part_sizes,
                                       std::ostream* warnings = nullptr);

// build_family_member at the spec's derived part sizes.
ColouredHypergraph build_extremal(const ExtremalSpec& spec, std::ostream* warnings = nullptr);

// Exact count of colour-ell edges through any one vertex of part i in the
// edge-maximal member (1-based i, ell):
//   C(|V_i|-1, j_{ell,i}-1) * prod_{s != i} C(|V_s|, j_{ell,s}),
// and 0 when j_{ell,i} = 0, where j_{ell,s} = j_s + sigma*[s == ell].
BigInt finite_colour_degree(const ExtremalSpec& spec, int part_i, int colour_ell);

struct MinDegreeResult {
  long long value = 0;
  std::vector<int> witness;  // lexicographically least ell-set attaining it
};

// Minimum over all ell-subsets of the number of edges containing the subset.
// Brute force with size guards: ell == 1 needs n <= 64 (single edge pass);
// ell >= 2 needs n <= 20 (subset enumeration). Guard violations raise
// BudgetExceededError; ell outside [1, k-1] raises std::invalid_argument.
MinDegreeResult min_degree(const ColouredHypergraph& h, int ell);

// 4-graph on |V_1| = 7n/8, |V_2| = n/8 containing every 4-set except those
// of type (2,2); type (3,1) is blue (colour 2), everything else present —
// types (4,0), (1,3), (0,4) — is red (colour 1). Requires n divisible by 8.
// Its minimum 1-degree over C(n-1,3) tends to 365/512.
ColouredHypergraph build_tight_cycle_counterexample(long long n, std::ostream* warnings = nullptr);

}  // namespace biasmatch
