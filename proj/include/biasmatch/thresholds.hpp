#pragma once

#include <string>
#include <vector>

#include "biasmatch/exactmath.hpp"

namespace biasmatch {

// Limiting minimum relative 1-degree of the edge-maximal family member for
// one k-valid pair: the minimum over colours i of
//   (1 / (k^k r^(k-1) (r j_i + sigma))) *
//       sum_l j_{l,i} * multinomial(k; j_{l,1..r}) * prod_s (r j_s + sigma)^{j_{l,s}}
// where j_{l,s} = j_s + sigma*[l == s]. Accepts any coordinate ordering.
// Throws std::invalid_argument on a pair that is not k-valid for (k, r).
Rational f_pair(int k, int r, const ValidPair& pair);

// Same value by the reduced single-expression form, which requires j sorted
// non-increasingly (throws std::invalid_argument otherwise):
//   Pi/(k^k r^(k-1) (r j_r + sigma)) * [ j_r*Lambda + sigma*t_r ],
//   Pi = multinomial(k - sigma; j) * prod_s (r j_s + sigma)^{j_s},
//   t_l = ((2k+1-sigma)(r j_l + sigma)/(2 j_l + 1 + sigma))^sigma,
//   Lambda = sum_l t_l.
Rational f_pair_reduced(int k, int r, const ValidPair& pair);

struct FkrResult {
  Rational value;
  std::vector<ValidPair> argmax;  // every canonical pair attaining the max
};

// Exact maximum of f_pair over canonical_valid_pairs(k, r).
FkrResult f_kr(int k, int r);

// Closed form (1 - (r-1)/(kr))^(k-1); equals f_kr everywhere on the
// supported grid except (k,r) = (3,2) and (4,2).
Rational f_star(int k, int r);

// Conjectured minimum ell-degree threshold for perfect matchings:
// max{1/2, 1 - ((k-1)/k)^(k-ell)}. Requires 1 <= ell < k.
Rational m_conjectured(int ell, int k);

// Shorthand for m_conjectured(1, k).
Rational m_prime(int k);

enum class Classification { BIAS_EXCEEDS, COINCIDES };

struct ThresholdReport {
  int k = 0, r = 0;
  Rational f_kr;
  std::vector<ValidPair> argmax_pairs;
  Rational m_prime;
  Rational b_kr;  // max(f_kr, m_prime)
  Classification classification = Classification::COINCIDES;
  // The classification relies on the conjectured threshold value exactly when
  // the bias threshold exceeds it and k >= 6 (for k <= 5 the matching
  // threshold is known; the coincidence direction is unconditional because
  // the conjectured value lower-bounds the true threshold).
  bool conditional_on_conjecture = false;
};

ThresholdReport classify(int k, int r);

const char* classification_name(Classification c);

struct TableCell {
  int r = 0;
  Rational value;
  std::string decimal;  // truncated to 4 places
  bool flagged = false; // value > m'_k
};

struct TableRow {
  int k = 0;
  Rational m_prime;
  std::string m_prime_decimal;
  std::vector<TableCell> cells;  // r = 2..r_max
};

// Rows k = 3..k_max, cells r = 2..r_max. jobs > 1 computes rows in a small
// thread pool; output order is independent of jobs. Requires k_max >= 3,
// r_max >= 2.
std::vector<TableRow> threshold_table(int k_max, int r_max, int jobs = 1);

// CSV with header "k,m_prime,f_r2,...,f_rR"; cells are the truncated decimal
// strings (regression surface). Flags are carried by the JSON form.
std::string table_csv(const std::vector<TableRow>& rows);

// JSON array of row objects with exact rational strings and decimals.
std::string table_json(const std::vector<TableRow>& rows);

}  // namespace biasmatch
