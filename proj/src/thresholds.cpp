#include "biasmatch/thresholds.hpp"

#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace biasmatch {

namespace {

// k^k * r^(k-1), the common denominator scale of both formulas.
BigInt denom_scale(int k, int r) {
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= k;
  for (int i = 0; i < k - 1; ++i) out *= r;
  return out;
}

}  // namespace

Rational f_pair(int k, int r, const ValidPair& pair) {
  validate_pair(pair, k);
  if (pair.r() != r) throw std::invalid_argument("f_pair: pair has wrong colour count");
  const auto& j = pair.j;
  const int sigma = pair.sigma;
  const BigInt scale = denom_scale(k, r);

  std::optional<Rational> best;
  for (int i = 0; i < r; ++i) {
    BigInt sum = 0;
    std::vector<int> jl(j.begin(), j.end());
    for (int l = 0; l < r; ++l) {
      jl[l] += sigma;  // j_{l,s} = j_s + sigma*[s == l]
      if (jl[i] > 0) {
        BigInt term = jl[i] * multinomial(k, jl);
        for (int s = 0; s < r; ++s) {
          BigInt base = r * j[s] + sigma;
          for (int e = 0; e < jl[s]; ++e) term *= base;
        }
        sum += term;
      }
      jl[l] -= sigma;
    }
    Rational value(sum, scale * (r * j[i] + sigma));
    if (!best || value < *best) best = value;
  }
  return *best;
}

Rational f_pair_reduced(int k, int r, const ValidPair& pair) {
  validate_pair(pair, k);
  if (pair.r() != r) throw std::invalid_argument("f_pair_reduced: pair has wrong colour count");
  if (!is_canonical(pair))
    throw std::invalid_argument("f_pair_reduced: j must be sorted non-increasingly");
  const auto& j = pair.j;
  const int sigma = pair.sigma;

  BigInt pi = multinomial(k - sigma, j);
  for (int s = 0; s < r; ++s) {
    BigInt base = r * j[s] + sigma;
    for (int e = 0; e < j[s]; ++e) pi *= base;
  }

  auto term = [&](int l) {
    Rational base(BigInt((2 * k + 1 - sigma)) * (r * j[l] + sigma), BigInt(2 * j[l] + 1 + sigma));
    return rat_pow(base, sigma);
  };
  Rational lambda(0);
  for (int l = 0; l < r; ++l) lambda += term(l);

  Rational bracket = Rational(j[r - 1]) * lambda + Rational(sigma) * term(r - 1);
  return Rational(pi, denom_scale(k, r) * (r * j[r - 1] + sigma)) * bracket;
}

FkrResult f_kr(int k, int r) {
  FkrResult out;
  for (const auto& pair : canonical_valid_pairs(k, r)) {
    Rational value = f_pair_reduced(k, r, pair);
    if (out.argmax.empty() || value > out.value) {
      out.value = value;
      out.argmax = {pair};
    } else if (value == out.value) {
      out.argmax.push_back(pair);
    }
  }
  return out;
}

Rational f_star(int k, int r) {
  if (k < 2 || r < 2) throw std::invalid_argument("f_star: need k >= 2 and r >= 2");
  return rat_pow(Rational(1) - Rational(r - 1, BigInt(k) * r), k - 1);
}

Rational m_conjectured(int ell, int k) {
  if (ell < 1 || ell >= k) throw std::invalid_argument("m_conjectured: need 1 <= ell < k");
  Rational candidate = Rational(1) - rat_pow(Rational(k - 1, k), k - ell);
  Rational half(1, 2);
  return candidate > half ? candidate : half;
}

Rational m_prime(int k) { return m_conjectured(1, k); }

ThresholdReport classify(int k, int r) {
  if (k < 2 || r < 2) throw std::invalid_argument("classify: need k >= 2 and r >= 2");
  ThresholdReport rep;
  rep.k = k;
  rep.r = r;
  FkrResult f = f_kr(k, r);
  rep.f_kr = f.value;
  rep.argmax_pairs = std::move(f.argmax);
  rep.m_prime = m_conjectured(1, k);
  rep.b_kr = rep.f_kr > rep.m_prime ? rep.f_kr : rep.m_prime;
  rep.classification =
      rep.f_kr > rep.m_prime ? Classification::BIAS_EXCEEDS : Classification::COINCIDES;
  rep.conditional_on_conjecture = rep.classification == Classification::BIAS_EXCEEDS && k >= 6;
  return rep;
}

const char* classification_name(Classification c) {
  return c == Classification::BIAS_EXCEEDS ? "BIAS_EXCEEDS" : "COINCIDES";
}

std::vector<TableRow> threshold_table(int k_max, int r_max, int jobs) {
  if (k_max < 3 || r_max < 2) throw std::invalid_argument("threshold_table: need k_max >= 3, r_max >= 2");
  if (jobs < 1) throw std::invalid_argument("threshold_table: jobs must be >= 1");
  std::vector<TableRow> rows(k_max - 2);

  auto fill_row = [&](int idx) {
    int k = idx + 3;
    TableRow& row = rows[idx];
    row.k = k;
    row.m_prime = m_conjectured(1, k);
    row.m_prime_decimal = row.m_prime.decimal_truncated(4);
    for (int r = 2; r <= r_max; ++r) {
      TableCell cell;
      cell.r = r;
      cell.value = f_kr(k, r).value;
      cell.decimal = cell.value.decimal_truncated(4);
      cell.flagged = cell.value > row.m_prime;
      row.cells.push_back(std::move(cell));
    }
  };

  if (jobs == 1) {
    for (size_t i = 0; i < rows.size(); ++i) fill_row(static_cast<int>(i));
  } else {
    // Static stride partition: deterministic assignment, no shared state
    // beyond disjoint row slots; output order fixed by the row index.
    std::vector<std::thread> workers;
    int threads = std::min<int>(jobs, static_cast<int>(rows.size()));
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        for (size_t i = t; i < rows.size(); i += threads) fill_row(static_cast<int>(i));
      });
    for (auto& w : workers) w.join();
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "k,m_prime";
  if (!rows.empty())
    for (const auto& cell : rows.front().cells) out << ",f_r" << cell.r;
  out << "\n";
  for (const auto& row : rows) {
    out << row.k << "," << row.m_prime_decimal;
    for (const auto& cell : row.cells) out << "," << cell.decimal;
    out << "\n";
  }
  return out.str();
}

std::string table_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json jrow;
    jrow["k"] = row.k;
    jrow["m_prime"] = {{"rational", row.m_prime.str()}, {"decimal", row.m_prime_decimal}};
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& cell : row.cells)
      cells.push_back({{"r", cell.r},
                       {"rational", cell.value.str()},
                       {"decimal", cell.decimal},
                       {"flagged", cell.flagged}});
    jrow["cells"] = std::move(cells);
    arr.push_back(std::move(jrow));
  }
  return arr.dump(2) + "\n";
}

}  // namespace biasmatch
