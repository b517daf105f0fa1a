#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "biasmatch/exactmath.hpp"

using namespace biasmatch;

namespace {

// Independent binomial oracle: Pascal's triangle by pure addition.
std::vector<std::vector<BigInt>> pascal(int rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

// Independent multinomial oracle: direct factorial evaluation.
BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt multinomial_oracle(int n, const std::vector<int>& parts) {
  BigInt out = factorial(n);
  for (int p : parts) out /= factorial(p);
  return out;
}

}  // namespace

TEST_CASE("Rational invariants: reduced storage, positive denominator") {
  Rational q(BigInt(6), BigInt(-8));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 4);
  CHECK(q.str() == "-3/4");
  CHECK(Rational(BigInt(0), BigInt(5)).str() == "0/1");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("Rational arithmetic and comparisons are exact") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2/1");
  CHECK(-a == Rational(-1, 3));
  CHECK(a > b);
  CHECK_FALSE(Rational(49, 81) < Rational(5, 9));  // 0.6049... vs 0.5555...
  CHECK(Rational(125, 216) > Rational(37, 64));  // 8000 vs 7992 cross-product
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("Rational parse round-trips and rejects junk") {
  CHECK(Rational::parse("49/81") == Rational(49, 81));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("decimal truncation never rounds") {
  CHECK(Rational(3, 4).decimal_truncated(4) == "0.7500");
  CHECK(Rational(2, 3).decimal_truncated(4) == "0.6666");   // not 0.6667
  CHECK(Rational(49, 100).decimal_truncated(4) == "0.4900");
  CHECK(Rational(369, 625).decimal_truncated(4) == "0.5904");
  CHECK(Rational(1).decimal_truncated(4) == "1.0000");
  CHECK(Rational(-2, 3).decimal_truncated(2) == "-0.66");
  CHECK(Rational(5, 9).decimal_truncated(0) == "0");
}

TEST_CASE("multinomial: examples and error cases") {
  CHECK(multinomial(5, {5}) == 1);
  CHECK(multinomial(3, {2, 0, 1}) == 3);
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(0, {}) == 1);
  CHECK_THROWS_AS(multinomial(4, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(multinomial(3, {4, -1}), std::invalid_argument);
}

TEST_CASE("multinomial vs factorial oracle; symmetry; binomial vs Pascal, n <= 30") {
  auto tri = pascal(30);
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == tri[n][k]);
      CHECK(multinomial(n, {k, n - k}) == tri[n][k]);
    }
  CHECK(binomial(30, -1) == 0);
  CHECK(binomial(5, 9) == 0);

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int parts_count = 2 + static_cast<int>(rng() % 4);
    std::vector<int> parts(parts_count);
    for (auto& p : parts) p = static_cast<int>(rng() % 6);
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    BigInt expect = multinomial_oracle(n, parts);
    CHECK(multinomial(n, parts) == expect);
    std::shuffle(parts.begin(), parts.end(), rng);
    CHECK(multinomial(n, parts) == expect);  // symmetric under permutation
  }
}

TEST_CASE("rat_pow: examples, identities, errors") {
  CHECK(rat_pow(Rational(9, 10), 4) == Rational(6561, 10000));
  CHECK(rat_pow(Rational(7, 1), 2) == Rational(49, 1));
  CHECK(rat_pow(Rational(22, 7), 0) == Rational(1));
  CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Rational q(1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 9));
    int a = static_cast<int>(rng() % 9), b = static_cast<int>(rng() % 9);
    CHECK(rat_pow(q, a + b) == rat_pow(q, a) * rat_pow(q, b));
  }
}

TEST_CASE("pair parsing and canonical form") {
  ValidPair p = parse_pair("2,0;+1");
  CHECK(p.j == std::vector<int>{2, 0});
  CHECK(p.sigma == 1);
  CHECK(p.k() == 3);
  CHECK(p.str() == "2,0;+1");
  CHECK(parse_pair("2,1,1;-1").k() == 3);
  CHECK_THROWS_AS(parse_pair("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pair("2,0;2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pair("2,x;+1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pair("1,0;-1"), std::invalid_argument);  // j_i + sigma < 0

  CHECK(is_canonical(parse_pair("2,1,1;-1")));
  CHECK_FALSE(is_canonical(ValidPair{{0, 2}, 1}));
  CHECK(canonicalize(ValidPair{{0, 2}, 1}) == ValidPair{{2, 0}, 1});
}

TEST_CASE("canonical_valid_pairs: frozen small cases") {
  using VP = std::vector<ValidPair>;
  CHECK(canonical_valid_pairs(3, 3) ==
        VP{{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{2, 1, 1}, -1}});
  CHECK(canonical_valid_pairs(2, 2) == VP{{{1, 0}, 1}, {{2, 1}, -1}});
  CHECK(canonical_valid_pairs(3, 2) ==
        VP{{{2, 0}, 1}, {{1, 1}, 1}, {{3, 1}, -1}, {{2, 2}, -1}});
  CHECK_THROWS_AS(canonical_valid_pairs(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(canonical_valid_pairs(3, 1), std::invalid_argument);
}

TEST_CASE("canonical_valid_pairs: invariants on k <= 12, r <= 10") {
  for (int k = 2; k <= 12; ++k)
    for (int r = 2; r <= 10; ++r) {
      auto pairs = canonical_valid_pairs(k, r);
      CHECK(!pairs.empty());
      std::set<std::string> seen;
      for (const auto& p : pairs) {
        CHECK(is_valid_pair(p, k));
        CHECK(is_canonical(p));
        CHECK(p.r() == r);
        // denominator safety: r*j_i + sigma >= 1 for every coordinate
        for (int ji : p.j) CHECK(r * ji + p.sigma >= 1);
        CHECK(seen.insert(p.str()).second);  // no duplicates
      }
    }
}
