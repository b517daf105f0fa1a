#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "biasmatch/thresholds.hpp"

#include <json.hpp>

using namespace biasmatch;

TEST_CASE("three-colour reference values at k = 3") {
  CHECK(f_pair(3, 3, ValidPair{{2, 0, 0}, 1}) == Rational(49, 81));
  CHECK(f_pair(3, 3, ValidPair{{1, 1, 0}, 1}) == Rational(32, 81));
  CHECK(f_pair(3, 3, ValidPair{{2, 1, 1}, -1}) == Rational(5, 9));
}

TEST_CASE("f_pair accepts any coordinate ordering and is permutation-invariant") {
  CHECK(f_pair(3, 3, ValidPair{{0, 2, 0}, 1}) == Rational(49, 81));
  CHECK(f_pair(3, 3, ValidPair{{0, 1, 1}, 1}) == Rational(32, 81));
  CHECK(f_pair(3, 3, ValidPair{{1, 2, 1}, -1}) == Rational(5, 9));
  CHECK(f_pair(5, 3, ValidPair{{1, 3, 2}, -1}) == f_pair(5, 3, ValidPair{{3, 2, 1}, -1}));
}

TEST_CASE("f_pair_reduced demands sorted coordinates; f_pair demands validity") {
  CHECK_THROWS_AS(f_pair_reduced(3, 3, ValidPair{{0, 2, 0}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(f_pair(3, 3, ValidPair{{2, 0}, 1}), std::invalid_argument);      // wrong r
  CHECK_THROWS_AS(f_pair(4, 3, ValidPair{{2, 0, 0}, 1}), std::invalid_argument);   // wrong k
  CHECK_THROWS_AS(f_pair(3, 2, ValidPair{{4, 0}, -1}), std::invalid_argument);     // j_2-1 < 0
}

TEST_CASE("general and reduced formulas agree on every canonical pair, k <= 10, r <= 5") {
  int checked = 0;
  for (int k = 2; k <= 10; ++k)
    for (int r = 2; r <= 5; ++r)
      for (const auto& pair : canonical_valid_pairs(k, r)) {
        CAPTURE(k);
        CAPTURE(r);
        CAPTURE(pair.str());
        CHECK(f_pair(k, r, pair) == f_pair_reduced(k, r, pair));
        ++checked;
      }
  CHECK(checked == 370);
}

TEST_CASE("exceptional two-colour maxima and their argmax pairs") {
  const FkrResult f32 = f_kr(3, 2);
  CHECK(f32.value == Rational(3, 4));
  REQUIRE(f32.argmax.size() == 2);
  CHECK(f32.argmax[0] == ValidPair{{1, 1}, 1});
  CHECK(f32.argmax[1] == ValidPair{{2, 2}, -1});

  const FkrResult f42 = f_kr(4, 2);
  CHECK(f42.value == Rational(175, 256));
  REQUIRE(f42.argmax.size() == 2);
  CHECK(f42.argmax[0] == ValidPair{{2, 1}, 1});
  CHECK(f42.argmax[1] == ValidPair{{3, 2}, -1});

  CHECK(f_kr(5, 2).value == Rational(6561, 10000));
  CHECK(f_kr(3, 3).value == Rational(49, 81));
  CHECK(f_kr(3, 3).argmax == std::vector<ValidPair>{ValidPair{{2, 0, 0}, 1}});
}

TEST_CASE("two-colour argmax always carries the shifted sigma = -1 twin") {
  for (int k = 3; k <= 12; ++k) {
    const FkrResult f = f_kr(k, 2);
    REQUIRE(f.argmax.size() == 2);
    const ValidPair& plus = f.argmax[0];
    REQUIRE(plus.sigma == 1);
    CHECK(f.argmax[1] == ValidPair{{plus.j[0] + 1, plus.j[1] + 1}, -1});
  }
}

TEST_CASE("closed form matches the maximum except at (3,2) and (4,2)") {
  CHECK(f_star(3, 2) == Rational(25, 36));
  CHECK(f_star(4, 2) == Rational(343, 512));
  for (int k = 2; k <= 12; ++k)
    for (int r = 2; r <= 6; ++r) {
      CAPTURE(k);
      CAPTURE(r);
      const bool exceptional = (k == 3 && r == 2) || (k == 4 && r == 2);
      if (exceptional)
        CHECK(f_kr(k, r).value > f_star(k, r));
      else
        CHECK(f_kr(k, r).value == f_star(k, r));
    }
  CHECK_THROWS_AS(f_star(1, 2), std::invalid_argument);
}

TEST_CASE("k = 2 closed form (r+1)/(2r)") {
  for (int r = 2; r <= 10; ++r)
    CHECK(f_kr(2, r).value == Rational(r + 1, 2 * r));
}

TEST_CASE("conjectured matching thresholds") {
  CHECK(m_prime(3) == Rational(5, 9));
  CHECK(m_prime(5) == Rational(369, 625));
  CHECK(m_prime(5).decimal_truncated(4) == "0.5904");
  CHECK(m_conjectured(2, 3) == Rational(1, 2));  // the 1/2 floor binds
  CHECK(m_conjectured(1, 2) == Rational(1, 2));
  CHECK(m_conjectured(2, 5) == Rational(1, 2));  // 1 - (4/5)^3 = 0.488 < 1/2
  CHECK(m_conjectured(2, 10) == Rational(1) - rat_pow(Rational(9, 10), 8));
  CHECK_THROWS_AS(m_conjectured(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(m_conjectured(3, 3), std::invalid_argument);
}

TEST_CASE("classification pivots at k = 17 for two colours") {
  const ThresholdReport r16 = classify(16, 2);
  CHECK(r16.classification == Classification::BIAS_EXCEEDS);
  CHECK(r16.f_kr > r16.m_prime);
  CHECK(r16.b_kr == r16.f_kr);
  CHECK(r16.conditional_on_conjecture);

  const ThresholdReport r17 = classify(17, 2);
  CHECK(r17.classification == Classification::COINCIDES);
  CHECK(r17.f_kr < r17.m_prime);
  CHECK(r17.b_kr == r17.m_prime);
  CHECK_FALSE(r17.conditional_on_conjecture);

  // Known thresholds for k <= 5 make those classifications unconditional.
  CHECK(classify(3, 2).classification == Classification::BIAS_EXCEEDS);
  CHECK_FALSE(classify(3, 2).conditional_on_conjecture);
  CHECK(classify(6, 2).conditional_on_conjecture);
  CHECK(classify(3, 3).classification == Classification::BIAS_EXCEEDS);
  CHECK(classify(4, 3).classification == Classification::BIAS_EXCEEDS);
  CHECK(classify(3, 4).classification == Classification::BIAS_EXCEEDS);
  CHECK(classify(5, 3).classification == Classification::COINCIDES);
  CHECK(std::string(classification_name(Classification::BIAS_EXCEEDS)) == "BIAS_EXCEEDS");
}

TEST_CASE("threshold table layout, decimals, and flags") {
  const auto rows = threshold_table(5, 4);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].k == 3);
  CHECK(rows[0].m_prime_decimal == "0.5555");
  REQUIRE(rows[0].cells.size() == 3);
  CHECK(rows[0].cells[0].decimal == "0.7500");
  CHECK(rows[0].cells[1].decimal == "0.6049");
  CHECK(rows[0].cells[2].decimal == "0.5625");
  CHECK(rows[0].cells[0].flagged);
  CHECK(rows[0].cells[1].flagged);
  CHECK(rows[0].cells[2].flagged);
  CHECK(rows[2].k == 5);
  CHECK(rows[2].m_prime_decimal == "0.5904");
  CHECK(rows[2].cells[0].decimal == "0.6561");
  CHECK(rows[2].cells[0].flagged);
  CHECK_FALSE(rows[2].cells[1].flagged);
  CHECK_THROWS_AS(threshold_table(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(threshold_table(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(threshold_table(5, 4, 0), std::invalid_argument);
}

TEST_CASE("parallel table computation is deterministic") {
  const auto seq = threshold_table(9, 5, 1);
  const auto par = threshold_table(9, 5, 3);
  REQUIRE(seq.size() == par.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].k == par[i].k);
    CHECK(seq[i].m_prime == par[i].m_prime);
    for (size_t c = 0; c < seq[i].cells.size(); ++c) {
      CHECK(seq[i].cells[c].value == par[i].cells[c].value);
      CHECK(seq[i].cells[c].flagged == par[i].cells[c].flagged);
    }
  }
  CHECK(table_csv(seq) == table_csv(par));
}

TEST_CASE("CSV layout") {
  const auto rows = threshold_table(4, 3);
  const std::string csv = table_csv(rows);
  CHECK(csv ==
        "k,m_prime,f_r2,f_r3\n"
        "3,0.5555,0.7500,0.6049\n"
        "4,0.5781,0.6835,0.5787\n");
}

TEST_CASE("JSON table carries exact rationals and flags") {
  const auto rows = threshold_table(4, 3);
  const auto j = nlohmann::json::parse(table_json(rows));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0]["k"] == 3);
  CHECK(j[0]["m_prime"]["rational"] == "5/9");
  CHECK(j[0]["cells"][0]["r"] == 2);
  CHECK(j[0]["cells"][0]["rational"] == "3/4");
  CHECK(j[0]["cells"][0]["decimal"] == "0.7500");
  CHECK(j[0]["cells"][0]["flagged"] == true);
  CHECK(j[1]["cells"][1]["rational"] == "125/216");
  CHECK(j[1]["cells"][1]["flagged"] == true);  // 125/216 > 37/64
}
