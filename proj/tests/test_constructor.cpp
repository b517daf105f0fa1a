#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "biasmatch/constructor.hpp"
#include "biasmatch/search_budget.hpp"

using namespace biasmatch;

namespace {

// Independent recount of per-colour edges through one vertex.
std::map<int, long long> colour_degrees_of_vertex(const ColouredHypergraph& h, int v) {
  std::map<int, long long> deg;
  for (int c = 1; c <= h.r; ++c) deg[c] = 0;
  for (const auto& e : h.edges)
    for (int u : e.verts)
      if (u == v) ++deg[e.colour];
  return deg;
}

}  // namespace

TEST_CASE("derived part sizes") {
  CHECK(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 12).part_sizes ==
        std::vector<long long>{10, 2});
  CHECK(make_extremal_spec(3, 3, ValidPair{{2, 0, 0}, 1}, 9).part_sizes ==
        std::vector<long long>{7, 1, 1});
  CHECK(make_extremal_spec(3, 2, ValidPair{{1, 1}, 1}, 6).part_sizes ==
        std::vector<long long>{3, 3});
  CHECK(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 6).part_sizes ==
        std::vector<long long>{5, 1});
  CHECK(make_extremal_spec(3, 2, ValidPair{{2, 2}, -1}, 12).part_sizes ==
        std::vector<long long>{6, 6});
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_extremal_spec(3, 2, ValidPair{{1, 1}, -1}, 12), std::invalid_argument);
  CHECK_THROWS_AS(make_extremal_spec(3, 3, ValidPair{{2, 0}, 1}, 18), std::invalid_argument);
}

TEST_CASE("colour types") {
  CHECK(type_of_colour(ValidPair{{2, 0}, 1}, 1) == std::vector<int>{3, 0});
  CHECK(type_of_colour(ValidPair{{2, 0}, 1}, 2) == std::vector<int>{2, 1});
  CHECK(type_of_colour(ValidPair{{2, 2, 1}, -1}, 3) == std::vector<int>{2, 2, 0});
  CHECK_THROWS_AS(type_of_colour(ValidPair{{2, 0}, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(type_of_colour(ValidPair{{2, 0}, 1}, 3), std::invalid_argument);
}

TEST_CASE("edge counts of reference members") {
  const auto m12 = build_extremal(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 12));
  CHECK(m12.n == 12);
  CHECK(m12.count_colour(1) == 120);  // C(10,3) sets of type (3,0)
  CHECK(m12.count_colour(2) == 90);   // C(10,2)*C(2,1) sets of type (2,1)

  const auto m9 = build_extremal(make_extremal_spec(3, 3, ValidPair{{2, 0, 0}, 1}, 9));
  CHECK(m9.count_colour(1) == 35);
  CHECK(m9.count_colour(2) == 21);
  CHECK(m9.count_colour(3) == 21);

  const auto m6 = build_extremal(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 6));
  CHECK(m6.count_colour(1) == 10);
  CHECK(m6.count_colour(2) == 10);

  const auto b6 = build_extremal(make_extremal_spec(3, 2, ValidPair{{1, 1}, 1}, 6));
  CHECK(b6.count_colour(1) == 9);
  CHECK(b6.count_colour(2) == 9);
}

TEST_CASE("members are edge-maximal: every colour hits its full typed count") {
  const std::vector<std::pair<ValidPair, long long>> cases = {
      {ValidPair{{2, 0}, 1}, 12},  {ValidPair{{1, 1}, 1}, 12},  {ValidPair{{2, 2}, -1}, 12},
      {ValidPair{{3, 1}, -1}, 12}, {ValidPair{{2, 0, 0}, 1}, 9}, {ValidPair{{2, 1, 1}, -1}, 9}};
  for (const auto& [pair, n] : cases) {
    CAPTURE(pair.str());
    const int r = pair.r();
    const auto spec = make_extremal_spec(3, r, pair, n);
    const auto h = build_extremal(spec);
    for (int c = 1; c <= r; ++c) {
      const auto type = type_of_colour(pair, c);
      BigInt expect = 1;
      for (int s = 0; s < r; ++s) expect *= binomial(spec.part_sizes[s], type[s]);
      CHECK(BigInt(h.count_colour(c)) == expect);
    }
  }
}

TEST_CASE("unrealizable colours come out empty with a note") {
  std::ostringstream notes;
  const auto h = build_family_member(3, 2, ValidPair{{1, 1}, 1}, {5, 1}, &notes);
  CHECK(h.count_colour(1) == 10);  // type (2,1)
  CHECK(h.count_colour(2) == 0);   // type (1,2) needs two vertices in part 2
  CHECK(notes.str() ==
        "note: colour 2 has no edges: type (1,2) does not fit the part sizes\n");
  CHECK_THROWS_AS(build_family_member(3, 2, ValidPair{{1, 1}, 1}, {5}), std::invalid_argument);
}

TEST_CASE("finite colour degrees match a direct recount") {
  const std::vector<std::pair<ValidPair, long long>> cases = {
      {ValidPair{{2, 0}, 1}, 12}, {ValidPair{{1, 1}, 1}, 6}, {ValidPair{{2, 2}, -1}, 12},
      {ValidPair{{2, 0, 0}, 1}, 9}};
  for (const auto& [pair, n] : cases) {
    CAPTURE(pair.str());
    const int r = pair.r();
    const auto spec = make_extremal_spec(3, r, pair, n);
    const auto h = build_extremal(spec);
    long long offset = 0;
    for (int part = 1; part <= r; ++part) {
      const auto deg = colour_degrees_of_vertex(h, static_cast<int>(offset));
      for (int c = 1; c <= r; ++c)
        CHECK(finite_colour_degree(spec, part, c) == BigInt(deg.at(c)));
      offset += spec.part_sizes[part - 1];
    }
  }
  const auto spec = make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 12);
  CHECK(finite_colour_degree(spec, 1, 1) == BigInt(36));
  CHECK(finite_colour_degree(spec, 1, 2) == BigInt(18));
  CHECK(finite_colour_degree(spec, 2, 1) == BigInt(0));
  CHECK(finite_colour_degree(spec, 2, 2) == BigInt(45));
  CHECK_THROWS_AS(finite_colour_degree(spec, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(finite_colour_degree(spec, 3, 1), std::invalid_argument);
}

TEST_CASE("minimum degree goldens on the n = 12 two-colour member") {
  const auto h = build_extremal(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 12));
  const auto d1 = min_degree(h, 1);
  CHECK(d1.value == 45);
  CHECK(d1.witness == std::vector<int>{10});
  const auto d2 = min_degree(h, 2);
  CHECK(d2.value == 0);  // no edge holds two part-2 vertices
  CHECK(d2.witness == std::vector<int>{10, 11});
  CHECK_THROWS_AS(min_degree(h, 0), std::invalid_argument);
  CHECK_THROWS_AS(min_degree(h, 3), std::invalid_argument);
}

TEST_CASE("minimum degree golden on the n = 9 three-colour member") {
  const auto h = build_extremal(make_extremal_spec(3, 3, ValidPair{{2, 0, 0}, 1}, 9));
  const auto d1 = min_degree(h, 1);
  CHECK(d1.value == 21);
  CHECK(d1.witness == std::vector<int>{7});
}

TEST_CASE("minimum degree size guards") {
  CHECK_THROWS_AS(min_degree(complete_hypergraph(65, 2), 1), BudgetExceededError);
  CHECK_THROWS_AS(min_degree(complete_hypergraph(21, 3), 2), BudgetExceededError);
  CHECK(min_degree(complete_hypergraph(20, 3), 2).value == 18);
}

TEST_CASE("tight-cycle counterexample at n = 16") {
  std::ostringstream notes;
  const auto h = build_tight_cycle_counterexample(16, &notes);
  CHECK(h.n == 16);
  CHECK(h.k == 4);
  CHECK(h.r == 2);
  CHECK(h.count_colour(1) == 1001);  // C(14,4); the (1,3) and (0,4) layers need 3+ part-2 vertices
  CHECK(h.count_colour(2) == 728);   // C(14,3)*2
  CHECK(notes.str() ==
        "note: colour 1 has no edges: type (1,3) does not fit the part sizes\n"
        "note: colour 1 has no edges: type (0,4) does not fit the part sizes\n");
  const auto d = min_degree(h, 1);
  CHECK(d.value == 364);
  CHECK(d.witness == std::vector<int>{14});
  CHECK(Rational(d.value, binomial(15, 3)) == Rational(4, 5));
}

TEST_CASE("tight-cycle minimum degree ratios shrink towards 365/512") {
  const Rational limit(365, 512);
  Rational prev;
  bool have_prev = false;
  for (long long n : {16, 24, 32}) {
    const auto h = build_tight_cycle_counterexample(n);
    const auto d = min_degree(h, 1);
    const Rational ratio(d.value, binomial(n - 1, 3));
    CAPTURE(n);
    CHECK(ratio > limit);
    if (have_prev) CHECK(ratio < prev);
    prev = ratio;
    have_prev = true;
    if (n == 24) CHECK(d.value == 1351);
    if (n == 32) CHECK(d.value == 3361);
  }
}

TEST_CASE("tight-cycle input validation and materialization cap") {
  CHECK_THROWS_AS(build_tight_cycle_counterexample(12), std::invalid_argument);
  CHECK_THROWS_AS(build_tight_cycle_counterexample(0), std::invalid_argument);
  CHECK_THROWS_AS(build_tight_cycle_counterexample(6000), BudgetExceededError);
  CHECK_THROWS_AS(build_extremal(make_extremal_spec(3, 2, ValidPair{{2, 0}, 1}, 6000)),
                  BudgetExceededError);
}

TEST_CASE("complete hypergraph") {
  const auto h = complete_hypergraph(6, 3);
  CHECK(h.edges.size() == 20);
  CHECK(h.r == 1);
  CHECK(h.edges.front().colour == 1);
  CHECK(complete_hypergraph(7, 2, 3, 2).count_colour(2) == 21);
}
