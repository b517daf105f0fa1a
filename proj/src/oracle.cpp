#include "biasmatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace biasmatch {

namespace {

// Lowest set bit index of a nonzero mask.
int lowest_bit(std::uint64_t mask) { return std::countr_zero(mask); }

void next_combination_or_end(std::vector<int>& pick, int n, bool& done) {
  const int m = static_cast<int>(pick.size());
  int i = m - 1;
  while (i >= 0 && pick[i] == n - m + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++pick[i];
  for (int s = i + 1; s < m; ++s) pick[s] = pick[s - 1] + 1;
}

// All vectors c of length r with sum `total`, each entry in [lo, total],
// in descending lexicographic order.
void compositions_desc(int total, int r, int lo, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r - 1) {
    int last = total;
    if (last >= lo) {
      cur.push_back(last);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  int remaining_slots = r - 1 - static_cast<int>(cur.size());
  for (int v = total - lo * remaining_slots; v >= lo; --v) {
    cur.push_back(v);
    compositions_desc(total - v, r, lo, cur, out);
    cur.pop_back();
  }
}

// All valid pairs for (k, r) in every coordinate ordering: sigma = +1 first,
// compositions in descending lexicographic order, then sigma = -1.
std::vector<ValidPair> all_valid_pairs(int k, int r) {
  std::vector<ValidPair> out;
  for (int sigma : {1, -1}) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions_desc(k - sigma, r, sigma == 1 ? 0 : 1, cur, comps);
    for (auto& c : comps) out.push_back(ValidPair{std::move(c), sigma});
  }
  return out;
}

}  // namespace

Matching make_matching(const std::vector<Edge>& edges, int r) {
  Matching m;
  m.edges = edges;
  std::sort(m.edges.begin(), m.edges.end(), [](const Edge& a, const Edge& b) {
    if (a.colour != b.colour) return a.colour < b.colour;
    return a.verts < b.verts;
  });
  m.colour_profile.assign(std::max(r, 0), 0);
  std::set<int> seen;
  for (const auto& e : m.edges) {
    for (int v : e.verts)
      if (!seen.insert(v).second)
        throw std::invalid_argument("make_matching: edges are not pairwise disjoint");
    if (r == 0) {
      if (e.colour != 0) throw std::invalid_argument("make_matching: colour on uncoloured host");
    } else if (e.colour < 1 || e.colour > r) {
      throw std::invalid_argument("make_matching: colour out of range");
    } else {
      ++m.colour_profile[e.colour - 1];
    }
  }
  return m;
}

void for_each_perfect_matching(const ColouredHypergraph& h,
                               const std::function<bool(const Matching&)>& visit,
                               SearchBudget* budget) {
  if (h.k <= 0 || h.n % h.k != 0) return;
  if (h.n == 0) {
    visit(make_matching({}, h.r));
    return;
  }
  const auto masks = edge_masks(h);
  const std::uint64_t full =
      h.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.n) - 1;

  // Edge indices grouped by their lowest vertex, in canonical edge order.
  std::vector<std::vector<int>> by_lowest(h.n);
  for (size_t i = 0; i < h.edges.size(); ++i)
    by_lowest[h.edges[i].verts.front()].push_back(static_cast<int>(i));

  std::vector<Edge> chosen;
  bool stop = false;
  auto rec = [&](auto&& self, std::uint64_t covered) -> void {
    if (budget) budget->tick();
    if (covered == full) {
      if (!visit(make_matching(chosen, h.r))) stop = true;
      return;
    }
    const int v = lowest_bit(~covered);
    for (int idx : by_lowest[v]) {
      if (masks[idx] & covered) continue;
      chosen.push_back(h.edges[idx]);
      self(self, covered | masks[idx]);
      chosen.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

std::uint64_t count_perfect_matchings(const ColouredHypergraph& h, SearchBudget* budget) {
  std::uint64_t count = 0;
  for_each_perfect_matching(
      h,
      [&](const Matching&) {
        ++count;
        return true;
      },
      budget);
  return count;
}

std::optional<Matching> first_perfect_matching(const ColouredHypergraph& h, SearchBudget* budget) {
  std::optional<Matching> out;
  for_each_perfect_matching(
      h,
      [&](const Matching& m) {
        out = m;
        return false;
      },
      budget);
  return out;
}

namespace {

std::vector<long long> expected_balance_profile(int n, int k, int r,
                                                const std::vector<Rational>& alpha) {
  if (r < 1) throw std::invalid_argument("verify_balance: host must be coloured");
  if (static_cast<int>(alpha.size()) != r)
    throw std::invalid_argument("verify_balance: need one alpha per colour");
  if (n % k != 0) throw std::invalid_argument("verify_balance: k must divide n");
  Rational sum(0);
  std::vector<long long> expected;
  for (const Rational& a : alpha) {
    if (a < Rational(0)) throw std::invalid_argument("verify_balance: alpha must be >= 0");
    sum += a;
    Rational count = a * Rational(n / k);
    if (!count.is_integer())
      throw std::invalid_argument("verify_balance: alpha_i * n/k must be integral");
    expected.push_back(static_cast<long long>(count.numerator()));
  }
  if (sum != Rational(1)) throw std::invalid_argument("verify_balance: alpha must sum to 1");
  return expected;
}

}  // namespace

BalanceReport verify_balance(const ColouredHypergraph& member, const std::vector<Rational>& alpha,
                             SearchBudget* budget) {
  BalanceReport rep;
  rep.expected_profile = expected_balance_profile(member.n, member.k, member.r, alpha);
  for_each_perfect_matching(
      member,
      [&](const Matching& m) {
        ++rep.matchings_checked;
        for (int c = 1; c <= member.r; ++c) {
          if (m.colour_profile[c - 1] != rep.expected_profile[c - 1]) {
            rep.all_balanced = false;
            ++rep.violations_total;
            if (rep.violations.size() < kBalanceViolationCap)
              rep.violations.push_back(BalanceViolation{
                  m, c, m.colour_profile[c - 1], rep.expected_profile[c - 1]});
            break;
          }
        }
        return true;
      },
      budget);
  return rep;
}

BalanceReport verify_balance(const ExtremalSpec& spec, const std::vector<Rational>& alpha,
                             SearchBudget* budget) {
  // Part sizes |V_i| = (j_i + sigma*alpha_i) * n/k; alpha_i = 1/r recovers
  // the fixed sizes of make_extremal_spec.
  if (static_cast<int>(alpha.size()) != spec.r)
    throw std::invalid_argument("verify_balance: need one alpha per colour");
  std::vector<long long> sizes;
  for (int i = 0; i < spec.r; ++i) {
    Rational size = (Rational(spec.pair.j[i]) + Rational(spec.pair.sigma) * alpha[i]) *
                    Rational(spec.n, spec.k);
    if (!size.is_integer() || size < Rational(0))
      throw std::invalid_argument("verify_balance: alpha gives a non-integral or negative part");
    sizes.push_back(static_cast<long long>(size.numerator()));
  }
  ColouredHypergraph member = build_family_member(spec.k, spec.r, spec.pair, sizes);
  return verify_balance(member, alpha, budget);
}

std::optional<Switcher> find_switcher(const ColouredHypergraph& h, int max_order,
                                      SearchBudget* budget) {
  if (h.r < 1) throw std::invalid_argument("find_switcher: host must be coloured");
  if (h.n > 64) throw std::invalid_argument("find_switcher: needs n <= 64");
  for (int order = h.k; order <= std::min(max_order, h.n); order += h.k) {
    std::vector<int> pick(order);
    for (int i = 0; i < order; ++i) pick[i] = i;
    bool done = false;
    while (!done) {
      if (budget) budget->tick();
      ColouredHypergraph sub = induced_subgraph(h, pick);
      std::optional<Matching> base;
      std::optional<Switcher> found;
      for_each_perfect_matching(sub, [&](const Matching& m) {
        if (budget) budget->tick();
        if (!base) {
          base = m;
          return true;
        }
        if (base->colour_profile == m.colour_profile) return true;
        Switcher sw;
        sw.order = order;
        for (int c = 0; c < h.r; ++c) {
          if (base->colour_profile[c] != m.colour_profile[c]) {
            sw.colour = c + 1;
            if (base->colour_profile[c] > m.colour_profile[c]) {
              sw.m1 = *base;
              sw.m2 = m;
            } else {
              sw.m1 = m;
              sw.m2 = *base;
            }
            break;
          }
        }
        // Restore original vertex labels.
        for (Matching* mp : {&sw.m1, &sw.m2})
          for (Edge& e : mp->edges)
            for (int& v : e.verts) v = pick[v];
        found = std::move(sw);
        return false;
      });
      if (found) return found;
      next_combination_or_end(pick, h.n, done);
    }
  }
  return std::nullopt;
}

namespace {

// Backtracking part assignment for one candidate pair: every colour-c edge
// must have exactly type_of_colour(pair, c)[s] vertices in part s+1.
bool assign_parts(const ColouredHypergraph& h, const ValidPair& pair, std::vector<int>& part_of,
                  SearchBudget* budget) {
  const int r = h.r;
  std::vector<std::vector<int>> type_of(r + 1);
  for (int c = 1; c <= r; ++c) type_of[c] = type_of_colour(pair, c);

  std::vector<char> processed(h.edges.size(), 0);

  auto rec = [&](auto&& self) -> bool {
    if (budget) budget->tick();
    // Most-constrained edge first: fewest unassigned vertices; reject
    // immediately if any processed-enough edge already violates its type.
    int best = -1, best_unassigned = -1;
    for (size_t i = 0; i < h.edges.size(); ++i) {
      if (processed[i]) continue;
      int unassigned = 0;
      for (int v : h.edges[i].verts) unassigned += part_of[v] == 0;
      if (best < 0 || unassigned < best_unassigned) {
        best = static_cast<int>(i);
        best_unassigned = unassigned;
      }
    }
    if (best < 0) return true;  // all edges satisfied

    const Edge& e = h.edges[best];
    std::vector<int> residual = type_of[e.colour];
    std::vector<int> free_verts;
    for (int v : e.verts) {
      if (part_of[v] == 0) {
        free_verts.push_back(v);
      } else if (--residual[part_of[v] - 1] < 0) {
        return false;  // already over-filled in some part
      }
    }
    processed[best] = 1;
    // Assign the edge's free vertices (ascending) to parts respecting the
    // residual multiset, lowest part first: deterministic search order.
    auto place = [&](auto&& self_place, size_t idx) -> bool {
      if (idx == free_verts.size()) return self(self);
      const int v = free_verts[idx];
      for (int p = 1; p <= r; ++p) {
        if (residual[p - 1] == 0) continue;
        --residual[p - 1];
        part_of[v] = p;
        if (self_place(self_place, idx + 1)) return true;
        part_of[v] = 0;
        ++residual[p - 1];
      }
      return false;
    };
    if (place(place, 0)) return true;
    processed[best] = 0;
    return false;
  };
  return rec(rec);
}

}  // namespace

std::optional<MembershipWitness> family_membership(const ColouredHypergraph& h,
                                                   SearchBudget* budget, bool unguarded) {
  if (h.r < 1) throw std::invalid_argument("family_membership: host must be coloured");
  if (!unguarded && h.n > 12)
    throw BudgetExceededError("family_membership: exhaustive mode capped at n <= 12");
  for (const ValidPair& pair : all_valid_pairs(h.k, h.r)) {
    std::vector<int> part_of(h.n, 0);
    if (assign_parts(h, pair, part_of, budget)) {
      for (int& p : part_of)
        if (p == 0) p = 1;  // vertices in no edge
      return MembershipWitness{std::move(part_of), pair};
    }
  }
  return std::nullopt;
}

bool is_family_member(const ColouredHypergraph& h, const MembershipWitness& w) {
  if (static_cast<int>(w.part_of.size()) != h.n) return false;
  if (!is_valid_pair(w.pair, h.k) || w.pair.r() != h.r) return false;
  for (int p : w.part_of)
    if (p < 1 || p > h.r) return false;
  for (const auto& e : h.edges) {
    std::vector<int> type(h.r, 0);
    for (int v : e.verts) ++type[w.part_of[v] - 1];
    if (type != type_of_colour(w.pair, e.colour)) return false;
  }
  return true;
}

std::vector<std::vector<int>> common_neighbourhood_sets(const ColouredHypergraph& h, int x, int y) {
  if (x == y || x < 0 || y < 0 || x >= h.n || y >= h.n)
    throw std::invalid_argument("common_neighbourhood_sets: need distinct vertices in range");
  std::set<std::vector<int>> edge_sets;
  for (const auto& e : h.edges) edge_sets.insert(e.verts);
  std::set<std::vector<int>> common;
  for (const auto& e : h.edges) {
    if (!std::binary_search(e.verts.begin(), e.verts.end(), x)) continue;
    if (std::binary_search(e.verts.begin(), e.verts.end(), y)) continue;
    std::vector<int> s;
    for (int v : e.verts)
      if (v != x) s.push_back(v);
    std::vector<int> with_y = s;
    with_y.insert(std::upper_bound(with_y.begin(), with_y.end(), y), y);
    if (edge_sets.count(with_y)) common.insert(std::move(s));
  }
  return {common.begin(), common.end()};
}

DisjointNbhdResult disjoint_common_neighbourhood(const ColouredHypergraph& h, int x, int y,
                                                 SearchBudget* budget) {
  const auto sets = common_neighbourhood_sets(h, x, y);
  DisjointNbhdResult out;
  if (h.n <= 15) {
    // Exhaustive branch and bound over the lexicographic set order; first
    // strictly better packing wins, so the witness is deterministic.
    std::vector<std::uint32_t> masks;
    for (const auto& s : sets) {
      std::uint32_t m = 0;
      for (int v : s) m |= std::uint32_t{1} << v;
      masks.push_back(m);
    }
    std::vector<int> taken, best;
    auto rec = [&](auto&& self, size_t idx, std::uint32_t used) -> void {
      if (budget) budget->tick();
      if (taken.size() > best.size()) best = taken;
      if (idx == masks.size()) return;
      if (taken.size() + (masks.size() - idx) <= best.size()) return;  // bound
      if (!(masks[idx] & used)) {
        taken.push_back(static_cast<int>(idx));
        self(self, idx + 1, used | masks[idx]);
        taken.pop_back();
      }
      self(self, idx + 1, used);
    };
    rec(rec, 0, 0);
    out.value = static_cast<int>(best.size());
    for (int idx : best) out.witness.push_back(sets[idx]);
    out.exhaustive = true;
  } else {
    std::vector<char> used(h.n, 0);
    for (const auto& s : sets) {
      if (budget) budget->tick();
      bool free = true;
      for (int v : s) free = free && !used[v];
      if (!free) continue;
      for (int v : s) used[v] = 1;
      out.witness.push_back(s);
    }
    out.value = static_cast<int>(out.witness.size());
    out.exhaustive = false;
  }
  return out;
}

StructuralImplicationCheck structural_implication_check(const ColouredHypergraph& h, SearchBudget* budget) {
  if (h.r < 1) throw std::invalid_argument("structural_implication_check: host must be coloured");
  StructuralImplicationCheck out;
  out.edge_in_every_colour = true;
  for (int c = 1; c <= h.r; ++c)
    if (h.count_colour(c) == 0) out.edge_in_every_colour = false;

  bool first = true;
  for (int x = 0; x < h.n && (first || out.min_disjoint_nbhd > 0); ++x)
    for (int y = x + 1; y < h.n; ++y) {
      int value = disjoint_common_neighbourhood(h, x, y, budget).value;
      if (first || value < out.min_disjoint_nbhd) out.min_disjoint_nbhd = value;
      first = false;
    }

  out.switcher_free = !find_switcher(h, h.k * h.k + h.k, budget).has_value();
  out.antecedent = out.edge_in_every_colour && out.min_disjoint_nbhd >= h.k * h.k &&
                   out.switcher_free;
  if (out.antecedent) out.member = family_membership(h, budget);
  out.implication_holds = !out.antecedent || out.member.has_value();
  return out;
}

}  // namespace biasmatch
