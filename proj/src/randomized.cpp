#include "biasmatch/randomized.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace biasmatch {

namespace {

// 2^64 as a big integer, the scale of one generator draw.
const BigInt kTwo64 = BigInt(1) << 64;

// Draw t distinct vertices from [0..n) by a partial Fisher-Yates pass using
// modulo reduction (never std::uniform_int_distribution, whose mapping is
// implementation-defined). Result sorted ascending.
std::vector<int> draw_subset(std::mt19937_64& rng, int n, int t) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < t; ++i)
    std::swap(pool[i], pool[i + static_cast<int>(rng() % (n - i))]);
  std::vector<int> out(pool.begin(), pool.begin() + t);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ColouredHypergraph sample_hkp(int n, int k, const Rational& p, std::uint64_t seed) {
  if (p < Rational(0) || p > Rational(1))
    throw std::invalid_argument("sample_hkp: p must lie in [0, 1]");
  if (k < 1 || k > n) throw std::invalid_argument("sample_hkp: need 1 <= k <= n");
  std::mt19937_64 rng(seed);
  const BigInt threshold = p.numerator() * kTwo64;
  std::vector<Edge> edges;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    const std::uint64_t v = rng();
    if (BigInt(v) * p.denominator() < threshold) edges.push_back(Edge{pick, 0});
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int s = i + 1; s < k; ++s) pick[s] = pick[s - 1] + 1;
  }
  return make_hypergraph(n, k, 0, std::move(edges));
}

ColouredHypergraph colour_edges_random(const ColouredHypergraph& h, int r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("colour_edges_random: need r >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = h.edges;
  for (Edge& e : edges) e.colour = 1 + static_cast<int>(rng() % r);
  return make_hypergraph(h.n, h.k, r, std::move(edges));
}

namespace {

// Does some transversal of size <= limit hit every set? On success fills
// *out with one such transversal.
bool transversal_within(const std::vector<std::uint32_t>& sets, int limit,
                        std::vector<int>& chosen, std::uint64_t& nodes, SearchBudget* budget,
                        std::vector<int>* out) {
  ++nodes;
  if (budget) budget->tick();
  std::uint32_t hit = 0;
  for (int v : chosen) hit |= std::uint32_t{1} << v;
  const std::uint32_t* unmet = nullptr;
  for (const auto& s : sets)
    if (!(s & hit)) {
      unmet = &s;
      break;
    }
  if (!unmet) {
    if (out) *out = chosen;
    return true;
  }
  if (static_cast<int>(chosen.size()) >= limit) return false;
  for (std::uint32_t rest = *unmet; rest; rest &= rest - 1) {
    chosen.push_back(std::countr_zero(rest));
    if (transversal_within(sets, limit, chosen, nodes, budget, out)) return true;
    chosen.pop_back();
  }
  return false;
}

bool set_contains_edge(const std::vector<std::uint64_t>& edge_masks_v, std::uint64_t x) {
  for (std::uint64_t m : edge_masks_v)
    if ((m & x) == m) return true;
  return false;
}

std::uint64_t mask_of(const std::vector<int>& verts) {
  std::uint64_t m = 0;
  for (int v : verts) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

PropertyReport check_random_properties(const ColouredHypergraph& h, int r,
                                       const PropertyCheckOptions& options) {
  if (r < 1) throw std::invalid_argument("check_random_properties: need r >= 1");
  if (h.n > 14 && !options.sampled)
    throw BudgetExceededError("check_random_properties: exhaustive mode capped at n <= 14");
  if (h.n > 64) throw BudgetExceededError("check_random_properties: needs n <= 64");

  PropertyReport rep;
  rep.sampled = options.sampled;
  const int t_i = (h.n + 2 * r - 1) / (2 * r);   // ceil(n / (2r))
  const int t_ii = (h.n + 2) / 3;                // ceil(n / 3)
  const auto masks = edge_masks(h);

  auto check_set_i = [&](const std::vector<int>& x) {
    ++rep.nodes;
    if (options.budget) options.budget->tick();
    return set_contains_edge(masks, mask_of(x));
  };

  // Common (k-1)-set masks per pair, computed on demand.
  std::map<std::pair<int, int>, std::vector<std::uint32_t>> common_cache;
  auto common_masks = [&](int x, int y) -> const std::vector<std::uint32_t>& {
    auto key = std::minmax(x, y);
    auto it = common_cache.find(key);
    if (it == common_cache.end()) {
      std::vector<std::uint32_t> ms;
      for (const auto& s : common_neighbourhood_sets(h, key.first, key.second))
        ms.push_back(static_cast<std::uint32_t>(mask_of(s)));
      it = common_cache.emplace(key, std::move(ms)).first;
    }
    return it->second;
  };

  rep.property_i = true;
  rep.property_ii = true;

  if (!options.sampled) {
    // (i): every t_i-set contains an edge; supersets inherit the property.
    if (t_i <= h.n) {
      std::vector<int> pick(t_i);
      for (int i = 0; i < t_i; ++i) pick[i] = i;
      while (rep.property_i) {
        if (!check_set_i(pick)) {
          rep.property_i = false;
          rep.independent_witness = pick;
          break;
        }
        int i = t_i - 1;
        while (i >= 0 && pick[i] == h.n - t_i + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int s = i + 1; s < t_i; ++s) pick[s] = pick[s - 1] + 1;
      }
    }
    // (ii): a t_ii-set avoiding every common (k-1)-set of N(x), N(y) exists
    // exactly when the family has a transversal of size <= n - t_ii.
    for (int x = 0; x < h.n && rep.property_ii; ++x)
      for (int y = x + 1; y < h.n; ++y) {
        if (t_ii > h.n) break;
        std::vector<int> chosen, transversal;
        if (transversal_within(common_masks(x, y), h.n - t_ii, chosen, rep.nodes,
                               options.budget, &transversal)) {
          std::vector<char> in_t(h.n, 0);
          for (int v : transversal) in_t[v] = 1;
          PairWitness w;
          w.x = x;
          w.y = y;
          for (int v = 0; v < h.n && static_cast<int>(w.avoid_set.size()) < t_ii; ++v)
            if (!in_t[v]) w.avoid_set.push_back(v);
          rep.property_ii = false;
          rep.witness_ii = std::move(w);
          break;
        }
      }
    return rep;
  }

  // Sampling mode: absence of counterexamples among `samples` random probes.
  std::mt19937_64 rng(options.seed);
  if (t_i <= h.n)
    for (int s = 0; s < options.samples && rep.property_i; ++s) {
      std::vector<int> x = draw_subset(rng, h.n, t_i);
      if (!check_set_i(x)) {
        rep.property_i = false;
        rep.independent_witness = std::move(x);
      }
    }
  if (t_ii <= h.n && h.n >= 2)
    for (int s = 0; s < options.samples && rep.property_ii; ++s) {
      ++rep.nodes;
      if (options.budget) options.budget->tick();
      const int x = static_cast<int>(rng() % h.n);
      int y = static_cast<int>(rng() % (h.n - 1));
      if (y >= x) ++y;
      std::vector<int> set = draw_subset(rng, h.n, t_ii);
      const std::uint64_t set_mask = mask_of(set);
      bool found = false;
      for (std::uint32_t m : common_masks(x, y))
        if ((m & set_mask) == m) {
          found = true;
          break;
        }
      if (!found) {
        rep.property_ii = false;
        rep.witness_ii = PairWitness{x, y, std::move(set)};
      }
    }
  return rep;
}

namespace {

// Remove one switcher's vertex set from `verts` (both sorted ascending).
std::vector<int> subtract_sorted(const std::vector<int>& verts, const std::vector<int>& gone) {
  std::vector<int> out;
  std::set_difference(verts.begin(), verts.end(), gone.begin(), gone.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> matching_vertices(const Matching& m) {
  std::vector<int> vs;
  for (const auto& e : m.edges) vs.insert(vs.end(), e.verts.begin(), e.verts.end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

BiasSearchResult bias_search(const ColouredHypergraph& h, const BiasSearchConfig& config) {
  if (h.r < 1) throw std::invalid_argument("bias_search: host must be coloured");
  if (h.k < 1 || h.n % h.k != 0) throw std::invalid_argument("bias_search: k must divide n");
  if (config.gamma_target < Rational(0))
    throw std::invalid_argument("bias_search: gamma_target must be >= 0");
  const int switcher_cap =
      config.switcher_budget < 0 ? h.k * h.k + h.k : config.switcher_budget;

  // One local meter counts every node. Inner searches run against a stage
  // budget capped at whatever the caller's budget has left, so a global cap
  // aborts mid-search; on success the caller's budget is charged the stage's
  // node count.
  SearchBudget meter;
  auto stage_budget = [&]() {
    return SearchBudget{config.budget ? config.budget->limit - config.budget->used
                                      : UINT64_MAX,
                        0};
  };
  auto settle = [&](const SearchBudget& stage) {
    meter.used += stage.used;
    if (config.budget) config.budget->tick(stage.used);
  };

  // Stage 1: maximal vertex-disjoint switcher family, greedily by repeated
  // minimum-order/lexicographically-least search on the shrinking residual.
  std::vector<int> residual(h.n);
  std::iota(residual.begin(), residual.end(), 0);
  std::vector<Switcher> switchers;
  while (static_cast<int>(residual.size()) >= h.k) {
    ColouredHypergraph sub = induced_subgraph(h, residual);
    SearchBudget stage = stage_budget();
    std::optional<Switcher> sw =
        find_switcher(sub, std::min<int>(switcher_cap, sub.n), &stage);
    settle(stage);
    if (!sw) break;
    for (Matching* mp : {&sw->m1, &sw->m2})
      for (Edge& e : mp->edges)
        for (int& v : e.verts) v = residual[v];
    residual = subtract_sorted(residual, matching_vertices(sw->m1));
    switchers.push_back(std::move(*sw));
  }

  // Stage 2: perfect matching on the untouched residual vertices.
  Matching residual_matching = make_matching({}, h.r);
  if (!residual.empty()) {
    ColouredHypergraph sub = induced_subgraph(h, residual);
    if (sub.n <= 15) {
      SearchBudget stage = stage_budget();
      std::optional<Matching> m = first_perfect_matching(sub, &stage);
      settle(stage);
      if (!m)
        throw NoResidualMatchingError(
            "bias_search: residual vertex set has no perfect matching");
      residual_matching = std::move(*m);
    } else {
      // Seeded greedy with restarts: each attempt walks a shuffled edge
      // order, keeping every edge disjoint from the picks so far.
      std::mt19937_64 rng(config.seed);
      std::vector<int> order(sub.edges.size());
      std::iota(order.begin(), order.end(), 0);
      const auto masks = edge_masks(sub);
      const std::uint64_t full =
          sub.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sub.n) - 1;
      std::uint64_t heuristic_nodes = 0;
      bool found = false;
      while (!found) {
        for (size_t i = order.size(); i > 1; --i)
          std::swap(order[i - 1], order[rng() % i]);
        std::uint64_t covered = 0;
        std::vector<Edge> picks;
        for (int idx : order) {
          ++heuristic_nodes;
          meter.tick();
          if (config.budget) config.budget->tick();
          if (masks[idx] & covered) continue;
          covered |= masks[idx];
          picks.push_back(sub.edges[idx]);
        }
        if (covered == full) {
          residual_matching = make_matching(picks, h.r);
          found = true;
        } else if (heuristic_nodes >= config.max_nodes) {
          throw BudgetExceededError("bias_search: residual heuristic exhausted max_nodes");
        }
      }
    }
    for (Edge& e : residual_matching.edges)
      for (int& v : e.verts) v = residual[v];
  }

  // Stage 3: flip every switcher to the state that maximizes one colour.
  BiasSearchResult out;
  long long best_total = -1;
  int best_colour = 1;
  for (int c = 1; c <= h.r; ++c) {
    long long total = residual_matching.colour_profile[c - 1];
    for (const Switcher& sw : switchers) {
      total += std::max(sw.m1.colour_profile[c - 1], sw.m2.colour_profile[c - 1]);
    }
    if (total > best_total) {
      best_total = total;
      best_colour = c;
    }
  }

  std::vector<Edge> final_edges = residual_matching.edges;
  for (const Switcher& sw : switchers) {
    const bool take_m1 =
        sw.m1.colour_profile[best_colour - 1] >= sw.m2.colour_profile[best_colour - 1];
    const Matching& state = take_m1 ? sw.m1 : sw.m2;
    // Flip soundness: the two states cover the same vertices and their
    // counts of the switcher's colour differ by at least one.
    if (matching_vertices(sw.m1) != matching_vertices(sw.m2) ||
        sw.m1.colour_profile[sw.colour - 1] <= sw.m2.colour_profile[sw.colour - 1])
      throw std::logic_error("bias_search: malformed switcher state");
    final_edges.insert(final_edges.end(), state.edges.begin(), state.edges.end());
  }
  out.matching = make_matching(final_edges, h.r);  // throws if not disjoint
  if (!out.matching.perfect(h.n, h.k))
    throw std::logic_error("bias_search: assembled matching is not perfect");
  out.counts = out.matching.colour_profile;
  out.majority_colour = best_colour;
  out.bias = Rational(out.counts[best_colour - 1]) - Rational(h.n, BigInt(h.k) * h.r);
  out.switchers_used = static_cast<int>(switchers.size());
  out.met_target = out.bias >= config.gamma_target * Rational(h.n);
  out.nodes = meter.used;
  return out;
}

}  // namespace biasmatch
