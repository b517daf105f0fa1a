#include "biasmatch/constructor.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "biasmatch/search_budget.hpp"

namespace biasmatch {

namespace {

constexpr long long kEdgeMaterializationCap = 4'000'000;

// Number of k-sets with exactly type[s] vertices inside part s.
BigInt count_of_type(const std::vector<long long>& part_sizes, const std::vector<int>& type) {
  BigInt count = 1;
  for (size_t s = 0; s < part_sizes.size(); ++s) count *= binomial(part_sizes[s], type[s]);
  return count;
}

// Appends every k-set with the given per-part type, coloured `colour`.
// Parts are contiguous: part s covers [offsets[s], offsets[s] + part_sizes[s]).
void emit_type(const std::vector<long long>& part_sizes, const std::vector<long long>& offsets,
               const std::vector<int>& type, int colour, std::vector<Edge>& out) {
  const int parts = static_cast<int>(part_sizes.size());
  std::vector<std::vector<int>> pick(parts);
  auto rec = [&](auto&& self, int s) -> void {
    if (s == parts) {
      Edge e;
      e.colour = colour;
      for (const auto& block : pick) e.verts.insert(e.verts.end(), block.begin(), block.end());
      out.push_back(std::move(e));
      return;
    }
    const int take = type[s];
    const long long size = part_sizes[s];
    if (take == 0) {
      self(self, s + 1);
      return;
    }
    std::vector<int>& block = pick[s];
    block.assign(take, 0);
    for (int i = 0; i < take; ++i) block[i] = static_cast<int>(offsets[s]) + i;
    while (true) {
      self(self, s + 1);
      int i = take - 1;
      while (i >= 0 && block[i] == offsets[s] + size - take + i) --i;
      if (i < 0) break;
      ++block[i];
      for (int t = i + 1; t < take; ++t) block[t] = block[t - 1] + 1;
    }
    block.clear();
  };
  rec(rec, 0);
}

struct TypedColour {
  std::vector<int> type;
  int colour = 0;
};

// Shared core: materialize the union of complete typed layers over
// contiguous parts, skipping (with a note) any type some part cannot fill.
ColouredHypergraph build_typed(int k, int r, const std::vector<long long>& part_sizes,
                               const std::vector<TypedColour>& layers, std::ostream* warnings) {
  const long long n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0LL);
  std::vector<long long> offsets(part_sizes.size(), 0);
  for (size_t s = 1; s < part_sizes.size(); ++s) offsets[s] = offsets[s - 1] + part_sizes[s - 1];

  BigInt total = 0;
  std::vector<bool> realizable(layers.size(), true);
  for (size_t l = 0; l < layers.size(); ++l) {
    for (size_t s = 0; s < part_sizes.size(); ++s)
      if (layers[l].type[s] > part_sizes[s]) realizable[l] = false;
    if (realizable[l]) total += count_of_type(part_sizes, layers[l].type);
  }
  if (total > kEdgeMaterializationCap)
    throw BudgetExceededError("edge materialization cap exceeded (" + total.str() + " edges)");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(total));
  for (size_t l = 0; l < layers.size(); ++l) {
    if (!realizable[l]) {
      if (warnings) {
        *warnings << "note: colour " << layers[l].colour << " has no edges: type (";
        for (size_t s = 0; s < layers[l].type.size(); ++s)
          *warnings << (s ? "," : "") << layers[l].type[s];
        *warnings << ") does not fit the part sizes\n";
      }
      continue;
    }
    emit_type(part_sizes, offsets, layers[l].type, layers[l].colour, edges);
  }
  return make_hypergraph(static_cast<int>(n), k, r, std::move(edges));
}

}  // namespace

ExtremalSpec make_extremal_spec(int k, int r, const ValidPair& pair, long long n) {
  validate_pair(pair, k);
  if (pair.r() != r) throw std::invalid_argument("make_extremal_spec: pair has wrong colour count");
  if (n <= 0 || n % (static_cast<long long>(k) * r) != 0)
    throw std::invalid_argument("make_extremal_spec: n must be a positive multiple of k*r");
  ExtremalSpec spec;
  spec.k = k;
  spec.r = r;
  spec.pair = pair;
  spec.n = n;
  for (int i = 0; i < r; ++i) {
    long long size = (static_cast<long long>(r) * pair.j[i] + pair.sigma) * n / (r * k);
    if (size < 1) throw std::invalid_argument("make_extremal_spec: derived part size below 1");
    spec.part_sizes.push_back(size);
  }
  return spec;
}

std::vector<int> type_of_colour(const ValidPair& pair, int colour) {
  if (colour < 1 || colour > pair.r())
    throw std::invalid_argument("type_of_colour: colour out of range");
  std::vector<int> type(pair.j.begin(), pair.j.end());
  type[colour - 1] += pair.sigma;
  return type;
}

ColouredHypergraph build_family_member(int k, int r, const ValidPair& pair,
                                       const std::vector<long long>& part_sizes,
                                       std::ostream* warnings) {
  validate_pair(pair, k);
  if (pair.r() != r)
    throw std::invalid_argument("build_family_member: pair has wrong colour count");
  if (static_cast<int>(part_sizes.size()) != r)
    throw std::invalid_argument("build_family_member: need one part size per colour");
  for (long long s : part_sizes)
    if (s < 0) throw std::invalid_argument("build_family_member: negative part size");
  std::vector<TypedColour> layers;
  for (int i = 1; i <= r; ++i) layers.push_back({type_of_colour(pair, i), i});
  return build_typed(k, r, part_sizes, layers, warnings);
}

ColouredHypergraph build_extremal(const ExtremalSpec& spec, std::ostream* warnings) {
  return build_family_member(spec.k, spec.r, spec.pair, spec.part_sizes, warnings);
}

BigInt finite_colour_degree(const ExtremalSpec& spec, int part_i, int colour_ell) {
  if (part_i < 1 || part_i > spec.r)
    throw std::invalid_argument("finite_colour_degree: part out of range");
  std::vector<int> type = type_of_colour(spec.pair, colour_ell);
  if (type[part_i - 1] == 0) return 0;
  BigInt deg = binomial(spec.part_sizes[part_i - 1] - 1, type[part_i - 1] - 1);
  for (int s = 0; s < spec.r; ++s)
    if (s != part_i - 1) deg *= binomial(spec.part_sizes[s], type[s]);
  return deg;
}

MinDegreeResult min_degree(const ColouredHypergraph& h, int ell) {
  if (ell < 1 || ell >= h.k) throw std::invalid_argument("min_degree: need 1 <= ell < k");
  if (ell == 1) {
    if (h.n > 64) throw BudgetExceededError("min_degree: 1-degree scan capped at n <= 64");
    std::vector<long long> deg(h.n, 0);
    for (const auto& e : h.edges)
      for (int v : e.verts) ++deg[v];
    MinDegreeResult out;
    out.value = h.n ? deg[0] : 0;
    out.witness = {0};
    for (int v = 1; v < h.n; ++v)
      if (deg[v] < out.value) {
        out.value = deg[v];
        out.witness = {v};
      }
    return out;
  }
  if (h.n > 20) throw BudgetExceededError("min_degree: subset scan capped at n <= 20");
  const auto masks = edge_masks(h);
  MinDegreeResult out;
  bool first = true;
  std::vector<int> pick(ell);
  for (int i = 0; i < ell; ++i) pick[i] = i;
  while (true) {
    std::uint64_t sub = 0;
    for (int v : pick) sub |= std::uint64_t{1} << v;
    long long count = 0;
    for (std::uint64_t m : masks) count += (m & sub) == sub;
    if (first || count < out.value) {
      first = false;
      out.value = count;
      out.witness = pick;
    }
    int i = ell - 1;
    while (i >= 0 && pick[i] == h.n - ell + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int s = i + 1; s < ell; ++s) pick[s] = pick[s - 1] + 1;
  }
  return out;
}

ColouredHypergraph build_tight_cycle_counterexample(long long n, std::ostream* warnings) {
  if (n <= 0 || n % 8 != 0)
    throw std::invalid_argument("build_tight_cycle_counterexample: n must be a positive multiple of 8");
  const std::vector<long long> parts = {7 * n / 8, n / 8};
  const std::vector<TypedColour> layers = {
      {{4, 0}, 1}, {{1, 3}, 1}, {{0, 4}, 1}, {{3, 1}, 2}};
  return build_typed(4, 2, parts, layers, warnings);
}

}  // namespace biasmatch
