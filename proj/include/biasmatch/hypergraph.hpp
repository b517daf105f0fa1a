#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace biasmatch {

// One k-edge: vertex list sorted ascending plus a colour in [1..r]
// (colour 0 on uncoloured graphs).
struct Edge {
  std::vector<int> verts;
  int colour = 0;
  bool operator==(const Edge&) const = default;
};

// k-uniform hypergraph on vertices 0..n-1 whose edges each carry a colour.
// r == 0 marks an uncoloured graph (every edge colour 0). Canonical form:
// each edge's vertices ascending, edges sorted by (colour, verts), and no
// vertex set present twice (a colouring is a function on k-sets).
struct ColouredHypergraph {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<Edge> edges;

  // Edges of one colour (1-based). Throws std::invalid_argument off range.
  std::vector<Edge> edges_of_colour(int colour) const;
  long long count_colour(int colour) const;
};

// Validates and canonicalizes. Throws std::invalid_argument on any invariant
// violation (vertex range, duplicate vertices in an edge, wrong arity,
// colour out of range, one k-set with two colours).
ColouredHypergraph make_hypergraph(int n, int k, int r, std::vector<Edge> edges);

// All C(n,k) edges in one colour. r >= 1; colour in [1..r].
ColouredHypergraph complete_hypergraph(int n, int k, int r = 1, int colour = 1);

// ----- interchange format -----
// Text: header "k r n", then one line per edge, "c v1 v2 ... vk" with the
// colour first and vertices ascending; lines in canonical (colour, verts)
// order. JSON: {"k":..,"r":..,"n":..,"edges":[[c,v1,...,vk],...]}.
std::string to_text(const ColouredHypergraph& h);
std::string to_json_text(const ColouredHypergraph& h);
ColouredHypergraph parse_text(const std::string& body);
ColouredHypergraph parse_json_text(const std::string& body);
// Sniffs JSON (first non-space '{') vs line format.
ColouredHypergraph parse_any(const std::string& body);

// FNV-1a 64-bit over the canonical text form, as 16 hex digits. Identifies
// instances inside reports; not cryptographic.
std::string instance_digest(const ColouredHypergraph& h);

// Bitmask per edge (bit v set iff vertex v in the edge). Requires n <= 64.
std::vector<std::uint64_t> edge_masks(const ColouredHypergraph& h);

// Subgraph induced by `verts` (sorted ascending required), relabelled to
// 0..|verts|-1 preserving order. Keeps k and r.
ColouredHypergraph induced_subgraph(const ColouredHypergraph& h, const std::vector<int>& verts);

}  // namespace biasmatch
