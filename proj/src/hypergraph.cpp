#include "biasmatch/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace biasmatch {

std::vector<Edge> ColouredHypergraph::edges_of_colour(int colour) const {
  if (colour < (r == 0 ? 0 : 1) || colour > r)
    throw std::invalid_argument("edges_of_colour: colour out of range");
  std::vector<Edge> out;
  for (const auto& e : edges)
    if (e.colour == colour) out.push_back(e);
  return out;
}

long long ColouredHypergraph::count_colour(int colour) const {
  if (colour < (r == 0 ? 0 : 1) || colour > r)
    throw std::invalid_argument("count_colour: colour out of range");
  long long c = 0;
  for (const auto& e : edges) c += e.colour == colour;
  return c;
}

ColouredHypergraph make_hypergraph(int n, int k, int r, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("make_hypergraph: n must be >= 0");
  if (k < 1) throw std::invalid_argument("make_hypergraph: k must be >= 1");
  if (r < 0) throw std::invalid_argument("make_hypergraph: r must be >= 0");
  for (auto& e : edges) {
    if (static_cast<int>(e.verts.size()) != k)
      throw std::invalid_argument("make_hypergraph: edge arity differs from k");
    std::sort(e.verts.begin(), e.verts.end());
    for (size_t i = 0; i < e.verts.size(); ++i) {
      if (e.verts[i] < 0 || e.verts[i] >= n)
        throw std::invalid_argument("make_hypergraph: vertex out of range");
      if (i > 0 && e.verts[i] == e.verts[i - 1])
        throw std::invalid_argument("make_hypergraph: repeated vertex in an edge");
    }
    if (r == 0) {
      if (e.colour != 0)
        throw std::invalid_argument("make_hypergraph: uncoloured graph needs colour 0");
    } else if (e.colour < 1 || e.colour > r) {
      throw std::invalid_argument("make_hypergraph: colour out of range");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.colour != b.colour) return a.colour < b.colour;
    return a.verts < b.verts;
  });
  std::map<std::vector<int>, int> seen;
  for (const auto& e : edges) {
    auto [it, fresh] = seen.emplace(e.verts, e.colour);
    if (!fresh) {
      if (it->second != e.colour)
        throw std::invalid_argument("make_hypergraph: one vertex set carries two colours");
      throw std::invalid_argument("make_hypergraph: duplicate edge");
    }
  }
  return ColouredHypergraph{n, k, r, std::move(edges)};
}

ColouredHypergraph complete_hypergraph(int n, int k, int r, int colour) {
  if (r < 1 || colour < 1 || colour > r)
    throw std::invalid_argument("complete_hypergraph: need 1 <= colour <= r");
  if (k < 1 || k > n) throw std::invalid_argument("complete_hypergraph: need 1 <= k <= n");
  std::vector<Edge> edges;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    edges.push_back(Edge{pick, colour});
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int s = i + 1; s < k; ++s) pick[s] = pick[s - 1] + 1;
  }
  return make_hypergraph(n, k, r, std::move(edges));
}

std::string to_text(const ColouredHypergraph& h) {
  std::ostringstream out;
  out << h.k << " " << h.r << " " << h.n << "\n";
  for (const auto& e : h.edges) {
    out << e.colour;
    for (int v : e.verts) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string to_json_text(const ColouredHypergraph& h) {
  nlohmann::ordered_json j;
  j["k"] = h.k;
  j["r"] = h.r;
  j["n"] = h.n;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : h.edges) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    row.push_back(e.colour);
    for (int v : e.verts) row.push_back(v);
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

ColouredHypergraph parse_text(const std::string& body) {
  std::istringstream in(body);
  int k = 0, r = 0, n = 0;
  if (!(in >> k >> r >> n)) throw std::invalid_argument("parse_text: bad header");
  std::vector<Edge> edges;
  std::string line;
  std::getline(in, line);  // rest of the header line
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Edge e;
    if (!(ls >> e.colour)) continue;  // blank line
    int v;
    while (ls >> v) e.verts.push_back(v);
    std::string tail;
    if (ls.clear(), ls >> tail) throw std::invalid_argument("parse_text: trailing tokens");
    edges.push_back(std::move(e));
  }
  return make_hypergraph(n, k, r, std::move(edges));
}

ColouredHypergraph parse_json_text(const std::string& body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("parse_json_text: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("r") || !j.contains("n") ||
      !j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("parse_json_text: need object with k, r, n, edges");
  std::vector<Edge> edges;
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.empty())
      throw std::invalid_argument("parse_json_text: edge rows are [colour, v1, ..., vk]");
    Edge e;
    e.colour = row[0].get<int>();
    for (size_t i = 1; i < row.size(); ++i) e.verts.push_back(row[i].get<int>());
    edges.push_back(std::move(e));
  }
  return make_hypergraph(j["n"].get<int>(), j["k"].get<int>(), j["r"].get<int>(),
                         std::move(edges));
}

ColouredHypergraph parse_any(const std::string& body) {
  for (char c : body) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_json_text(body) : parse_text(body);
  }
  throw std::invalid_argument("parse_any: empty input");
}

std::string instance_digest(const ColouredHypergraph& h) {
  const std::string text = to_text(h);
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::vector<std::uint64_t> edge_masks(const ColouredHypergraph& h) {
  if (h.n > 64) throw std::invalid_argument("edge_masks: needs n <= 64");
  std::vector<std::uint64_t> masks;
  masks.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    std::uint64_t m = 0;
    for (int v : e.verts) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

ColouredHypergraph induced_subgraph(const ColouredHypergraph& h, const std::vector<int>& verts) {
  std::vector<int> relabel(h.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    if (v < 0 || v >= h.n) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (i > 0 && verts[i] <= verts[i - 1])
      throw std::invalid_argument("induced_subgraph: vertices must be ascending");
    relabel[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : h.edges) {
    Edge sub;
    sub.colour = e.colour;
    bool inside = true;
    for (int v : e.verts) {
      if (relabel[v] < 0) {
        inside = false;
        break;
      }
      sub.verts.push_back(relabel[v]);
    }
    if (inside) edges.push_back(std::move(sub));
  }
  return make_hypergraph(static_cast<int>(verts.size()), h.k, h.r, std::move(edges));
}

}  // namespace biasmatch
