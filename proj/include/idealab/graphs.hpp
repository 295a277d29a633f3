#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <istream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealab/linalg.hpp"
#include "idealab/monomial.hpp"
#include "idealab/simplicial.hpp"

namespace idealab {

// Simple graph on vertices {0, ..., n-1}: no loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("loops are not allowed");
      if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  int vertexCount() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edgeCount() const { return edges_.size(); }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
    for (auto [u, v] : edges_) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

struct ComponentData {
  std::vector<int> vertices;
  bool bipartite = true;
  std::optional<long> girth;  // nullopt = no cycle (infinite girth)
};

struct ComponentInfo {
  std::vector<ComponentData> components;
  int componentCount() const { return static_cast<int>(components.size()); }
  int bipartiteCount() const {
    int p = 0;
    for (const auto& c : components) p += c.bipartite ? 1 : 0;
    return p;
  }
  bool isBipartite() const { return bipartiteCount() == componentCount(); }
  bool isConnected() const { return componentCount() == 1; }
  // Maximum girth over components; nullopt when some component is acyclic.
  std::optional<long> maxGirth() const {
    long g = 0;
    for (const auto& c : components) {
      if (!c.girth) return std::nullopt;
      g = std::max(g, *c.girth);
    }
    return components.empty() ? std::optional<long>() : std::optional<long>(g);
  }
};

// Components by breadth-first search, bipartiteness by 2-coloring, girth by
// shortest-cycle detection from every start vertex.
inline ComponentInfo analyze(const Graph& g) {
  const int n = g.vertexCount();
  auto adj = g.adjacency();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  ComponentInfo info;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    int id = static_cast<int>(info.components.size());
    info.components.push_back({});
    ComponentData& c = info.components.back();
    std::deque<int> queue{s};
    comp[static_cast<std::size_t>(s)] = id;
    color[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      c.vertices.push_back(u);
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (comp[static_cast<std::size_t>(v)] == -1) {
          comp[static_cast<std::size_t>(v)] = id;
          color[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(u)] ^ 1;
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
          c.bipartite = false;
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
  }
  // Girth: BFS from every vertex; the first non-tree edge met at the search
  // frontier closes a shortest cycle through the start vertex.
  std::vector<std::optional<long>> compGirth(info.components.size());
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] == -1) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (v != parent[static_cast<std::size_t>(u)]) {
          long cycle = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          auto& gg = compGirth[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])];
          if (!gg || cycle < *gg) gg = cycle;
        }
      }
    }
  }
  for (std::size_t i = 0; i < info.components.size(); ++i) info.components[i].girth = compGirth[i];
  return info;
}

// Squarefree quadratic ideal with one generator x_u x_v per edge.
inline MonomialIdeal edgeIdeal(const Graph& g) {
  std::vector<ExponentVector> gens;
  gens.reserve(g.edgeCount());
  for (auto [u, v] : g.edges()) {
    ExponentVector e(g.vertexCount());
    e[u] = 1;
    e[v] = 1;
    gens.push_back(std::move(e));
  }
  return minimalize(g.vertexCount(), std::move(gens));
}

// l(I(G)) = n - p, p the number of bipartite connected components.
inline long analyticSpreadEdgeIdeal(const Graph& g) {
  if (g.edgeCount() == 0)
    throw std::invalid_argument("analytic spread of an edgeless graph's (zero) edge ideal is undefined");
  return g.vertexCount() - analyze(g).bipartiteCount();
}

// For an ideal generated in a single degree, the fiber ring is the semigroup
// ring on the exponent vectors, so its dimension is the rank of the exponent
// matrix over the rationals.
inline long analyticSpreadEquigenerated(const MonomialIdeal& I) {
  if (!I.isEquigenerated())
    throw std::invalid_argument("analytic spread unsupported for non-equigenerated ideals");
  std::vector<std::vector<Int>> m;
  m.reserve(I.mu());
  for (const auto& g : I.generators()) {
    std::vector<Int> row;
    row.reserve(static_cast<std::size_t>(I.arity()));
    for (int i = 0; i < I.arity(); ++i) row.push_back(g[i]);
    m.push_back(std::move(row));
  }
  return rankOverField(m, Field::rationals());
}

struct VertexDeletion {
  Graph graph;
  std::vector<int> newToOld;
};

inline VertexDeletion deleteVertex(const Graph& g, int v) {
  const int n = g.vertexCount();
  if (v < 0 || v >= n) throw std::invalid_argument("deleteVertex: vertex out of range");
  std::vector<int> newToOld;
  std::vector<int> oldToNew(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    if (i != v) {
      oldToNew[static_cast<std::size_t>(i)] = static_cast<int>(newToOld.size());
      newToOld.push_back(i);
    }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (a != v && b != v)
      edges.emplace_back(oldToNew[static_cast<std::size_t>(a)], oldToNew[static_cast<std::size_t>(b)]);
  return VertexDeletion{Graph(n - 1, std::move(edges)), std::move(newToOld)};
}

// Facets are the maximal independent sets.
inline SimplicialComplex independenceComplex(const Graph& g) {
  const int n = g.vertexCount();
  if (n > 24) throw std::invalid_argument("independence complex limited to 24 vertices");
  std::vector<std::uint64_t> edgeMasks;
  for (auto [u, v] : g.edges())
    edgeMasks.push_back((std::uint64_t(1) << u) | (std::uint64_t(1) << v));
  std::vector<std::uint64_t> faces;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    bool ok = true;
    for (auto e : edgeMasks)
      if ((s & e) == e) {
        ok = false;
        break;
      }
    if (ok) faces.push_back(s);
  }
  return SimplicialComplex::fromFaces(n, faces);
}

enum class GraphClass { All, Connected, Bipartite, ConnectedBipartite, NonBipartite };

inline bool matchesClass(const ComponentInfo& info, GraphClass cls) {
  switch (cls) {
    case GraphClass::All: return true;
    case GraphClass::Connected: return info.isConnected();
    case GraphClass::Bipartite: return info.isBipartite();
    case GraphClass::ConnectedBipartite: return info.isConnected() && info.isBipartite();
    case GraphClass::NonBipartite: return !info.isBipartite();
  }
  return false;
}

// All labeled graphs on n vertices, edge sets in increasing bitmask order.
// Deterministic; the id of a graph is its edge mask.
inline void forEachGraph(int n, GraphClass cls, const std::function<void(const Graph&, std::uint64_t)>& fn,
                         int cap = 7) {
  if (n < 1 || n > cap)
    throw std::invalid_argument("graph enumeration limited to " + std::to_string(cap) + " vertices");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t(1) << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((mask >> b) & 1u) edges.push_back(slots[b]);
    Graph g(n, std::move(edges));
    if (matchesClass(analyze(g), cls)) fn(g, mask);
  }
}

inline std::vector<Graph> enumerateGraphs(int n, GraphClass cls, int cap = 7) {
  std::vector<Graph> out;
  forEachGraph(n, cls, [&](const Graph& g, std::uint64_t) { out.push_back(g); }, cap);
  return out;
}

// Seeded samplers for sizes beyond the exhaustive cap.
inline Graph randomGraph(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1u) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph randomConnectedBipartite(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::uint64_t side = rng() & ((std::uint64_t(1) << n) - 1);
    if (side == 0 || side + 1 == (std::uint64_t(1) << n)) continue;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool crossPair = ((side >> u) & 1u) != ((side >> v) & 1u);
        if (crossPair && (rng() & 1u)) edges.emplace_back(u, v);
      }
    Graph g(n, std::move(edges));
    auto info = analyze(g);
    if (info.isConnected() && g.edgeCount() > 0) return g;
  }
  throw std::runtime_error("failed to sample a connected bipartite graph");
}

// Graph text format: first line `n <count>`, then one `u v` pair per line,
// vertices 1-based. Named built-ins: Cn, Pn, Kn, Ka,b.
inline Graph parseGraph(std::istream& in) {
  std::string tok;
  if (!(in >> tok) || tok != "n") throw std::runtime_error("graph parse error: expected 'n <count>'");
  int n = 0;
  if (!(in >> n) || n < 1) throw std::runtime_error("graph parse error: bad vertex count");
  std::vector<long> endpoints;
  std::string word;
  while (in >> word) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != word.size())
      throw std::runtime_error("graph parse error: unexpected token '" + word + "'");
    if (value < 1 || value > n) throw std::runtime_error("graph parse error: vertex out of range");
    endpoints.push_back(value);
  }
  if (endpoints.size() % 2 != 0)
    throw std::runtime_error("graph parse error: dangling edge endpoint");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 1 < endpoints.size(); i += 2)
    edges.emplace_back(static_cast<int>(endpoints[i] - 1), static_cast<int>(endpoints[i + 1] - 1));
  return Graph(n, std::move(edges));
}

inline std::string formatGraph(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertexCount() << "\n";
  for (auto [u, v] : g.edges()) os << (u + 1) << " " << (v + 1) << "\n";
  return os.str();
}

inline Graph builtinGraph(const std::string& name) {
  auto parseInt = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("bad builtin graph name '" + name + "'");
    return std::stoi(s);
  };
  if (name.size() < 2) throw std::invalid_argument("bad builtin graph name '" + name + "'");
  char kind = name[0];
  std::string rest = name.substr(1);
  if (kind == 'C' || kind == 'c') {
    int n = parseInt(rest);
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
  }
  if (kind == 'P' || kind == 'p') {
    int n = parseInt(rest);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
  }
  if (kind == 'K' || kind == 'k') {
    auto comma = rest.find(',');
    if (comma == std::string::npos) {
      int n = parseInt(rest);
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return Graph(n, std::move(edges));
    }
    int a = parseInt(rest.substr(0, comma));
    int b = parseInt(rest.substr(comma + 1));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
  }
  throw std::invalid_argument("unknown builtin graph '" + name + "'");
}

}  // namespace idealab
