// Independent reference implementations for tests: they share no code with
// the library beyond the Graph container and the Rng.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "distapx/graph.hpp"
#include "distapx/random.hpp"

namespace ref {

using distapx::Distance;
using distapx::Edge;
using distapx::Graph;
using distapx::NodeId;

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

inline Distance to_distance(std::int64_t x) { return x >= kInf ? Distance::inf() : Distance(x); }

/// Floyd-Warshall over the supplied edge list.
inline std::vector<std::vector<std::int64_t>> floyd(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kInf));
  for (NodeId v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    if (!g.directed()) d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (NodeId k = 0; k < n; ++k)
    for (NodeId i = 0; i < n; ++i) {
      if (d[i][k] >= kInf) continue;
      for (NodeId j = 0; j < n; ++j)
        if (d[k][j] < kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  return d;
}

/// Hop distances over the underlying undirected communication graph.
inline std::vector<std::vector<std::int64_t>> hops(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, kInf));
  for (NodeId s = 0; s < n; ++s) {
    std::vector<NodeId> queue = {s};
    d[s][s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const NodeId u = queue[i];
      for (NodeId v : adj[u])
        if (d[s][v] == kInf) {
          d[s][v] = d[s][u] + 1;
          queue.push_back(v);
        }
    }
  }
  return d;
}

inline std::vector<std::int64_t> eccentricities(const std::vector<std::vector<std::int64_t>>& d) {
  std::vector<std::int64_t> e;
  for (const auto& row : d) e.push_back(*std::max_element(row.begin(), row.end()));
  return e;
}

inline std::int64_t max_of(const std::vector<std::int64_t>& v) { return *std::max_element(v.begin(), v.end()); }
inline std::int64_t min_of(const std::vector<std::int64_t>& v) { return *std::min_element(v.begin(), v.end()); }

inline std::int64_t st_diameter(const std::vector<std::vector<std::int64_t>>& d, const std::vector<NodeId>& s,
                                const std::vector<NodeId>& t) {
  std::int64_t best = 0;
  for (NodeId a : s)
    for (NodeId b : t) best = std::max(best, d[a][b]);
  return best;
}

inline std::int64_t st_radius(const std::vector<std::vector<std::int64_t>>& d, const std::vector<NodeId>& s,
                              const std::vector<NodeId>& t) {
  std::int64_t best = kInf;
  for (NodeId a : s) {
    std::int64_t e = 0;
    for (NodeId b : t) e = std::max(e, d[a][b]);
    best = std::min(best, e);
  }
  return best;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

/// H spans all n nodes and is connected.
inline bool spanning_connected(int n, const std::vector<Edge>& h) {
  UnionFind uf(n);
  int parts = n;
  for (const Edge& e : h) parts -= uf.unite(e.u, e.v);
  return parts == 1;
}

using Bits = std::vector<std::vector<std::uint8_t>>;

inline bool dot_zero(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

inline bool ov(const Bits& a, const Bits& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (dot_zero(x, y)) return true;
  return false;
}

inline bool hse(const Bits& a, const Bits& b) {
  return std::any_of(a.begin(), a.end(), [&](const auto& x) {
    return std::none_of(b.begin(), b.end(), [&](const auto& y) { return dot_zero(x, y); });
  });
}

inline bool tribes(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (dot_zero(a[i], b[i])) return true;
  return false;
}

/// X and Y as bit vectors: 1 iff no common element.
inline bool disjoint(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) { return dot_zero(x, y); }

/// Arbitrary (possibly disconnected) random graph of the given kind.
inline Graph random_graph(NodeId n, double p, bool directed, bool weighted, distapx::Rng& rng, std::int64_t w_hi = 20) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || !rng.coin(p)) continue;
      edges.push_back({u, v, weighted ? rng.range(1, w_hi) : 1});
    }
  return Graph(n, {directed, weighted}, edges);
}

}  // namespace ref
