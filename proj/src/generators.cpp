#include "distapx/generators.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "distapx/oracle.hpp"

namespace distapx {

namespace {

Weight draw_weight(Rng& rng, WeightRange w) { return w.lo == w.hi ? w.lo : rng.range(w.lo, w.hi); }

bool reaches_all(const Graph& g, Direction dir) {
  auto d = sssp_exact(g, 0, dir).dist;
  return std::none_of(d.begin(), d.end(), [](Distance x) { return x.is_inf(); });
}

}  // namespace

bool is_connected(const Graph& g) {
  auto d = hop_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](Distance x) { return x.is_inf(); });
}

bool is_strongly_connected(const Graph& g) {
  if (!g.directed()) return is_connected(g);
  return reaches_all(g, Direction::outward) && reaches_all(g, Direction::inward);
}

Graph gnp(NodeId n, double p, Rng& rng, bool directed, WeightRange w, int max_retries,
          GenStats* stats) {
  if (n < 1) throw std::invalid_argument("gnp: n must be >= 1");
  if (w.lo < 1 || w.hi < w.lo) throw std::invalid_argument("gnp: bad weight range");
  const bool weighted = !(w.lo == 1 && w.hi == 1);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
        if (u == v) continue;
        if (rng.coin(p)) edges.push_back({u, v, 1});
      }
    }
    for (Edge& e : edges) e.w = draw_weight(rng, w);
    Graph g(n, {directed, weighted}, edges);
    if (is_strongly_connected(g)) {
      if (stats) stats->retries = attempt;
      return g;
    }
  }
  throw std::runtime_error("gnp: no connected draw after " + std::to_string(max_retries) +
                           " retries (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

Graph random_tree(NodeId n, Rng& rng, WeightRange w) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  const bool weighted = !(w.lo == 1 && w.hi == 1);
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1, draw_weight(rng, w)});
  if (n > 2) {
    std::vector<NodeId> prufer(n - 2);
    for (auto& x : prufer) x = static_cast<NodeId>(rng.range(0, n - 1));
    std::vector<int> degree(n, 1);
    for (NodeId x : prufer) ++degree[x];
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
    for (NodeId v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (NodeId x : prufer) {
      NodeId leaf = leaves.top();
      leaves.pop();
      edges.push_back({leaf, x, 1});
      if (--degree[x] == 1) leaves.push(x);
    }
    NodeId a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top(), 1});
    for (Edge& e : edges) e.w = draw_weight(rng, w);
  }
  return Graph(n, {false, weighted}, edges);
}

Graph path_graph(NodeId n, bool directed) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return Graph(n, {directed, false}, edges);
}

Graph clique(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return Graph(n, {false, false}, edges);
}

Graph star(NodeId leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  return Graph(leaves + 1, {false, false}, edges);
}

STPartition random_bipartition(NodeId n, Rng& rng, double p_s) {
  if (n < 2) throw std::invalid_argument("bipartition needs n >= 2");
  for (;;) {
    std::vector<bool> in_s(n);
    for (NodeId v = 0; v < n; ++v) in_s[v] = rng.coin(p_s);
    auto p = STPartition::from_colors(in_s);
    if (!p.s_set.empty() && !p.t_set.empty()) return p;
  }
}

}  // namespace distapx
