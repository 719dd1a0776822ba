#include "distapx/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace distapx {

namespace {

std::vector<Distance> dijkstra(const Graph& g, NodeId source, Direction dir) {
  std::vector<Distance> dist(g.node_count(), Distance::inf());
  using Item = std::pair<std::int64_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = Distance(0);
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u].value()) continue;
    for (const Arc& a : dir == Direction::outward ? g.out(u) : g.in(u)) {
      Distance cand(d + a.w);
      if (cand < dist[a.to]) {
        dist[a.to] = cand;
        pq.push({cand.value(), a.to});
      }
    }
  }
  return dist;
}

std::vector<Distance> bfs(const Graph& g, NodeId source, Direction dir) {
  std::vector<Distance> dist(g.node_count(), Distance::inf());
  std::deque<NodeId> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (const Arc& a : dir == Direction::outward ? g.out(u) : g.in(u)) {
      if (dist[a.to].is_inf()) {
        dist[a.to] = dist[u] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return dist;
}

Distance max_of(const std::vector<Distance>& xs) {
  Distance best(0);
  for (Distance x : xs) best = std::max(best, x);
  return best;
}

}  // namespace

DistanceVector sssp_exact(const Graph& g, NodeId source, Direction dir) {
  if (!g.valid(source)) {
    throw std::invalid_argument("sssp source " + std::to_string(source) + " out of range");
  }
  return {source, g.weighted() ? dijkstra(g, source, dir) : bfs(g, source, dir)};
}

std::vector<Distance> hop_distances(const Graph& g, NodeId source) {
  if (!g.valid(source)) throw std::invalid_argument("hop source out of range");
  std::vector<Distance> dist(g.node_count(), Distance::inf());
  std::deque<NodeId> queue{source};
  dist[source] = Distance(0);
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (const Link& l : g.links(u)) {
      if (dist[l.peer].is_inf()) {
        dist[l.peer] = dist[u] + 1;
        queue.push_back(l.peer);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Distance>> all_pairs(const Graph& g, Execution exec) {
  const NodeId n = g.node_count();
  std::vector<std::vector<Distance>> rows(n);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (NodeId u = 0; u < n; ++u) rows[u] = sssp_exact(g, u).dist;
  } else {
    for (NodeId u = 0; u < n; ++u) rows[u] = sssp_exact(g, u).dist;
  }
  return rows;
}

std::vector<Distance> all_eccentricities(const Graph& g, Execution exec) {
  const NodeId n = g.node_count();
  std::vector<Distance> ecc(n);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (NodeId u = 0; u < n; ++u) ecc[u] = max_of(sssp_exact(g, u).dist);
  } else {
    for (NodeId u = 0; u < n; ++u) ecc[u] = max_of(sssp_exact(g, u).dist);
  }
  return ecc;
}

Distance diameter(const Graph& g) {
  auto ecc = all_eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

Distance radius(const Graph& g) {
  auto ecc = all_eccentricities(g);
  return *std::min_element(ecc.begin(), ecc.end());
}

std::vector<Distance> st_eccentricities(const Graph& g, const STPartition& p) {
  p.validate(g.node_count());
  std::vector<Distance> out;
  out.reserve(p.s_set.size());
  for (NodeId s : p.s_set) {
    auto dist = sssp_exact(g, s).dist;
    Distance best(0);
    for (NodeId t : p.t_set) best = std::max(best, dist[t]);
    out.push_back(best);
  }
  return out;
}

Distance st_diameter(const Graph& g, const STPartition& p) {
  auto ecc = st_eccentricities(g, p);
  return *std::max_element(ecc.begin(), ecc.end());
}

Distance st_radius(const Graph& g, const STPartition& p) {
  auto ecc = st_eccentricities(g, p);
  return *std::min_element(ecc.begin(), ecc.end());
}

Distance hop_diameter(const Graph& g) {
  Distance best(0);
  for (NodeId u = 0; u < g.node_count(); ++u) best = std::max(best, max_of(hop_distances(g, u)));
  return best;
}

}  // namespace distapx
