#include "distapx/graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace distapx {

std::string Distance::str() const { return is_inf() ? "INF" : std::to_string(v_); }

std::ostream& operator<<(std::ostream& os, Distance d) { return os << d.str(); }

namespace {

void build_csr(NodeId n, const std::vector<std::pair<NodeId, Arc>>& arcs,
               std::vector<std::size_t>& offsets, std::vector<Arc>& targets) {
  offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [from, arc] : arcs) ++offsets[from + 1];
  for (NodeId v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  targets.resize(arcs.size());
  auto cursor = offsets;
  for (const auto& [from, arc] : arcs) targets[cursor[from]++] = arc;
  for (NodeId v = 0; v < n; ++v) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

}  // namespace

Graph::Graph(NodeId n, GraphKind kind, std::span<const Edge> edges)
    : n_(n), kind_(kind), edges_(edges.begin(), edges.end()) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one node");

  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<std::pair<NodeId, Arc>> out_arcs, in_arcs;
  out_arcs.reserve(edges.size() * (kind.directed ? 1 : 2));
  in_arcs.reserve(out_arcs.capacity());

  for (const Edge& e : edges) {
    if (!valid(e.u) || !valid(e.v)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an out-of-range endpoint");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    if (e.w < 1) throw std::invalid_argument("edge weights must be >= 1");
    if (!kind.weighted && e.w != 1) {
      throw std::invalid_argument("unweighted graph carries a weight other than 1");
    }
    std::pair<NodeId, NodeId> key = kind.directed ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate arc (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    max_weight_ = std::max(max_weight_, e.w);
    out_arcs.push_back({e.u, Arc{e.v, e.w}});
    in_arcs.push_back({e.v, Arc{e.u, e.w}});
    if (!kind.directed) {
      out_arcs.push_back({e.v, Arc{e.u, e.w}});
      in_arcs.push_back({e.u, Arc{e.v, e.w}});
    }
  }
  build_csr(n, out_arcs, out_offsets_, out_targets_);
  build_csr(n, in_arcs, in_offsets_, in_targets_);

  link_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    std::map<NodeId, Link> merged;
    for (const Arc& a : out(v)) {
      auto& l = merged[a.to];
      l.peer = a.to;
      l.out_weight = a.w;
    }
    for (const Arc& a : in(v)) {
      auto& l = merged[a.to];
      l.peer = a.to;
      l.in_weight = a.w;
    }
    for (const auto& [peer, link] : merged) links_.push_back(link);
    link_offsets_[v + 1] = links_.size();
  }
}

bool Graph::has_arc(NodeId u, NodeId v) const {
  auto arcs = out(u);
  return std::binary_search(arcs.begin(), arcs.end(), Arc{v, 0},
                            [](const Arc& a, const Arc& b) { return a.to < b.to; });
}

void STPartition::validate(NodeId n, bool bichromatic) const {
  if (s_set.empty() || t_set.empty()) throw std::invalid_argument("S and T must be non-empty");
  std::vector<int> owner(static_cast<std::size_t>(n), 0);
  auto mark = [&](const std::vector<NodeId>& set, int tag) {
    for (NodeId v : set) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition node out of range");
      if (owner[v] != 0) throw std::invalid_argument("S and T overlap or repeat a node");
      owner[v] = tag;
    }
  };
  mark(s_set, 1);
  mark(t_set, 2);
  if (bichromatic && std::find(owner.begin(), owner.end(), 0) != owner.end()) {
    throw std::invalid_argument("bi-chromatic partition must cover every node");
  }
}

STPartition STPartition::from_colors(const std::vector<bool>& in_s) {
  STPartition p;
  for (NodeId v = 0; v < static_cast<NodeId>(in_s.size()); ++v) {
    (in_s[v] ? p.s_set : p.t_set).push_back(v);
  }
  return p;
}

}  // namespace distapx
