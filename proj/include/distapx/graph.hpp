#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace distapx {

using NodeId = std::int32_t;
using Weight = std::int64_t;

/// Shortest-path length. INF is a dedicated state of the type, never an
/// ordinary large value, and it absorbs addition.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::int64_t v) : v_(v) {}

  static constexpr Distance inf() {
    Distance d;
    d.v_ = kInfRep;
    return d;
  }

  constexpr bool is_inf() const { return v_ == kInfRep; }
  constexpr bool is_finite() const { return v_ != kInfRep; }
  constexpr std::int64_t value() const { return v_; }

  constexpr Distance operator+(std::int64_t w) const {
    return is_inf() ? inf() : Distance(v_ + w);
  }
  constexpr Distance operator+(Distance o) const {
    return (is_inf() || o.is_inf()) ? inf() : Distance(v_ + o.v_);
  }

  constexpr auto operator<=>(const Distance&) const = default;

  std::string str() const;

 private:
  static constexpr std::int64_t kInfRep = std::numeric_limits<std::int64_t>::max();
  std::int64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Distance d);

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight w = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId to = 0;
  Weight w = 1;
};

// A communication link. CONGEST traffic is bidirectional over every arc, so a
// directed graph exposes one link per neighbour with the weight of each arc
// direction (0 when that direction is absent).
struct Link {
  NodeId peer = 0;
  Weight out_weight = 0;
  Weight in_weight = 0;
};

struct GraphKind {
  bool directed = false;
  bool weighted = false;
};

/// Immutable weighted/unweighted, directed/undirected graph over ids 0..n-1.
///
/// Undirected edges are given once and stored as two symmetric arcs. Both out-
/// and in-adjacency are kept so inward searches need no transposed copy.
/// Construction rejects self-loops, duplicate arcs, out-of-range ids and
/// non-positive weights; an unweighted graph must carry weight 1 everywhere.
class Graph {
 public:
  Graph() = default;
  Graph(NodeId n, GraphKind kind, std::span<const Edge> edges);

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t arc_count() const { return out_targets_.size(); }
  bool directed() const { return kind_.directed; }
  bool weighted() const { return kind_.weighted; }
  GraphKind kind() const { return kind_; }
  Weight max_weight() const { return max_weight_; }

  /// Edges as supplied (undirected edges once each).
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Arc> out(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Arc> in(NodeId v) const {
    return {in_targets_.data() + in_offsets_[v], in_targets_.data() + in_offsets_[v + 1]};
  }
  std::span<const Link> links(NodeId v) const {
    return {links_.data() + link_offsets_[v], links_.data() + link_offsets_[v + 1]};
  }

  bool has_arc(NodeId u, NodeId v) const;
  bool valid(NodeId v) const { return v >= 0 && v < n_; }

 private:
  NodeId n_ = 0;
  GraphKind kind_;
  Weight max_weight_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0}, in_offsets_{0}, link_offsets_{0};
  std::vector<Arc> out_targets_, in_targets_;
  std::vector<Link> links_;
};

enum class Direction { outward, inward };

struct DistanceVector {
  NodeId source = 0;
  std::vector<Distance> dist;
};

/// Two node subsets for the ST distance parameters.
struct STPartition {
  std::vector<NodeId> s_set;
  std::vector<NodeId> t_set;

  /// Throws std::invalid_argument unless both sets are non-empty, disjoint and
  /// in range; `bichromatic` additionally requires that they cover every node.
  void validate(NodeId n, bool bichromatic = false) const;

  /// S = nodes flagged true, T = the rest.
  static STPartition from_colors(const std::vector<bool>& in_s);
};

// Text format: "n m directed weighted" header, then m lines "u v [w]".
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace distapx
