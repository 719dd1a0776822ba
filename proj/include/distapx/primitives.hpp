#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "distapx/graph.hpp"
#include "distapx/sim.hpp"

namespace distapx {

// ---- phase bookkeeping ------------------------------------------------------

struct PhaseRecord {
  std::string name;
  std::int64_t rounds = 0;
  std::int64_t messages = 0;
  std::size_t max_words = 0;
  std::size_t violations = 0;
  bool charged = false;  // modeled cost, no messages exchanged
};

/// Sums rounds over the engine runs that make up one algorithm. Every phase
/// gets its own seed stream so reruns replay exactly.
class Accounting {
 public:
  explicit Accounting(EngineConfig base = {}) : base_(base) {}

  const EngineConfig& base() const { return base_; }
  EngineConfig next_config() const;

  void record(std::string name, const RunReport& r);
  void charge(std::string name, std::int64_t rounds);

  std::int64_t total_rounds() const { return measured_ + charged_; }
  std::int64_t measured_rounds() const { return measured_; }
  std::int64_t charged_rounds() const { return charged_; }
  std::int64_t messages() const { return messages_; }
  std::size_t max_words() const { return max_words_; }
  std::size_t violations() const { return violations_; }
  const std::vector<PhaseRecord>& phases() const { return phases_; }

  nlohmann::json to_json() const;

 private:
  EngineConfig base_;
  std::vector<PhaseRecord> phases_;
  std::int64_t measured_ = 0, charged_ = 0, messages_ = 0;
  std::size_t max_words_ = 0, violations_ = 0;
};

class AggregationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- trees and BFS ----------------------------------------------------------

/// One node's view of a rooted tree; link indices refer to g.links(v).
struct TreeView {
  Distance depth = Distance::inf();
  NodeId parent = -1;
  int parent_link = -1;
  std::vector<int> child_links;
};

struct BfsResult {
  std::vector<TreeView> tree;
  RunReport report;
};

/// Hop BFS over the communication links. Each node learns its depth, parent
/// (smallest-id neighbour one layer up) and children. Unreached nodes keep
/// depth INF and give up after `bound` rounds (default n).
BfsResult bfs(const Graph& g, NodeId root, const EngineConfig& cfg, std::int64_t bound = 0);

/// Throws AggregationError unless the views form one tree spanning every node.
void require_spanning(const std::vector<TreeView>& tree);

// ---- aggregation ------------------------------------------------------------

enum class AggOp { sum, max, min };

/// An optional (value, id) pair. max/min prefer the smaller id on equal values.
struct AggValue {
  bool present = false;
  std::int64_t value = 0;
  NodeId id = -1;

  static AggValue of(std::int64_t v, NodeId id) { return {true, v, id}; }
  friend bool operator==(const AggValue&, const AggValue&) = default;
};

AggValue combine(AggOp op, const AggValue& a, const AggValue& b);

struct AggregateResult {
  std::vector<std::vector<AggValue>> at_node;  // at_node[v][key]
  RunReport report;

  /// The common result; throws if two nodes disagree.
  const std::vector<AggValue>& agreed() const;
};

/// Pipelined convergecast and broadcast of K keys over a spanning tree:
/// about K + 2*height rounds. inputs[v][key] is node v's contribution.
AggregateResult aggregate(const Graph& g, const std::vector<TreeView>& tree, std::span<const AggOp> ops,
                          const std::vector<std::vector<AggValue>>& inputs, const EngineConfig& cfg);

struct BroadcastAggregate {
  AggValue value;
  RunReport report;
};

BroadcastAggregate broadcast_and_aggregate(const Graph& g, const std::vector<TreeView>& tree, AggOp op,
                                           const std::vector<std::int64_t>& values, const EngineConfig& cfg);

/// BFS from node 0 plus one aggregation; every node learns
/// D' = 2 * (tree depth), an upper bound on the hop-diameter within factor 2,
/// and the sums of the optional per-node count lanes.
struct Bootstrap {
  std::vector<TreeView> tree;
  std::int64_t depth = 0;
  std::int64_t d_prime = 0;
  std::vector<std::int64_t> sums;
};

Bootstrap bootstrap(const Graph& g, Accounting& acct, const std::vector<std::vector<std::int64_t>>& count_lanes = {});

// ---- multi-source BFS -------------------------------------------------------

struct MultiBfsResult {
  std::vector<NodeId> sources;              // ascending
  std::vector<std::vector<Distance>> dist;  // dist[v][i] = hop d(v, sources[i])
  std::vector<std::vector<Word>> tag;       // tag[v][i] as announced by sources[i]
  RunReport report;

  int index_of(NodeId source) const;
};

/// Pipelined BFS from every flagged node for a fixed source_bound + d_prime + 1
/// rounds. Each round a node sends the lexicographically smallest
/// (distance, source) pair it has not yet announced.
MultiBfsResult multi_bfs_phase(const Graph& g, const std::vector<char>& is_source, const std::vector<Word>& tags,
                               std::int64_t source_bound, std::int64_t d_prime, const EngineConfig& cfg);

struct MultiBfsRun {
  MultiBfsResult result;
  std::int64_t setup_rounds = 0;     // bootstrap + source count
  std::int64_t pipeline_rounds = 0;  // the BFS phase itself
  std::int64_t d_prime = 0;
  Accounting acct;
};

/// Standalone form: bootstrap (which also counts the sources) then the phase.
/// Duplicate sources collapse.
MultiBfsRun multi_bfs(const Graph& g, std::span<const NodeId> sources, const EngineConfig& cfg);

// ---- farthest-node election -------------------------------------------------

struct ElectResult {
  bool empty = false;
  NodeId winner = -1;
  std::int64_t distance = 0;
  std::vector<Distance> dist_to_marked;  // each node's own hop distance
  RunReport report;
};

/// Hop wave from the marked set, then a max-(distance, -id) convergecast and
/// broadcast on `tree`. A node still unreached after bound+1 rounds reports
/// nothing; an empty result means no node was marked.
ElectResult elect_farthest_phase(const Graph& g, const std::vector<TreeView>& tree, const std::vector<char>& marked,
                                 std::int64_t bound, const EngineConfig& cfg);

struct ElectRun {
  ElectResult result;
  Accounting acct;
};

/// Standalone form with its own bootstrap; throws on an empty marked set.
ElectRun elect_farthest(const Graph& g, std::span<const NodeId> marked, const EngineConfig& cfg);

// ---- closest-set selection --------------------------------------------------

struct SelectResult {
  std::vector<char> member;
  std::int64_t j_star = 0;  // every node within j_star hops is a member
  bool pass = false;        // some member is flagged in `prefer`
  std::int64_t marked_upper = 0;  // min(n, flagged-in-`counted` + ell)
  std::int64_t height = 0;        // depth of the BFS tree
  RunReport report;
};

/// Chooses exactly ell nodes closest to the root of the BFS tree `tree`:
/// all of layers 0..j* plus a quota from layer j*+1, handed down the tree in
/// increasing child-id order. Nodes flagged in `prefer` fill the quota first.
/// `counted` is an extra per-node flag whose total is folded into marked_upper.
SelectResult select_closest_set_phase(const Graph& g, const std::vector<TreeView>& tree, std::int64_t ell,
                                      const std::vector<char>& prefer, const std::vector<char>& counted,
                                      const EngineConfig& cfg);

struct SelectRun {
  SelectResult result;
  Accounting acct;
};

SelectRun select_closest_set(const Graph& g, NodeId root, std::int64_t ell, const EngineConfig& cfg);

// ---- minimum crossing edge --------------------------------------------------

struct MinEdgeResult {
  bool found = false;
  NodeId s = -1;  // endpoint in S
  NodeId t = -1;  // endpoint in T
  Weight w = 0;
  RunReport report;
};

/// Neighbours swap colours, then the lightest S-T edge (ties by endpoint ids)
/// floods for d_prime rounds: d_prime + 2 rounds in total.
MinEdgeResult min_crossing_edge(const Graph& g, const std::vector<char>& in_s, std::int64_t d_prime,
                                const EngineConfig& cfg);

// ---- SSSP engines -----------------------------------------------------------

enum class SsspKind { distributed_bellman_ford, oracle_exact, oracle_perturbed };

struct SsspEngine {
  SsspKind kind = SsspKind::oracle_exact;
  double epsilon = 0.0;
  double cost_scale = 1.0;

  /// Modeled cost of one oracle invocation: ceil((sqrt n + D') ln n / eps) * scale,
  /// with the 1/eps factor dropped at eps = 0.
  std::int64_t charged_rounds(NodeId n, std::int64_t d_prime) const;
  void validate() const;
};

const char* sssp_kind_name(SsspKind k);

struct SsspRun {
  DistanceVector dv;
  std::int64_t rounds = 0;
  bool measured = false;
  RunReport report;  // only for the distributed engine
};

/// Each node ends up knowing its own entry of dv. The perturbed oracle returns
/// floor(d * f_v) with f_v uniform in [1, 1+eps] drawn from node v's stream.
SsspRun sssp(const SsspEngine& engine, const Graph& g, NodeId source, Direction dir, std::int64_t d_prime,
             const EngineConfig& cfg);

}  // namespace distapx
