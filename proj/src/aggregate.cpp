#include <algorithm>
#include <deque>

#include "distapx/primitives.hpp"

namespace distapx {

EngineConfig Accounting::next_config() const {
  EngineConfig cfg = base_;
  cfg.seed = mix_seed(base_.seed, phases_.size() + 1);
  return cfg;
}

void Accounting::record(std::string name, const RunReport& r) {
  phases_.push_back({std::move(name), r.rounds, r.messages_total, r.max_words_on_any_edge_round,
                     r.violations.size(), false});
  measured_ += r.rounds;
  messages_ += r.messages_total;
  max_words_ = std::max(max_words_, r.max_words_on_any_edge_round);
  violations_ += r.violations.size();
}

void Accounting::charge(std::string name, std::int64_t rounds) {
  phases_.push_back({std::move(name), rounds, 0, 0, 0, true});
  charged_ += rounds;
}

nlohmann::json Accounting::to_json() const {
  nlohmann::json j;
  j["total_rounds"] = total_rounds();
  j["measured_rounds"] = measured_;
  j["charged_rounds"] = charged_;
  j["messages"] = messages_;
  j["max_words"] = max_words_;
  j["violations"] = violations_;
  auto& ps = j["phases"] = nlohmann::json::array();
  for (const auto& p : phases_) {
    ps.push_back({{"name", p.name}, {"rounds", p.rounds}, {"messages", p.messages},
                  {"max_words", p.max_words}, {"violations", p.violations}, {"charged", p.charged}});
  }
  return j;
}

void require_spanning(const std::vector<TreeView>& tree) {
  std::size_t roots = 0;
  for (const TreeView& t : tree) {
    if (t.depth.is_inf()) throw AggregationError("aggregation tree does not span the graph (disconnected?)");
    if (t.depth.value() == 0) ++roots;
  }
  if (roots != 1) throw AggregationError("aggregation tree must have exactly one root");
}

AggValue combine(AggOp op, const AggValue& a, const AggValue& b) {
  if (!a.present) return b;
  if (!b.present) return a;
  switch (op) {
    case AggOp::sum:
      return {true, a.value + b.value, 0};
    case AggOp::max:
      if (a.value != b.value) return a.value > b.value ? a : b;
      return a.id <= b.id ? a : b;
    case AggOp::min:
      if (a.value != b.value) return a.value < b.value ? a : b;
      return a.id <= b.id ? a : b;
  }
  return a;
}

const std::vector<AggValue>& AggregateResult::agreed() const {
  for (const auto& row : at_node) {
    if (row != at_node.front()) throw AggregationError("nodes disagree on an aggregate");
  }
  return at_node.front();
}

namespace {

class AggregateProgram final : public NodeProgram {
 public:
  AggregateProgram(std::vector<AggOp> ops, TreeView view, std::vector<AggValue> input)
      : ops_(std::move(ops)), view_(std::move(view)), partial_(std::move(input)) {
    const std::size_t k = ops_.size();
    partial_.resize(k);
    for (std::size_t key = 0; key < k; ++key) {
      if (ops_[key] == AggOp::sum && partial_[key].present) partial_[key].id = 0;
    }
    result_.resize(k);
    recv_.assign(view_.child_links.size(), 0);
  }

  void init(const NodeContext& ctx) override {
    codec_ = WideCodec{ctx.word_max};
    link_child_.assign(ctx.links.size(), -1);
    for (std::size_t c = 0; c < view_.child_links.size(); ++c) link_child_[view_.child_links[c]] = static_cast<int>(c);
    halted_ = ops_.empty();
  }

  void step(const NodeContext&, Inbox inbox, Outbox outbox) override {
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      if (!inbox[i]) continue;
      const Message& m = *inbox[i];
      const auto key = static_cast<std::size_t>(m[0]);
      AggValue v = decode(m);
      if (static_cast<int>(i) == view_.parent_link) {
        result_[key] = v;
        ++known_;
        if (!view_.child_links.empty()) down_.push_back(key);
      } else {
        const int c = link_child_[i];
        if (c < 0 || recv_[c] != key) throw AggregationError("aggregate message out of order");
        partial_[key] = combine(ops_[key], partial_[key], v);
        ++recv_[c];
      }
    }

    std::size_t ready = ops_.size();
    for (std::size_t r : recv_) ready = std::min(ready, r);
    if (view_.parent_link < 0) {
      for (; next_up_ < ready; ++next_up_) {
        result_[next_up_] = partial_[next_up_];
        ++known_;
        if (!view_.child_links.empty()) down_.push_back(next_up_);
      }
    } else if (next_up_ < ready) {
      outbox[view_.parent_link] = encode(next_up_, partial_[next_up_]);
      ++next_up_;
    }

    if (!down_.empty()) {
      const std::size_t key = down_.front();
      down_.pop_front();
      const Message m = encode(key, result_[key]);
      for (int l : view_.child_links) outbox[l] = m;
    }

    halted_ = known_ == ops_.size() && down_.empty() && next_up_ == ops_.size();
  }

  bool halted() const override { return halted_; }

  std::vector<Word> output() const override {
    std::vector<Word> out;
    for (const AggValue& v : result_) {
      out.push_back(v.present ? 1 : 0);
      out.push_back(v.value);
      out.push_back(v.id);
    }
    return out;
  }

  const std::vector<AggValue>& result() const { return result_; }

 private:
  Message encode(std::size_t key, const AggValue& v) const {
    if (!v.present) return Message{static_cast<Word>(key), 0, 0, 0};
    auto [hi, lo] = codec_.encode(v.value);
    return Message{static_cast<Word>(key), hi, lo, static_cast<Word>(v.id) + 1};
  }

  AggValue decode(const Message& m) const {
    if (m[3] == 0) return {};
    return {true, codec_.decode(m[1], m[2]), static_cast<NodeId>(m[3] - 1)};
  }

  std::vector<AggOp> ops_;
  TreeView view_;
  std::vector<AggValue> partial_, result_;
  std::vector<std::size_t> recv_;
  std::vector<int> link_child_;
  std::deque<std::size_t> down_;
  std::size_t next_up_ = 0, known_ = 0;
  WideCodec codec_{0};
  bool halted_ = false;
};

}  // namespace

AggregateResult aggregate(const Graph& g, const std::vector<TreeView>& tree, std::span<const AggOp> ops,
                          const std::vector<std::vector<AggValue>>& inputs, const EngineConfig& cfg) {
  require_spanning(tree);
  if (inputs.size() != static_cast<std::size_t>(g.node_count())) {
    throw std::invalid_argument("aggregate: one input row per node");
  }
  std::vector<AggOp> op_list(ops.begin(), ops.end());
  auto run = run_programs<AggregateProgram>(
      g, [&](NodeId v) { return std::make_unique<AggregateProgram>(op_list, tree[v], inputs[v]); }, cfg);
  AggregateResult out;
  out.report = std::move(run.report);
  for (auto& p : run.programs) out.at_node.push_back(p->result());
  return out;
}

BroadcastAggregate broadcast_and_aggregate(const Graph& g, const std::vector<TreeView>& tree, AggOp op,
                                           const std::vector<std::int64_t>& values, const EngineConfig& cfg) {
  std::vector<std::vector<AggValue>> inputs(values.size());
  for (NodeId v = 0; v < static_cast<NodeId>(values.size()); ++v) inputs[v] = {AggValue::of(values[v], v)};
  const AggOp ops[] = {op};
  auto res = aggregate(g, tree, ops, inputs, cfg);
  return {res.agreed().front(), std::move(res.report)};
}

Bootstrap bootstrap(const Graph& g, Accounting& acct, const std::vector<std::vector<std::int64_t>>& count_lanes) {
  const NodeId n = g.node_count();
  auto tree = bfs(g, 0, acct.next_config());
  acct.record("bootstrap_bfs", tree.report);
  require_spanning(tree.tree);

  std::vector<AggOp> ops{AggOp::max};
  ops.insert(ops.end(), count_lanes.size(), AggOp::sum);
  std::vector<std::vector<AggValue>> inputs(n);
  for (NodeId v = 0; v < n; ++v) {
    inputs[v].push_back(AggValue::of(tree.tree[v].depth.value(), v));
    for (const auto& lane : count_lanes) inputs[v].push_back(AggValue::of(lane.at(v), v));
  }
  auto agg = aggregate(g, tree.tree, ops, inputs, acct.next_config());
  acct.record("bootstrap_aggregate", agg.report);
  const auto& res = agg.agreed();

  Bootstrap b;
  b.tree = std::move(tree.tree);
  b.depth = res[0].value;
  b.d_prime = 2 * b.depth;
  for (std::size_t i = 1; i < res.size(); ++i) b.sums.push_back(res[i].value);
  return b;
}

}  // namespace distapx
