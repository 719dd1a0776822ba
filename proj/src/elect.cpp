#include "distapx/primitives.hpp"

namespace distapx {

namespace {

constexpr Word kWave = 1;
constexpr Word kAgg = 2;

class ElectProgram final : public NodeProgram {
 public:
  ElectProgram(bool marked, TreeView view, std::int64_t bound)
      : marked_(marked), view_(std::move(view)), bound_(bound), recv_(view_.child_links.size(), 0) {}

  void step(const NodeContext& ctx, Inbox inbox, Outbox outbox) override {
    bool send_wave = false;
    bool got_result = false;
    if (d_.is_inf() && marked_ && ctx.round == 1) {
      d_ = Distance(0);
      send_wave = true;
    }
    Distance best = Distance::inf();
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      if (!inbox[i]) continue;
      const Message& m = *inbox[i];
      if ((m[0] & kWave) && d_.is_inf()) best = std::min(best, Distance(m[1]) + 1);
      if (m[0] & kAgg) {
        AggValue v = m[3] == 0 ? AggValue{} : AggValue::of(m[2] - 1, static_cast<NodeId>(m[3] - 1));
        if (static_cast<int>(i) == view_.parent_link) {
          result_ = v;
          got_result = true;
        } else {
          for (std::size_t c = 0; c < view_.child_links.size(); ++c) {
            if (view_.child_links[c] == static_cast<int>(i)) recv_[c] = 1;
          }
          sub_ = combine(AggOp::max, sub_, v);
        }
      }
    }
    if (best.is_finite()) {
      d_ = best;
      send_wave = true;
    }
    if (!decided_ && (d_.is_finite() || ctx.round > bound_)) {
      decided_ = true;
      if (d_.is_finite()) sub_ = combine(AggOp::max, sub_, AggValue::of(d_.value(), ctx.id));
    }

    bool send_up = false;
    if (decided_ && !sent_up_) {
      bool all = true;
      for (char r : recv_) all = all && r;
      if (all) {
        sent_up_ = true;
        if (view_.parent_link < 0) {
          result_ = sub_;
          got_result = true;
        } else {
          send_up = true;
        }
      }
    }

    for (std::size_t i = 0; i < outbox.size(); ++i) {
      Word flags = 0, wd = 0, val = 0, id = 0;
      if (send_wave) {
        flags |= kWave;
        wd = d_.value();
      }
      const AggValue* agg = nullptr;
      if (send_up && static_cast<int>(i) == view_.parent_link) agg = &sub_;
      if (got_result && static_cast<int>(i) != view_.parent_link) {
        for (int l : view_.child_links) {
          if (l == static_cast<int>(i)) agg = &result_;
        }
      }
      if (agg) {
        flags |= kAgg;
        if (agg->present) {
          val = agg->value + 1;
          id = agg->id + 1;
        }
      }
      if (flags) outbox[i] = Message{flags, wd, val, id};
    }
    if (got_result) halted_ = true;
  }

  bool halted() const override { return halted_; }
  std::vector<Word> output() const override {
    return {result_.present ? 1 : 0, result_.value, result_.id, d_.is_inf() ? -1 : d_.value()};
  }

  const AggValue& result() const { return result_; }
  Distance dist() const { return d_; }

 private:
  bool marked_;
  TreeView view_;
  std::int64_t bound_;
  std::vector<char> recv_;
  Distance d_ = Distance::inf();
  AggValue sub_, result_;
  bool decided_ = false, sent_up_ = false, halted_ = false;
};

}  // namespace

ElectResult elect_farthest_phase(const Graph& g, const std::vector<TreeView>& tree, const std::vector<char>& marked,
                                 std::int64_t bound, const EngineConfig& cfg) {
  require_spanning(tree);
  auto run = run_programs<ElectProgram>(
      g, [&](NodeId v) { return std::make_unique<ElectProgram>(marked[v] != 0, tree[v], bound); }, cfg);
  ElectResult out;
  const AggValue common = run.programs.front()->result();
  for (auto& p : run.programs) {
    if (!(p->result() == common)) throw AggregationError("election results disagree");
    out.dist_to_marked.push_back(p->dist());
  }
  out.empty = !common.present;
  if (!out.empty) {
    out.winner = common.id;
    out.distance = common.value;
  }
  out.report = std::move(run.report);
  return out;
}

ElectRun elect_farthest(const Graph& g, std::span<const NodeId> marked, const EngineConfig& cfg) {
  if (marked.empty()) throw std::invalid_argument("elect_farthest: marked set is empty");
  std::vector<char> flag(g.node_count(), 0);
  for (NodeId v : marked) {
    if (!g.valid(v)) throw std::invalid_argument("elect_farthest: marked node out of range");
    flag[v] = 1;
  }
  ElectRun run{{}, Accounting(cfg)};
  auto boot = bootstrap(g, run.acct);
  run.result = elect_farthest_phase(g, boot.tree, flag, boot.d_prime, run.acct.next_config());
  run.acct.record("elect_farthest", run.result.report);
  return run;
}

}  // namespace distapx
