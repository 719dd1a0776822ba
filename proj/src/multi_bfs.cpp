#include <algorithm>
#include <set>

#include "distapx/primitives.hpp"

namespace distapx {

namespace {

class MultiBfsProgram final : public NodeProgram {
 public:
  MultiBfsProgram(bool source, Word tag, std::int64_t end_round)
      : source_(source), own_tag_(tag), end_round_(end_round) {}

  void init(const NodeContext& ctx) override {
    dist_.assign(ctx.n, Distance::inf());
    tag_.assign(ctx.n, 0);
    if (source_) {
      dist_[ctx.id] = Distance(0);
      tag_[ctx.id] = own_tag_;
      pending_.insert({0, ctx.id});
    }
    halted_ = end_round_ <= 0;
  }

  void step(const NodeContext& ctx, Inbox inbox, Outbox outbox) override {
    for (const auto& slot : inbox) {
      if (!slot) continue;
      const auto s = static_cast<NodeId>((*slot)[1]);
      const Distance cand = Distance((*slot)[0]) + 1;
      if (cand < dist_[s]) {
        if (dist_[s].is_finite()) pending_.erase({dist_[s].value(), s});
        dist_[s] = cand;
        tag_[s] = (*slot)[2];
        pending_.insert({cand.value(), s});
      }
    }
    if (ctx.round >= end_round_) {
      halted_ = true;
      return;
    }
    if (pending_.empty()) return;
    auto [d, s] = *pending_.begin();
    pending_.erase(pending_.begin());
    const Message m{d, s, tag_[s]};
    for (auto& slot : outbox) slot = m;
  }

  bool halted() const override { return halted_; }

  std::vector<Word> output() const override {
    std::vector<Word> out;
    for (NodeId s = 0; s < static_cast<NodeId>(dist_.size()); ++s) {
      if (dist_[s].is_finite()) {
        out.push_back(s);
        out.push_back(dist_[s].value());
      }
    }
    return out;
  }

  Distance dist(NodeId s) const { return dist_[s]; }
  Word tag(NodeId s) const { return tag_[s]; }

 private:
  bool source_;
  Word own_tag_;
  std::int64_t end_round_;
  std::vector<Distance> dist_;
  std::vector<Word> tag_;
  std::set<std::pair<std::int64_t, NodeId>> pending_;  // learned but not yet announced
  bool halted_ = false;
};

}  // namespace

int MultiBfsResult::index_of(NodeId source) const {
  auto it = std::lower_bound(sources.begin(), sources.end(), source);
  if (it == sources.end() || *it != source) return -1;
  return static_cast<int>(it - sources.begin());
}

MultiBfsResult multi_bfs_phase(const Graph& g, const std::vector<char>& is_source, const std::vector<Word>& tags,
                               std::int64_t source_bound, std::int64_t d_prime, const EngineConfig& cfg) {
  const NodeId n = g.node_count();
  const std::int64_t end_round = source_bound + d_prime + 1;
  auto run = run_programs<MultiBfsProgram>(
      g,
      [&](NodeId v) {
        return std::make_unique<MultiBfsProgram>(is_source[v] != 0, tags.empty() ? 0 : tags[v], end_round);
      },
      cfg);
  MultiBfsResult out;
  for (NodeId v = 0; v < n; ++v)
    if (is_source[v]) out.sources.push_back(v);
  out.dist.resize(n);
  out.tag.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId s : out.sources) {
      out.dist[v].push_back(run.programs[v]->dist(s));
      out.tag[v].push_back(run.programs[v]->tag(s));
    }
  }
  out.report = std::move(run.report);
  return out;
}

MultiBfsRun multi_bfs(const Graph& g, std::span<const NodeId> sources, const EngineConfig& cfg) {
  if (g.directed() || g.weighted()) throw std::invalid_argument("multi_bfs needs an unweighted undirected graph");
  const NodeId n = g.node_count();
  std::vector<char> flag(n, 0);
  for (NodeId s : sources) {
    if (!g.valid(s)) throw std::invalid_argument("multi_bfs source out of range");
    flag[s] = 1;
  }
  MultiBfsRun run{{}, 0, 0, 0, Accounting(cfg)};
  std::vector<std::int64_t> lane(flag.begin(), flag.end());
  auto boot = bootstrap(g, run.acct, {lane});
  run.setup_rounds = run.acct.total_rounds();
  run.d_prime = boot.d_prime;
  run.result = multi_bfs_phase(g, flag, {}, boot.sums[0], boot.d_prime, run.acct.next_config());
  run.acct.record("multi_bfs", run.result.report);
  run.pipeline_rounds = run.result.report.rounds;
  return run;
}

}  // namespace distapx
