#include <cmath>
#include <tuple>

#include "distapx/oracle.hpp"
#include "distapx/primitives.hpp"

namespace distapx {

namespace {

// Round 1: every node tells its neighbours its colour. Afterwards each node
// floods the lightest S-T edge it knows of, keyed by (w, min id, max id).
class MinEdgeProgram final : public NodeProgram {
 public:
  MinEdgeProgram(bool in_s, std::int64_t end_round) : in_s_(in_s), end_round_(end_round) {}

  void step(const NodeContext& ctx, Inbox inbox, Outbox outbox) override {
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      if (!inbox[i]) continue;
      const Message& m = *inbox[i];
      if (ctx.round == 2 && (m[0] != 0) != in_s_) {
        const NodeId peer = ctx.links[i].peer;
        const Weight w = std::max(ctx.links[i].out_weight, ctx.links[i].in_weight);
        offer(w, ctx.id, peer, in_s_ ? ctx.id : peer, in_s_ ? peer : ctx.id);
      }
      if (m[1] != 0) offer(m[1], std::min(m[2], m[3]), std::max(m[2], m[3]), static_cast<NodeId>(m[2]),
                            static_cast<NodeId>(m[3]));
    }
    if (ctx.round >= end_round_) {
      halted_ = true;
      return;
    }
    const Message m{in_s_ ? 1 : 0, w_, s_, t_};
    for (auto& slot : outbox) slot = m;
  }

  bool halted() const override { return halted_; }
  std::vector<Word> output() const override { return {w_, s_, t_}; }

  Weight w() const { return w_; }
  NodeId s() const { return static_cast<NodeId>(s_); }
  NodeId t() const { return static_cast<NodeId>(t_); }

 private:
  void offer(Word w, Word lo, Word hi, NodeId s, NodeId t) {
    if (w_ == 0 || std::tie(w, lo, hi) < std::tie(w_, lo_, hi_)) {
      w_ = w;
      lo_ = lo;
      hi_ = hi;
      s_ = s;
      t_ = t;
    }
  }

  bool in_s_;
  std::int64_t end_round_;
  Word w_ = 0, lo_ = 0, hi_ = 0, s_ = 0, t_ = 0;
  bool halted_ = false;
};

// Synchronous Bellman-Ford for n rounds; a node re-announces its estimate
// whenever it improves.
class BellmanFordProgram final : public NodeProgram {
 public:
  BellmanFordProgram(bool source, Direction dir) : source_(source), dir_(dir) {}

  void init(const NodeContext& ctx) override {
    if (source_) {
      dist_ = Distance(0);
      dirty_ = true;
    }
    end_round_ = ctx.n;
  }

  void step(const NodeContext& ctx, Inbox inbox, Outbox outbox) override {
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      if (!inbox[i]) continue;
      const Link& l = ctx.links[i];
      // Outward: the peer's estimate extends along arc peer -> me.
      const Weight w = dir_ == Direction::outward ? l.in_weight : l.out_weight;
      if (w == 0) continue;
      const Distance cand = Distance((*inbox[i])[0]) + w;
      if (cand < dist_) {
        dist_ = cand;
        dirty_ = true;
      }
    }
    if (ctx.round >= end_round_) {
      halted_ = true;
      return;
    }
    if (!dirty_) return;
    dirty_ = false;
    for (std::size_t i = 0; i < outbox.size(); ++i) {
      const Link& l = ctx.links[i];
      const Weight w = dir_ == Direction::outward ? l.out_weight : l.in_weight;
      if (w != 0) outbox[i] = Message{dist_.value()};
    }
  }

  bool halted() const override { return halted_; }
  std::vector<Word> output() const override { return {dist_.is_inf() ? -1 : dist_.value()}; }
  Distance dist() const { return dist_; }

 private:
  bool source_;
  Direction dir_;
  Distance dist_ = Distance::inf();
  bool dirty_ = false, halted_ = false;
  std::int64_t end_round_ = 0;
};

}  // namespace

MinEdgeResult min_crossing_edge(const Graph& g, const std::vector<char>& in_s, std::int64_t d_prime,
                                const EngineConfig& cfg) {
  auto run = run_programs<MinEdgeProgram>(
      g, [&](NodeId v) { return std::make_unique<MinEdgeProgram>(in_s[v] != 0, d_prime + 2); }, cfg);
  MinEdgeResult out;
  const auto& first = *run.programs.front();
  for (auto& p : run.programs) {
    if (p->w() != first.w() || p->s() != first.s() || p->t() != first.t()) {
      throw AggregationError("min-edge flood did not converge");
    }
  }
  out.found = first.w() != 0;
  if (out.found) {
    out.w = first.w();
    out.s = first.s();
    out.t = first.t();
  }
  out.report = std::move(run.report);
  return out;
}

const char* sssp_kind_name(SsspKind k) {
  switch (k) {
    case SsspKind::distributed_bellman_ford:
      return "bellman_ford";
    case SsspKind::oracle_exact:
      return "oracle_exact";
    case SsspKind::oracle_perturbed:
      return "oracle_perturbed";
  }
  return "?";
}

void SsspEngine::validate() const {
  if (epsilon < 0) throw std::invalid_argument("sssp engine: epsilon must be >= 0");
  if (cost_scale < 0) throw std::invalid_argument("sssp engine: cost_scale must be >= 0");
}

std::int64_t SsspEngine::charged_rounds(NodeId n, std::int64_t d_prime) const {
  const double ln_n = std::log(std::max<double>(n, 2));
  const double inv_eps = epsilon > 0 ? 1.0 / epsilon : 1.0;
  return static_cast<std::int64_t>(std::ceil((std::sqrt(double(n)) + double(d_prime)) * ln_n * inv_eps * cost_scale));
}

SsspRun sssp(const SsspEngine& engine, const Graph& g, NodeId source, Direction dir, std::int64_t d_prime,
             const EngineConfig& cfg) {
  engine.validate();
  if (!g.valid(source)) throw std::invalid_argument("sssp source out of range");
  SsspRun out;
  if (engine.kind == SsspKind::distributed_bellman_ford) {
    auto run = run_programs<BellmanFordProgram>(
        g, [&](NodeId v) { return std::make_unique<BellmanFordProgram>(v == source, dir); }, cfg);
    out.dv.source = source;
    for (auto& p : run.programs) out.dv.dist.push_back(p->dist());
    out.rounds = run.report.rounds;
    out.measured = true;
    out.report = std::move(run.report);
    return out;
  }
  out.dv = sssp_exact(g, source, dir);
  if (engine.kind == SsspKind::oracle_perturbed && engine.epsilon > 0) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      Distance& d = out.dv.dist[v];
      if (d.is_inf() || d.value() == 0) continue;
      Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(v)));
      const double f = rng.uniform(1.0, 1.0 + engine.epsilon);
      d = Distance(static_cast<std::int64_t>(std::floor(static_cast<double>(d.value()) * f)));
    }
  }
  out.rounds = engine.charged_rounds(g.node_count(), d_prime);
  return out;
}

}  // namespace distapx
