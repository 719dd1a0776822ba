#include <algorithm>
#include <array>

#include "distapx/primitives.hpp"

namespace distapx {

namespace {

// Per-layer subtree counts: total, preferred, counted.
using Counts = std::array<std::int64_t, 3>;

class SelectProgram final : public NodeProgram {
 public:
  SelectProgram(TreeView view, std::int64_t ell, bool prefer, bool counted)
      : view_(std::move(view)), ell_(ell), prefer_(prefer), counted_(counted) {
    const std::size_t kids = view_.child_links.size();
    child_layers_.resize(kids);
    child_ended_.assign(kids, 0);
    depth_ = view_.depth.value();
    next_layer_ = depth_;
  }

  void init(const NodeContext& ctx) override {
    n_ = ctx.n;
    link_child_.assign(ctx.links.size(), -1);
    for (std::size_t c = 0; c < view_.child_links.size(); ++c) link_child_[view_.child_links[c]] = static_cast<int>(c);
  }

  void step(const NodeContext&, Inbox inbox, Outbox outbox) override {
    bool got_a = false, got_b = false;
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      if (!inbox[i]) continue;
      const Message& m = *inbox[i];
      if (static_cast<int>(i) == view_.parent_link) {
        if (!have_a_) {
          j_star_ = m[0];
          zq_ = m[1];
          nq_ = m[2];
          pass_ = m[3] != 0;
          have_a_ = got_a = true;
        } else {
          marked_upper_ = m[0];
          height_ = m[1];
          got_b = true;
        }
        continue;
      }
      const int c = link_child_[i];
      if (m[1] == 0) {
        child_ended_[c] = 1;
      } else {
        child_layers_[c].push_back({m[1], m[2], m[3]});
      }
    }

    if (!up_done_) advance_up(outbox);

    if (view_.parent_link < 0) {
      if (b_next_) {
        send_b(outbox);
      } else if (up_done_ && !have_a_) {
        decide();
        have_a_ = true;
        take_quota();
        distribute(outbox);
        if (view_.child_links.empty()) {
          halted_ = true;
        } else {
          b_next_ = true;
        }
      }
    } else if (got_b) {
      send_b(outbox);
    } else if (got_a) {
      take_quota();
      distribute(outbox);
    }
  }

  bool halted() const override { return halted_; }
  std::vector<Word> output() const override { return {member_ ? 1 : 0, j_star_, pass_ ? 1 : 0}; }

  bool member() const { return member_; }
  std::int64_t j_star() const { return j_star_; }
  bool pass() const { return pass_; }
  std::int64_t marked_upper() const { return marked_upper_; }
  std::int64_t height() const { return height_; }

 private:
  // Subtree counts at `layer` summed over children (only valid once every
  // child has reported or ended for that layer).
  Counts child_sum(std::int64_t layer) const {
    Counts sum{0, 0, 0};
    for (std::size_t c = 0; c < child_layers_.size(); ++c) {
      const auto off = static_cast<std::size_t>(layer - depth_ - 1);
      if (layer > depth_ && off < child_layers_[c].size()) {
        for (int k = 0; k < 3; ++k) sum[k] += child_layers_[c][off][k];
      }
    }
    return sum;
  }

  bool layer_ready(std::int64_t layer) const {
    for (std::size_t c = 0; c < child_layers_.size(); ++c) {
      const auto have = static_cast<std::int64_t>(child_layers_[c].size());
      if (!child_ended_[c] && depth_ + have < layer) return false;
    }
    return true;
  }

  void advance_up(Outbox outbox) {
    // The root folds every ready layer at once; others send one per round.
    while (!up_done_ && layer_ready(next_layer_)) {
      Counts here = next_layer_ == depth_ ? Counts{1, prefer_ ? 1 : 0, counted_ ? 1 : 0} : child_sum(next_layer_);
      const bool end = here[0] == 0;
      if (view_.parent_link < 0) {
        if (end) {
          up_done_ = true;
        } else {
          layers_.push_back(here);
          ++next_layer_;
        }
        continue;
      }
      outbox[view_.parent_link] = end ? Message{next_layer_, 0, 0, 0} : Message{next_layer_, here[0], here[1], here[2]};
      if (end) up_done_ = true;
      ++next_layer_;
      return;
    }
  }

  void decide() {
    std::int64_t cum = 0, z_inside = 0, counted = 0;
    bool full = false;
    j_star_ = -1;
    for (std::size_t j = 0; j < layers_.size(); ++j) {
      counted += layers_[j][2];
      if (full) continue;
      if (cum + layers_[j][0] <= ell_) {
        cum += layers_[j][0];
        z_inside += layers_[j][1];
        j_star_ = static_cast<std::int64_t>(j);
      } else {
        full = true;
        const std::int64_t quota = ell_ - cum;
        zq_ = std::min(quota, layers_[j][1]);
        nq_ = quota - zq_;
      }
    }
    pass_ = z_inside > 0 || zq_ > 0;
    marked_upper_ = std::min<std::int64_t>(n_, counted + ell_);
    height_ = static_cast<std::int64_t>(layers_.size()) - 1;
  }

  void send_b(Outbox outbox) {
    for (int l : view_.child_links) outbox[l] = Message{marked_upper_, height_};
    halted_ = true;
  }

  void take_quota() {
    if (depth_ <= j_star_) {
      member_ = true;
    } else if (depth_ == j_star_ + 1) {
      if (prefer_ && zq_ > 0) {
        member_ = true;
        --zq_;
      } else if (!prefer_ && nq_ > 0) {
        member_ = true;
        --nq_;
      }
    }
  }

  void distribute(Outbox outbox) {
    const std::int64_t boundary = j_star_ + 1;
    for (std::size_t c = 0; c < view_.child_links.size(); ++c) {
      std::int64_t zc = 0, nc = 0;
      const auto off = static_cast<std::size_t>(boundary - depth_ - 1);
      if (boundary > depth_ && off < child_layers_[c].size()) {
        const Counts& k = child_layers_[c][off];
        zc = std::min(zq_, k[1]);
        nc = std::min(nq_, k[0] - k[1]);
      }
      zq_ -= zc;
      nq_ -= nc;
      outbox[view_.child_links[c]] = Message{j_star_, zc, nc, pass_ ? 1 : 0};
    }
  }

  TreeView view_;
  std::int64_t ell_;
  bool prefer_, counted_;
  NodeId n_ = 0;
  std::int64_t depth_ = 0, next_layer_ = 0;
  std::vector<std::vector<Counts>> child_layers_;
  std::vector<char> child_ended_;
  std::vector<int> link_child_;
  std::vector<Counts> layers_;  // root only
  bool up_done_ = false, have_a_ = false, b_next_ = false, halted_ = false;
  bool member_ = false, pass_ = false;
  std::int64_t j_star_ = 0, zq_ = 0, nq_ = 0, marked_upper_ = 0, height_ = 0;
};

}  // namespace

SelectResult select_closest_set_phase(const Graph& g, const std::vector<TreeView>& tree, std::int64_t ell,
                                      const std::vector<char>& prefer, const std::vector<char>& counted,
                                      const EngineConfig& cfg) {
  const NodeId n = g.node_count();
  if (ell < 1 || ell > n) throw std::invalid_argument("select_closest_set: need 1 <= ell <= n");
  require_spanning(tree);
  auto run = run_programs<SelectProgram>(
      g,
      [&](NodeId v) {
        return std::make_unique<SelectProgram>(tree[v], ell, !prefer.empty() && prefer[v],
                                               !counted.empty() && counted[v]);
      },
      cfg);
  SelectResult out;
  const auto& first = *run.programs.front();
  out.j_star = first.j_star();
  out.pass = first.pass();
  out.marked_upper = first.marked_upper();
  out.height = first.height();
  for (auto& p : run.programs) {
    if (p->j_star() != out.j_star || p->pass() != out.pass || p->marked_upper() != out.marked_upper) {
      throw AggregationError("selection results disagree");
    }
    out.member.push_back(p->member() ? 1 : 0);
  }
  out.report = std::move(run.report);
  return out;
}

SelectRun select_closest_set(const Graph& g, NodeId root, std::int64_t ell, const EngineConfig& cfg) {
  if (ell < 1 || ell > g.node_count()) throw std::invalid_argument("select_closest_set: need 1 <= ell <= n");
  SelectRun run{{}, Accounting(cfg)};
  auto tree = bfs(g, root, run.acct.next_config());
  run.acct.record("bfs", tree.report);
  run.result = select_closest_set_phase(g, tree.tree, ell, {}, {}, run.acct.next_config());
  run.acct.record("select_closest_set", run.result.report);
  return run;
}

}  // namespace distapx
