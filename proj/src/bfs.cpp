#include "distapx/primitives.hpp"

namespace distapx {

namespace {

constexpr Word kToken = 0;
constexpr Word kAck = 1;

class BfsProgram final : public NodeProgram {
 public:
  BfsProgram(bool is_root, std::int64_t bound) : root_(is_root), bound_(bound) {}

  void step(const NodeContext& ctx, Inbox inbox, Outbox outbox) override {
    if (view_.depth.is_inf()) {
      int from = -1;
      Word d = 0;
      if (root_) {
        from = -2;
      } else {
        for (std::size_t i = 0; i < inbox.size(); ++i) {
          if (inbox[i] && (*inbox[i])[0] == kToken) {  // links are sorted by peer id
            from = static_cast<int>(i);
            d = (*inbox[i])[1] + 1;
            break;
          }
        }
      }
      if (from == -1) {
        if (ctx.round >= bound_) halted_ = true;
        return;
      }
      view_.depth = Distance(d);
      if (from >= 0) {
        view_.parent_link = from;
        view_.parent = ctx.links[from].peer;
      }
      for (std::size_t i = 0; i < outbox.size(); ++i) {
        outbox[i] = static_cast<int>(i) == from ? Message{kAck, 0} : Message{kToken, d};
      }
      // Acks from children arrive two rounds later; a node whose only link is
      // its parent cannot have children.
      halt_round_ = ctx.round + 2;
      if (ctx.links.empty() || (from >= 0 && ctx.links.size() == 1)) halted_ = true;
      return;
    }
    for (std::size_t i = 0; i < inbox.size(); ++i) {
      if (inbox[i] && (*inbox[i])[0] == kAck) view_.child_links.push_back(static_cast<int>(i));
    }
    if (ctx.round >= halt_round_) halted_ = true;
  }

  bool halted() const override { return halted_; }

  std::vector<Word> output() const override {
    return {view_.depth.is_inf() ? -1 : view_.depth.value(), view_.parent,
            static_cast<Word>(view_.child_links.size())};
  }

  const TreeView& view() const { return view_; }

 private:
  bool root_;
  std::int64_t bound_;
  TreeView view_;
  std::int64_t halt_round_ = 0;
  bool halted_ = false;
};

}  // namespace

BfsResult bfs(const Graph& g, NodeId root, const EngineConfig& cfg, std::int64_t bound) {
  if (!g.valid(root)) throw std::invalid_argument("bfs root out of range");
  if (bound <= 0) bound = g.node_count();
  auto run = run_programs<BfsProgram>(
      g, [&](NodeId v) { return std::make_unique<BfsProgram>(v == root, bound); }, cfg);
  BfsResult out;
  out.report = std::move(run.report);
  for (auto& p : run.programs) out.tree.push_back(p->view());
  return out;
}

}  // namespace distapx
