#include "distapx/sim.hpp"

#include <algorithm>
#include <exception>

namespace distapx {

namespace {

const char* mode_name(BandwidthMode m) { return m == BandwidthMode::strict ? "strict" : "log_only"; }

void collect_outputs(std::span<NodeProgram* const> programs, RunReport& r) {
  r.outputs.clear();
  r.outputs.reserve(programs.size());
  for (NodeProgram* p : programs) r.outputs.push_back(p->output());
}

}  // namespace

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["rounds"] = r.rounds;
  j["messages_total"] = r.messages_total;
  j["per_round_messages"] = r.per_round_messages;
  j["max_words_on_any_edge_round"] = r.max_words_on_any_edge_round;
  auto& vs = j["violations"] = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    vs.push_back({{"round", v.round}, {"from", v.from}, {"to", v.to}, {"words", v.words},
                  {"reason", v.reason}});
  }
  j["outputs"] = r.outputs;
  j["rng_seed"] = r.rng_seed;
  j["W"] = r.words_per_message;
  j["mode"] = mode_name(r.mode);
  j["word_max"] = r.word_max;
  return j;
}

BandwidthViolation::BandwidthViolation(Violation v, RunReport partial)
    : std::runtime_error("bandwidth violation in round " + std::to_string(v.round) + " on edge (" +
                         std::to_string(v.from) + "," + std::to_string(v.to) + "): " + v.reason),
      v_(std::move(v)),
      partial_(std::move(partial)) {}

RoundCapExceeded::RoundCapExceeded(RunReport partial)
    : std::runtime_error("round cap exceeded after " + std::to_string(partial.rounds) + " rounds"),
      partial_(std::move(partial)) {}

Word word_max_for(const Graph& g) {
  return static_cast<Word>(g.node_count()) * static_cast<Word>(g.max_weight());
}

std::pair<Word, Word> WideCodec::encode(std::int64_t v) const {
  if (v < 0) throw std::out_of_range("wide value must be non-negative");
  const Word base = word_max + 1;
  if (v / base > word_max) throw std::out_of_range("value " + std::to_string(v) + " exceeds two words");
  return {v / base, v % base};
}

RunReport run(const Graph& g, std::span<NodeProgram* const> programs, const EngineConfig& cfg,
              RoundObserver* observer) {
  const NodeId n = g.node_count();
  if (static_cast<NodeId>(programs.size()) != n) throw std::invalid_argument("one program per node");
  if (cfg.round_cap <= 0) throw std::invalid_argument("round_cap must be positive");
  if (cfg.words_per_message < 1) throw std::invalid_argument("W must be >= 1");

  RunReport report;
  report.rng_seed = cfg.seed;
  report.words_per_message = cfg.words_per_message;
  report.mode = cfg.mode;
  report.word_max = word_max_for(g);

  // Slot layout: node v owns [offset[v], offset[v+1]), one slot per link.
  std::vector<std::size_t> offset(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.links(v).size();
  std::vector<std::size_t> deliver_to(offset[n]);
  for (NodeId u = 0; u < n; ++u) {
    auto links = g.links(u);
    for (std::size_t i = 0; i < links.size(); ++i) {
      auto peer_links = g.links(links[i].peer);
      auto it = std::lower_bound(peer_links.begin(), peer_links.end(), u,
                                 [](const Link& l, NodeId id) { return l.peer < id; });
      deliver_to[offset[u] + i] = offset[links[i].peer] + static_cast<std::size_t>(it - peer_links.begin());
    }
  }

  std::vector<Rng> rngs;
  rngs.reserve(n);
  for (NodeId v = 0; v < n; ++v) rngs.emplace_back(mix_seed(cfg.seed, static_cast<std::uint64_t>(v)));

  auto context = [&](NodeId v, std::int64_t round) {
    return NodeContext{v, n, round, report.word_max, g.links(v), &rngs[v]};
  };

  std::vector<char> halted(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    programs[v]->init(context(v, 0));
    halted[v] = programs[v]->halted();
  }
  auto all_halted = [&] { return std::all_of(halted.begin(), halted.end(), [](char h) { return h != 0; }); };

  std::vector<std::optional<Message>> inbox(offset[n]), outbox(offset[n]);
  const bool parallel = cfg.exec == SimExec::openmp && observer == nullptr;

  auto step_node = [&](NodeId v, std::int64_t round) {
    Inbox in{inbox.data() + offset[v], inbox.data() + offset[v + 1]};
    Outbox out{outbox.data() + offset[v], outbox.data() + offset[v + 1]};
    programs[v]->step(context(v, round), in, out);
    halted[v] = programs[v]->halted();
  };

  for (std::int64_t round = 1; !all_halted(); ++round) {
    if (round > cfg.round_cap) {
      collect_outputs(programs, report);
      throw RoundCapExceeded(std::move(report));
    }
    std::fill(outbox.begin(), outbox.end(), std::nullopt);

    if (parallel) {
      std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 16)
      for (NodeId v = 0; v < n; ++v) {
        if (halted[v]) continue;
        try {
          step_node(v, round);
        } catch (...) {
          errors[v] = std::current_exception();
        }
      }
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    } else {
      for (NodeId v = 0; v < n; ++v) {
        if (halted[v]) continue;
        if (observer) observer->before_step(round, v);
        step_node(v, round);
        if (observer) observer->after_step(round, v);
      }
    }

    // Validation and delivery stay serial so violations are recorded in a
    // fixed (sender, link) order.
    std::fill(inbox.begin(), inbox.end(), std::nullopt);
    std::int64_t sent = 0;
    for (NodeId u = 0; u < n; ++u) {
      auto links = g.links(u);
      for (std::size_t i = 0; i < links.size(); ++i) {
        auto& msg = outbox[offset[u] + i];
        if (!msg) continue;
        ++sent;
        report.max_words_on_any_edge_round = std::max(report.max_words_on_any_edge_round, msg->size());
        std::string reason;
        if (msg->size() > static_cast<std::size_t>(cfg.words_per_message)) {
          reason = std::to_string(msg->size()) + " words > W=" + std::to_string(cfg.words_per_message);
        } else {
          for (Word w : msg->words()) {
            if (w < 0 || w > report.word_max) {
              reason = "word " + std::to_string(w) + " outside [0," + std::to_string(report.word_max) + "]";
              break;
            }
          }
        }
        if (!reason.empty()) {
          Violation v{round, u, links[i].peer, msg->size(), reason};
          if (cfg.mode == BandwidthMode::strict) {
            report.rounds = round;
            report.messages_total += sent;
            report.per_round_messages.push_back(sent);
            collect_outputs(programs, report);
            throw BandwidthViolation(std::move(v), std::move(report));
          }
          report.violations.push_back(std::move(v));
        }
        inbox[deliver_to[offset[u] + i]] = std::move(msg);
      }
    }
    report.messages_total += sent;
    report.per_round_messages.push_back(sent);
    report.rounds = round;
  }
  collect_outputs(programs, report);
  return report;
}

RunReport run(const Graph& g, const ProgramFactory& factory, const EngineConfig& cfg,
              RoundObserver* observer) {
  std::vector<std::unique_ptr<NodeProgram>> owned;
  std::vector<NodeProgram*> raw;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    owned.push_back(factory(v));
    raw.push_back(owned.back().get());
  }
  return run(g, raw, cfg, observer);
}

}  // namespace distapx
