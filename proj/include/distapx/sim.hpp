#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "distapx/graph.hpp"
#include "distapx/random.hpp"
#include "json.hpp"

namespace distapx {

using Word = std::int64_t;

/// Up to kCapacity words. The engine, not the message, enforces the W limit,
/// so a program can still build an oversize message and get caught.
class Message {
 public:
  static constexpr std::size_t kCapacity = 8;

  Message() = default;
  Message(std::initializer_list<Word> words) {
    for (Word w : words) push(w);
  }

  void push(Word w) {
    if (size_ == kCapacity) throw std::length_error("message exceeds 8 words");
    words_[size_++] = w;
  }
  std::size_t size() const { return size_; }
  Word operator[](std::size_t i) const { return words_[i]; }
  std::span<const Word> words() const { return {words_.data(), size_}; }

  friend bool operator==(const Message& a, const Message& b) {
    return a.size_ == b.size_ && std::equal(a.words_.begin(), a.words_.begin() + a.size_, b.words_.begin());
  }

 private:
  std::array<Word, kCapacity> words_{};
  std::size_t size_ = 0;
};

using Inbox = std::span<const std::optional<Message>>;
using Outbox = std::span<std::optional<Message>>;

/// What a node may see: its id, n, the round and its own links. Slot i of the
/// inbox and outbox belongs to links[i].
struct NodeContext {
  NodeId id = 0;
  NodeId n = 0;
  std::int64_t round = 0;
  Word word_max = 0;
  std::span<const Link> links;
  Rng* rng = nullptr;
};

class NodeProgram {
 public:
  virtual ~NodeProgram() = default;
  virtual void init(const NodeContext&) {}
  virtual void step(const NodeContext& ctx, Inbox inbox, Outbox outbox) = 0;
  virtual bool halted() const = 0;
  virtual std::vector<Word> output() const { return {}; }
};

enum class BandwidthMode { strict, log_only };
enum class SimExec { serial, openmp };

struct EngineConfig {
  int words_per_message = 4;
  BandwidthMode mode = BandwidthMode::strict;
  std::int64_t round_cap = 1'000'000;
  std::uint64_t seed = 0;
  SimExec exec = SimExec::serial;
};

struct Violation {
  std::int64_t round = 0;
  NodeId from = 0;
  NodeId to = 0;
  std::size_t words = 0;
  std::string reason;
};

struct RunReport {
  std::int64_t rounds = 0;
  std::int64_t messages_total = 0;
  std::vector<std::int64_t> per_round_messages;
  std::size_t max_words_on_any_edge_round = 0;
  std::vector<Violation> violations;
  std::vector<std::vector<Word>> outputs;
  std::uint64_t rng_seed = 0;
  int words_per_message = 4;
  BandwidthMode mode = BandwidthMode::strict;
  Word word_max = 0;
};

nlohmann::json to_json(const RunReport& r);

class BandwidthViolation : public std::runtime_error {
 public:
  BandwidthViolation(Violation v, RunReport partial);
  const Violation& violation() const { return v_; }
  const RunReport& partial() const { return partial_; }

 private:
  Violation v_;
  RunReport partial_;
};

class RoundCapExceeded : public std::runtime_error {
 public:
  explicit RoundCapExceeded(RunReport partial);
  const RunReport& partial() const { return partial_; }

 private:
  RunReport partial_;
};

/// Instrumentation hook; calls run in node order, so attaching one forces the
/// serial step loop.
class RoundObserver {
 public:
  virtual ~RoundObserver() = default;
  virtual void before_step(std::int64_t /*round*/, NodeId /*node*/) {}
  virtual void after_step(std::int64_t /*round*/, NodeId /*node*/) {}
};

Word word_max_for(const Graph& g);

/// Runs programs[v] at node v until every program has halted.
RunReport run(const Graph& g, std::span<NodeProgram* const> programs, const EngineConfig& cfg,
              RoundObserver* observer = nullptr);

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(NodeId)>;

RunReport run(const Graph& g, const ProgramFactory& factory, const EngineConfig& cfg,
              RoundObserver* observer = nullptr);

template <class P>
struct TypedRun {
  RunReport report;
  std::vector<std::unique_ptr<P>> programs;
};

/// Builds one P per node with make(v), runs them and hands the programs back
/// so callers can read typed per-node results.
template <class P, class Make>
TypedRun<P> run_programs(const Graph& g, Make&& make, const EngineConfig& cfg,
                         RoundObserver* observer = nullptr) {
  TypedRun<P> out;
  out.programs.reserve(g.node_count());
  std::vector<NodeProgram*> raw;
  raw.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out.programs.push_back(make(v));
    raw.push_back(out.programs.back().get());
  }
  out.report = run(g, raw, cfg, observer);
  return out;
}

/// Splits a non-negative value too wide for one word into (hi, lo) words with
/// base word_max + 1.
struct WideCodec {
  Word word_max;

  std::pair<Word, Word> encode(std::int64_t v) const;
  std::int64_t decode(Word hi, Word lo) const { return hi * (word_max + 1) + lo; }
};

}  // namespace distapx
