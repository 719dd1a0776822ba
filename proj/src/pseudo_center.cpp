#include "distapx/pseudo_center.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace distapx {

SsspEngine PseudoCenterConfig::sssp_engine() const {
  SsspEngine e;
  e.kind = engine;
  e.epsilon = engine == SsspKind::oracle_perturbed ? epsilon : 0.0;
  e.cost_scale = cost_scale;
  return e;
}

namespace {

double ln_n(NodeId n) { return std::log(std::max<double>(n, 2)); }

std::int64_t run_engine(const SsspEngine& engine, const Graph& g, NodeId src, Direction dir, const Bootstrap& boot,
                        Accounting& acct, std::vector<Distance>& out) {
  const std::string name = std::string("sssp_") + (dir == Direction::outward ? "out" : "in");
  auto run = sssp(engine, g, src, dir, boot.d_prime, acct.next_config());
  if (run.measured) {
    acct.record(name, run.report);
  } else {
    acct.charge(name, run.rounds);
  }
  for (const Distance& d : run.dv.dist) {
    if (d.is_inf()) throw NotStronglyConnected("graph is not strongly connected: eccentricities are INF, empty center");
  }
  out = std::move(run.dv.dist);
  return run.rounds;
}

std::int64_t sum_flags(const Graph& g, const Bootstrap& boot, const std::vector<char>& flags, Accounting& acct,
                       const char* name) {
  std::vector<std::int64_t> values(flags.begin(), flags.end());
  auto agg = broadcast_and_aggregate(g, boot.tree, AggOp::sum, values, acct.next_config());
  acct.record(name, agg.report);
  return agg.value.value;
}

}  // namespace

PseudoCenter compute_pseudo_center(const Graph& g, const PseudoCenterConfig& cfg, const Bootstrap& boot,
                                   Accounting& acct) {
  if (cfg.epsilon < 0) throw std::invalid_argument("pseudo-center: epsilon must be >= 0");
  const NodeId n = g.node_count();
  const double ln = ln_n(n);
  const SsspEngine engine = cfg.sssp_engine();
  const auto cap = static_cast<int>(std::ceil(cfg.iteration_cap_c * ln));

  PseudoCenter pc;
  pc.alpha = cfg.alpha();
  std::vector<char> in_w(n, 1), in_c(n, 0);

  for (int iter = 0;; ++iter) {
    const std::int64_t w_size = sum_flags(g, boot, in_w, acct, "count_W");
    pc.w_sizes.push_back(w_size);
    if (w_size == 0) break;
    if (iter >= cap) throw NonConvergence("pseudo-center did not converge within " + std::to_string(cap) + " iterations");

    CenterWitness wit;
    wit.w_before = w_size;
    std::vector<char> in_s(n, 0);
    if (static_cast<double>(w_size) <= cfg.upper_c * ln) {
      in_s = in_w;
    } else {
      const double p = std::min(1.0, cfg.sample_c * ln / static_cast<double>(w_size));
      for (;; ++wit.resamples) {
        if (wit.resamples > cfg.max_resamples) throw NonConvergence("pseudo-center: sample window never hit");
        // Each node flips its own coin from its own stream.
        const std::uint64_t draw_seed = acct.next_config().seed;
        for (NodeId v = 0; v < n; ++v) {
          Rng rng(mix_seed(draw_seed, static_cast<std::uint64_t>(v)));
          in_s[v] = in_w[v] && rng.coin(p);
        }
        const auto s_size = static_cast<double>(sum_flags(g, boot, in_s, acct, "count_S"));
        if (s_size >= cfg.lower_c * ln && s_size <= cfg.upper_c * ln) break;
      }
    }

    std::vector<Distance> d_s(n, Distance::inf()), d;
    for (NodeId s = 0; s < n; ++s) {
      if (!in_s[s]) continue;
      wit.sample.push_back(s);
      run_engine(engine, g, s, Direction::outward, boot, acct, d);
      for (NodeId v = 0; v < n; ++v) d_s[v] = std::min(d_s[v], d[v]);
    }

    std::vector<std::int64_t> far(n);
    for (NodeId v = 0; v < n; ++v) far[v] = d_s[v].value();
    auto anchor = broadcast_and_aggregate(g, boot.tree, AggOp::max, far, acct.next_config());
    acct.record("argmax_anchor", anchor.report);
    wit.anchor = anchor.value.id;
    wit.threshold = anchor.value.value;

    run_engine(engine, g, wit.anchor, Direction::inward, boot, acct, d);
    for (NodeId u = 0; u < n; ++u) {
      if (in_w[u] && d[u].value() >= wit.threshold) {
        in_w[u] = 0;
        ++wit.removed;
      }
    }
    for (NodeId s : wit.sample) in_c[s] = 1;
    pc.witness.push_back(std::move(wit));
  }
  for (NodeId v = 0; v < n; ++v)
    if (in_c[v]) pc.members.push_back(v);
  return pc;
}

EccEstimate estimate_eccentricities(const Graph& g, const PseudoCenter& center, const PseudoCenterConfig& cfg,
                                    const Bootstrap& boot, Accounting& acct) {
  if (center.members.empty()) throw std::invalid_argument("estimate_eccentricities: empty pseudo-center");
  const NodeId n = g.node_count();
  const SsspEngine engine = cfg.sssp_engine();
  std::vector<Distance> from_c(n, Distance::inf()), to_c(n, Distance(0)), d;
  for (NodeId c : center.members) {
    run_engine(engine, g, c, Direction::outward, boot, acct, d);
    for (NodeId v = 0; v < n; ++v) from_c[v] = std::min(from_c[v], d[v]);
    run_engine(engine, g, c, Direction::inward, boot, acct, d);
    for (NodeId v = 0; v < n; ++v) to_c[v] = std::max(to_c[v], d[v]);
  }

  std::vector<std::int64_t> mins(n);
  for (NodeId v = 0; v < n; ++v) mins[v] = from_c[v].value();
  auto dac = broadcast_and_aggregate(g, boot.tree, AggOp::max, mins, acct.next_config());
  acct.record("aggregate_D_A(C)", dac.report);

  EccEstimate e;
  e.d_a_of_c = dac.value.value;
  std::vector<std::vector<AggValue>> lanes(n);
  for (NodeId v = 0; v < n; ++v) {
    e.est.push_back(to_c[v].value() + e.d_a_of_c);
    lanes[v] = {AggValue::of(e.est.back(), v), AggValue::of(e.est.back(), v)};
  }
  const AggOp ops[] = {AggOp::max, AggOp::min};
  auto ext = aggregate(g, boot.tree, ops, lanes, acct.next_config());
  acct.record("aggregate_extremes", ext.report);
  e.diameter_est = ext.agreed()[0].value;
  e.radius_est = ext.agreed()[1].value;
  return e;
}

PseudoCenterRun run_pseudo_center(const Graph& g, const PseudoCenterConfig& cfg, const EngineConfig& engine_cfg) {
  PseudoCenterRun run;
  run.acct = Accounting(engine_cfg);
  auto boot = bootstrap(g, run.acct);
  run.d_prime = boot.d_prime;
  for (run.attempts = 1;; ++run.attempts) {
    try {
      run.center = compute_pseudo_center(g, cfg, boot, run.acct);
      break;
    } catch (const NonConvergence&) {
      if (run.attempts > cfg.las_vegas_retries) throw;
    }
  }
  run.estimate = estimate_eccentricities(g, run.center, cfg, boot, run.acct);
  return run;
}

}  // namespace distapx
