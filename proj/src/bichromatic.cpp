#include "distapx/bichromatic.hpp"

#include <algorithm>
#include <cmath>

namespace distapx {

std::int64_t largest_ds(Distance d_x, Distance d_z, std::int64_t cap) {
  std::int64_t best = cap;
  if (d_x.is_finite()) best = std::min(best, 5 * d_x.value() - 1);
  if (d_z.is_finite()) best = std::min(best, (5 * d_z.value() + 1) / 2 - 1);
  return std::max<std::int64_t>(0, best);
}

namespace {

constexpr Word kTagZ = 0, kTagX = 1;

// Max over `who` nodes of the distance to any source whose tag passes `want`.
std::vector<AggValue> max_lane(const MultiBfsResult& mb, const std::vector<char>& who, auto want) {
  std::vector<AggValue> lane(who.size());
  for (NodeId v = 0; v < static_cast<NodeId>(who.size()); ++v) {
    if (!who[v]) continue;
    for (std::size_t i = 0; i < mb.sources.size(); ++i) {
      if (!want(mb.tag[v][i]) || mb.dist[v][i].is_inf()) continue;
      lane[v] = combine(AggOp::max, lane[v], AggValue::of(mb.dist[v][i].value(), v));
    }
  }
  return lane;
}

}  // namespace

BichromaticResult bichromatic_unweighted(const Graph& g, const STPartition& p, const BichromaticConfig& cfg,
                                         const EngineConfig& engine_cfg) {
  if (g.directed() || g.weighted()) throw std::invalid_argument("bichromatic: graph must be unweighted and undirected");
  const NodeId n = g.node_count();
  p.validate(n, true);
  std::vector<char> in_s(n, 0), in_t(n, 0);
  for (NodeId v : p.s_set) in_s[v] = 1;
  for (NodeId v : p.t_set) in_t[v] = 1;
  const double ln = std::log(std::max<double>(n, 2));
  const double sqrt_n = std::sqrt(double(n));

  BichromaticResult r;
  r.acct = Accounting(engine_cfg);
  Accounting& acct = r.acct;
  FiveEstimates& f = r.parts;

  auto boot = bootstrap(g, acct, {std::vector<std::int64_t>(in_s.begin(), in_s.end()),
                                  std::vector<std::int64_t>(in_t.begin(), in_t.end())});
  r.d_prime = boot.d_prime;
  const std::int64_t s_count = boot.sums[0], t_count = boot.sums[1];

  // Z from S, X from T, each node with its own coin.
  const double pz = std::min(1.0, cfg.c_z * sqrt_n * ln / double(s_count));
  const double px = std::min(1.0, cfg.c_x * sqrt_n * ln / double(t_count));
  const std::uint64_t draw_seed = acct.next_config().seed;
  std::vector<char> in_zx(n, 0);
  std::vector<Word> tags(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    Rng rng(mix_seed(draw_seed, static_cast<std::uint64_t>(v)));
    if (rng.coin(in_s[v] ? pz : px)) {
      in_zx[v] = 1;
      tags[v] = in_s[v] ? kTagZ : kTagX;
      (in_s[v] ? f.z : f.x).push_back(v);
    }
  }
  auto zx_count = broadcast_and_aggregate(g, boot.tree, AggOp::sum, std::vector<std::int64_t>(in_zx.begin(), in_zx.end()),
                                          acct.next_config());
  acct.record("count_ZX", zx_count.report);

  auto mb1 = multi_bfs_phase(g, in_zx, tags, zx_count.value.value, boot.d_prime, acct.next_config());
  acct.record("multi_bfs_ZX", mb1.report);

  // Keys: s(x) for each x in X, then D1, then argmax D_s.
  std::vector<std::size_t> x_index;  // positions of X among mb1 sources
  for (std::size_t i = 0; i < mb1.sources.size(); ++i)
    if (mb1.tag[0][i] == kTagX) x_index.push_back(i);
  const std::size_t nx = x_index.size();
  std::vector<AggOp> ops(nx, AggOp::min);
  ops.push_back(AggOp::max);
  ops.push_back(AggOp::max);
  auto d1_lane = max_lane(mb1, in_t, [](Word t) { return t == kTagZ; });
  std::vector<std::vector<AggValue>> inputs(n);
  for (NodeId v = 0; v < n; ++v) {
    Distance dz = Distance::inf(), dx = Distance::inf();
    for (std::size_t i = 0; i < mb1.sources.size(); ++i) {
      (mb1.tag[v][i] == kTagZ ? dz : dx) = std::min(mb1.tag[v][i] == kTagZ ? dz : dx, mb1.dist[v][i]);
    }
    for (std::size_t k = 0; k < nx; ++k) {
      inputs[v].push_back(in_s[v] ? AggValue::of(mb1.dist[v][x_index[k]].value(), v) : AggValue{});
    }
    inputs[v].push_back(d1_lane[v]);
    inputs[v].push_back(in_s[v] ? AggValue::of(largest_ds(dx, dz, 5 * std::int64_t(n)), v) : AggValue{});
  }
  auto agg1 = aggregate(g, boot.tree, ops, inputs, acct.next_config());
  acct.record("aggregate_s_of_x_D1_w", agg1.report);
  const auto& res1 = agg1.agreed();
  for (std::size_t k = 0; k < nx; ++k) f.s_of.push_back(res1[k].id);
  f.d[0] = res1[nx].present ? res1[nx].value : 0;
  f.w = res1[nx + 1].id;
  f.d_w = res1[nx + 1].value;

  // D2: BFS from every s(x).
  std::vector<char> is_sx(n, 0);
  for (NodeId s : f.s_of) is_sx[s] = 1;
  auto mb2 = multi_bfs_phase(g, is_sx, {}, static_cast<std::int64_t>(nx), boot.d_prime, acct.next_config());
  acct.record("multi_bfs_s_of_x", mb2.report);
  auto d2_lane = max_lane(mb2, in_t, [](Word) { return true; });

  auto tree_w = bfs(g, f.w, acct.next_config());
  acct.record("bfs_w", tree_w.report);
  std::vector<char> in_sw(n, 0), in_tw(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const std::int64_t d = tree_w.tree[v].depth.value();
    in_sw[v] = in_s[v] && 5 * d <= 2 * f.d_w;
    in_tw[v] = in_t[v] && 5 * d <= f.d_w;
  }
  {
    const AggOp ops2[] = {AggOp::max, AggOp::sum, AggOp::sum};
    std::vector<std::vector<AggValue>> in2(n);
    for (NodeId v = 0; v < n; ++v) in2[v] = {d2_lane[v], AggValue::of(in_sw[v], v), AggValue::of(in_tw[v], v)};
    auto agg2 = aggregate(g, boot.tree, ops2, in2, acct.next_config());
    acct.record("aggregate_D2_sizes", agg2.report);
    const auto& res2 = agg2.agreed();
    f.d[1] = res2[0].present ? res2[0].value : 0;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (in_sw[v]) f.s_w.push_back(v);
    if (in_tw[v]) f.t_w.push_back(v);
  }
  const double limit = cfg.size_warn_c * sqrt_n;
  f.size_warning = double(f.s_w.size()) > limit || double(f.t_w.size()) > limit;

  // D3 from S_w, then t(s) for each s in S_w.
  const auto nsw = static_cast<std::int64_t>(f.s_w.size());
  auto mb3 = multi_bfs_phase(g, in_sw, {}, nsw, boot.d_prime, acct.next_config());
  acct.record("multi_bfs_S_w", mb3.report);
  auto d3_lane = max_lane(mb3, in_t, [](Word) { return true; });
  {
    std::vector<AggOp> ops3(mb3.sources.size(), AggOp::min);
    ops3.push_back(AggOp::max);
    std::vector<std::vector<AggValue>> in3(n);
    for (NodeId v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < mb3.sources.size(); ++i) {
        in3[v].push_back(in_t[v] ? AggValue::of(mb3.dist[v][i].value(), v) : AggValue{});
      }
      in3[v].push_back(d3_lane[v]);
    }
    auto agg3 = aggregate(g, boot.tree, ops3, in3, acct.next_config());
    acct.record("aggregate_t_of_s_D3", agg3.report);
    const auto& res3 = agg3.agreed();
    for (std::size_t i = 0; i < mb3.sources.size(); ++i) f.t_of.push_back(res3[i].id);
    f.d[2] = res3.back().present ? res3.back().value : 0;
  }

  // D4 from {t(s)} and D5 from T_w in one pipelined run; the tag says which.
  std::vector<char> src4(n, 0);
  std::vector<Word> tag4(n, 0);
  std::vector<int> bits(n, 0);
  for (NodeId t : f.t_of) bits[t] |= 1;
  for (NodeId t : f.t_w) bits[t] |= 2;
  for (NodeId v = 0; v < n; ++v) {
    src4[v] = bits[v] != 0;
    tag4[v] = bits[v] ? bits[v] - 1 : 0;  // 0: t(s), 1: T_w, 2: both
  }
  auto mb4 = multi_bfs_phase(g, src4, tag4, nsw + static_cast<std::int64_t>(f.t_w.size()), boot.d_prime,
                             acct.next_config());
  acct.record("multi_bfs_t_of_s_T_w", mb4.report);
  auto d4_lane = max_lane(mb4, in_s, [](Word t) { return t != 1; });
  auto d5_lane = max_lane(mb4, in_s, [](Word t) { return t != 0; });
  {
    const AggOp ops4[] = {AggOp::max, AggOp::max};
    std::vector<std::vector<AggValue>> in4(n);
    for (NodeId v = 0; v < n; ++v) in4[v] = {d4_lane[v], d5_lane[v]};
    auto agg4 = aggregate(g, boot.tree, ops4, in4, acct.next_config());
    acct.record("aggregate_D4_D5", agg4.report);
    const auto& res4 = agg4.agreed();
    f.d[3] = res4[0].present ? res4[0].value : 0;
    f.d[4] = res4[1].present ? res4[1].value : 0;
  }
  r.estimate = *std::max_element(std::begin(f.d), std::end(f.d));
  return r;
}

WeightedBichromaticResult bichromatic_weighted(const Graph& g, const STPartition& p, const SsspEngine& engine,
                                               const EngineConfig& engine_cfg) {
  if (g.directed()) throw std::invalid_argument("weighted bichromatic: only undirected graphs are supported");
  const NodeId n = g.node_count();
  p.validate(n, true);
  std::vector<char> in_s(n, 0);
  for (NodeId v : p.s_set) in_s[v] = 1;

  WeightedBichromaticResult r;
  r.acct = Accounting(engine_cfg);
  auto boot = bootstrap(g, r.acct);
  r.d_prime = boot.d_prime;

  auto edge = min_crossing_edge(g, in_s, boot.d_prime, r.acct.next_config());
  r.acct.record("min_edge_flood", edge.report);
  r.flood_rounds = edge.report.rounds;
  if (!edge.found) throw NoCrossingEdge("no edge crosses S x T; D_ST is undefined");
  r.s = edge.s;
  r.t = edge.t;
  r.w = edge.w;

  auto note = [&](const char* name, const SsspRun& run) {
    if (run.measured) {
      r.acct.record(name, run.report);
    } else {
      r.acct.charge(name, run.rounds);
    }
  };
  auto to_t = sssp(engine, g, r.t, Direction::inward, boot.d_prime, r.acct.next_config());
  note("sssp_to_t", to_t);
  auto from_s = sssp(engine, g, r.s, Direction::outward, boot.d_prime, r.acct.next_config());
  note("sssp_from_s", from_s);

  const AggOp ops[] = {AggOp::max, AggOp::max};
  std::vector<std::vector<AggValue>> inputs(n);
  for (NodeId v = 0; v < n; ++v) {
    const Distance a = to_t.dv.dist[v], b = from_s.dv.dist[v];
    if (a.is_inf() || b.is_inf()) throw AggregationError("weighted bichromatic: graph is disconnected");
    inputs[v] = {in_s[v] ? AggValue::of(a.value(), v) : AggValue{}, in_s[v] ? AggValue{} : AggValue::of(b.value(), v)};
  }
  auto agg = aggregate(g, boot.tree, ops, inputs, r.acct.next_config());
  r.acct.record("aggregate_estimate", agg.report);
  r.estimate = std::max(agg.agreed()[0].value, agg.agreed()[1].value);
  return r;
}

}  // namespace distapx
