#include "distapx/cairo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "distapx/oracle.hpp"

namespace distapx {

double CairoConfig::diameter_factor() const { return 2.0 - 1.0 / std::ldexp(1.0, k); }
double CairoConfig::ecc_factor() const { return 3.0 - 4.0 / (std::ldexp(1.0, k) + 1.0); }

CairoResult cairo_estimate(const Graph& g, const CairoConfig& cfg, const EngineConfig& engine_cfg) {
  if (g.directed() || g.weighted()) throw std::invalid_argument("cairo: graph must be unweighted and undirected");
  const NodeId n = g.node_count();
  const double ln = std::log(std::max<double>(n, 2));
  if (cfg.k < 1 || cfg.k > std::max(1.0, std::floor(ln))) {
    throw std::invalid_argument("cairo: need 1 <= k <= ln n (k=" + std::to_string(cfg.k) + ")");
  }

  CairoResult r;
  r.acct = Accounting(engine_cfg);
  auto boot = bootstrap(g, r.acct);
  r.d_prime = boot.d_prime;
  const double exp = 1.0 / (cfg.k + 1);
  r.q = cfg.alt_q ? std::pow(double(n), exp) / ln : std::pow(double(n) / ln, exp);
  r.q = std::max(r.q, 1.0);
  const double p = std::min(1.0, r.q * ln / n);

  std::vector<char> in_w(n, 1), is_root(n, 0);
  std::int64_t ell = n;
  std::int64_t roots_upper = n;

  for (int i = 0; i < cfg.k; ++i) {
    CairoIteration it;
    it.ell = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(double(ell) / r.q)));
    for (int attempt = 0;; ++attempt) {
      if (attempt >= cfg.retry_cap) {
        throw CairoNonConvergence("cairo: iteration " + std::to_string(i) + " failed " + std::to_string(attempt) +
                                  " times");
      }
      CairoAttempt a;
      const std::uint64_t draw_seed = r.acct.next_config().seed;
      std::vector<char> in_s(n, 0), in_z(n, 0);
      it.sample_size = 0;
      for (NodeId v = 0; v < n; ++v) {
        Rng rng(mix_seed(draw_seed, static_cast<std::uint64_t>(v)));
        in_s[v] = in_w[v] && rng.coin(cfg.rate_by_ell ? std::min(1.0, r.q * ln / double(ell)) : p);
        in_z[v] = !in_w[v] || in_s[v];
        it.sample_size += in_s[v];
      }

      auto elect = elect_farthest_phase(g, boot.tree, in_z, boot.d_prime, r.acct.next_config());
      r.acct.record("elect_w" + std::to_string(i + 1), elect.report);
      a.rounds += elect.report.rounds;
      if (elect.empty) {
        a.empty_z = true;
        it.attempts.push_back(a);
        continue;
      }
      it.w = elect.winner;
      it.w_distance = elect.distance;

      auto tree = bfs(g, it.w, r.acct.next_config());
      r.acct.record("bfs_w" + std::to_string(i + 1), tree.report);
      a.rounds += tree.report.rounds;

      std::vector<char> counted(n, 0);
      for (NodeId v = 0; v < n; ++v) counted[v] = is_root[v] || in_s[v] || v == it.w;
      auto sel = select_closest_set_phase(g, tree.tree, it.ell, in_z, counted, r.acct.next_config());
      r.acct.record("select_W" + std::to_string(i + 1), sel.report);
      a.rounds += sel.report.rounds;
      a.pass = sel.pass;
      it.attempts.push_back(a);
      if (!sel.pass) continue;

      for (NodeId v = 0; v < n; ++v) {
        if (in_s[v] || v == it.w) is_root[v] = 1;
        in_w[v] = sel.member[v];
      }
      roots_upper = sel.marked_upper;
      break;
    }
    ell = it.ell;
    r.iterations.push_back(std::move(it));
  }
  for (NodeId v = 0; v < n; ++v)
    if (in_w[v]) is_root[v] = 1;  // S_k = W_k
  r.roots_upper = roots_upper;

  auto mb = multi_bfs_phase(g, is_root, {}, roots_upper, boot.d_prime, r.acct.next_config());
  r.acct.record("multi_bfs_roots", mb.report);
  r.roots = mb.sources;
  const std::size_t nr = r.roots.size();

  // Keys 0..nr-1: max distance to each root (its eccentricity); key nr: min
  // estimate over non-roots.
  std::vector<AggOp> ops(nr, AggOp::max);
  ops.push_back(AggOp::min);
  std::vector<std::vector<AggValue>> inputs(n);
  std::vector<std::int64_t> own_est(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < nr; ++i) {
      const Distance d = mb.dist[v][i];
      if (d.is_inf()) throw AggregationError("cairo: a root is unreachable");
      inputs[v].push_back(AggValue::of(d.value(), v));
      own_est[v] = std::max(own_est[v], d.value());
    }
    inputs[v].push_back(is_root[v] ? AggValue{} : AggValue::of(own_est[v], v));
  }
  auto fin = aggregate(g, boot.tree, ops, inputs, r.acct.next_config());
  r.acct.record("aggregate_estimates", fin.report);

  r.est_ecc.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto& res = fin.at_node[v];
    std::int64_t d_hat = 0, r_roots = INT64_MAX;
    for (std::size_t i = 0; i < nr; ++i) {
      d_hat = std::max(d_hat, res[i].value);
      r_roots = std::min(r_roots, res[i].value);
    }
    const int self = mb.index_of(v);
    r.est_ecc[v] = self >= 0 ? res[self].value : own_est[v];
    if (v == 0) {
      r.d_hat = d_hat;
      r.r_hat_roots = r_roots;
      r.r_hat = res[nr].present ? std::min(r_roots, res[nr].value) : r_roots;
    }
  }
  fin.agreed();
  return r;
}

CairoCheck check_cairo(const Graph& g, const CairoConfig& cfg, const CairoResult& r) {
  CairoCheck c;
  const auto ecc = all_eccentricities(g);
  c.diameter = std::max_element(ecc.begin(), ecc.end())->value();
  c.radius = std::min_element(ecc.begin(), ecc.end())->value();
  const double df = cfg.diameter_factor(), ef = cfg.ecc_factor();
  auto within = [&](double a, double b, double f) { return std::max(a, b) <= f * std::min(a, b) + cfg.slack; };

  c.d_hat_le_d = r.d_hat <= c.diameter;
  c.diameter_ratio = within(double(c.diameter), double(r.d_hat), df);
  c.ecc_ratio = true;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double e = double(ecc[v].value()), est = double(r.est_ecc[v]);
    if (r.est_ecc[v] > ecc[v].value() || e > ef * est + cfg.slack) c.ecc_ratio = false;
    if (est > 0) c.worst_ecc_ratio = std::max(c.worst_ecc_ratio, e / est);
  }
  c.radius_by_roots = within(double(c.radius), double(r.r_hat_roots), df);
  c.radius_ratio = within(double(c.radius), double(r.r_hat), df) || c.radius_by_roots;
  c.per_iteration_rounds = true;
  for (const auto& it : r.iterations) {
    for (const auto& a : it.attempts) {
      if (a.rounds > 6 * r.d_prime) c.per_iteration_rounds = false;
    }
  }
  const NodeId n = g.node_count();
  const double denom = std::pow(double(n), 1.0 / (cfg.k + 1)) * std::log(std::max<double>(n, 2)) + double(c.diameter);
  c.c = double(r.acct.total_rounds()) / denom;
  return c;
}

}  // namespace distapx
