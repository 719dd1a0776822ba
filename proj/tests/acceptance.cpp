// One PASS/FAIL line per acceptance criterion. Every check compares against
// the independent references in support.hpp; tolerances are pinned below.
//
//   acceptance            run all criteria
//   acceptance 4 7        run only the listed criteria
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "distapx/bichromatic.hpp"
#include "distapx/cairo.hpp"
#include "distapx/gadgets.hpp"
#include "distapx/generators.hpp"
#include "distapx/oracle.hpp"
#include "distapx/pseudo_center.hpp"
#include "support.hpp"

using namespace distapx;

namespace {

// ---- pinned tolerances ------------------------------------------------------
constexpr double kCairoSlack = 4.0;
constexpr double kCairoMaxC = 10.0;
constexpr double kBichromaticSlack = 5.0;
constexpr double kBichromaticMaxC = 10.0;
constexpr double kSampleSizeC = 8.0;
constexpr double kCenterSizeC = 80.0;
constexpr double kMultiBfsC = 4.0;
constexpr double kFloodC = 3.0;
constexpr int kWords = 4;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Bandwidth accounting shared by every battery (criterion 7).
struct {
  std::int64_t runs = 0;
  std::size_t violations = 0;
  std::size_t max_words = 0;
} g_bandwidth;

void note(const Accounting& acct) {
  ++g_bandwidth.runs;
  g_bandwidth.violations += acct.violations();
  g_bandwidth.max_words = std::max(g_bandwidth.max_words, acct.max_words());
}

EngineConfig engine(std::uint64_t seed) {
  EngineConfig c;
  c.seed = seed;
  c.words_per_message = kWords;
  c.mode = BandwidthMode::strict;
  return c;
}

double ln(double n) { return std::log(std::max(n, 2.0)); }

std::string fmt(double x, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << std::fixed << x;
  return os.str();
}

// ---- 1. gadget gaps ---------------------------------------------------------

struct SideCount {
  int yes = 0, no = 0, bad = 0;
  std::string str() const { return std::to_string(yes) + " yes/" + std::to_string(no) + " no"; }
};

std::int64_t ref_radius(const Graph& g) { return ref::min_of(ref::eccentricities(ref::floyd(g))); }

void criterion1(Outcome& o) {
  Rng rng(0xc1);

  SideCount tribes;
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(rng.range(1, 6));
    const auto inst = random_instance(CCKind::tribes, n, n, rng, rng.uniform(0.3, 0.8));
    const auto b = build_tribes_radius_gadget(inst, 0.5);
    const bool truth = ref::tribes(inst.alice, inst.bob);
    const auto r = ref_radius(b.graph);
    const bool ok = b.t == 8 && b.truth == truth && (truth ? r <= 10 : r >= 16);
    (truth ? tribes.yes : tribes.no)++;
    tribes.bad += !ok;
  }
  o.require(tribes.bad == 0, "tribes gap");
  o.detail << "tribes t=8 " << tribes.str() << " bad=" << tribes.bad << "; ";

  SideCount hse;
  int t_hse = 0;
  for (int i = 0; i < 60;) {
    const int n = static_cast<int>(rng.range(1, 8));
    const auto inst = random_instance(CCKind::hse, n, 7, rng, rng.uniform(0.2, 0.7));
    GadgetBundle b;
    try {
      b = build_hse_radius_gadget(inst, 0.5);
    } catch (const DegenerateInstance&) {
      continue;
    }
    ++i;
    t_hse = b.t;
    const bool truth = ref::hse(inst.alice, inst.bob);
    const auto r = ref_radius(b.graph);
    const bool ok = b.truth == truth && (truth ? r <= b.t + 4 : r >= 2 * b.t + 4);
    (truth ? hse.yes : hse.no)++;
    hse.bad += !ok;
  }
  o.require(hse.bad == 0, "hse gap");
  o.detail << "hse t=" << t_hse << " " << hse.str() << " bad=" << hse.bad << "; ";

  for (OvVariant v : {OvVariant::undirected, OvVariant::directed}) {
    const bool dir = v == OvVariant::directed;
    for (double eps : {0.5, dir ? 0.25 : 0.05}) {
      SideCount ov;
      int t = 0;
      for (int i = 0; i < 60;) {
        const int n = static_cast<int>(rng.range(1, 6));
        const auto inst = random_instance(CCKind::ov, n, 6, rng, rng.uniform(0.3, 0.8));
        GadgetBundle b;
        try {
          b = build_ov_bichromatic_gadget(inst, eps, v);
        } catch (const DegenerateInstance&) {
          continue;
        }
        ++i;
        t = b.t;
        const bool pair = ref::ov(inst.alice, inst.bob);
        const auto d = ref::st_diameter(ref::floyd(b.graph), b.partition->s_set, b.partition->t_set);
        const std::int64_t small = dir ? t + 3 : 3 * t + 1, large = dir ? 2 * t + 3 : 5 * t + 1;
        const bool ok = b.truth == pair && (pair ? d >= large : d == small);
        (pair ? ov.yes : ov.no)++;
        ov.bad += !ok;
      }
      o.require(ov.bad == 0, std::string("ov ") + (dir ? "directed" : "undirected") + " gap");
      o.detail << "ov_" << (dir ? "dir" : "undir") << " t=" << t << " " << ov.no << " no-pair/" << ov.yes
               << " pair bad=" << ov.bad << "; ";
    }
  }

  int scsv_bad = 0, spanning = 0;
  const NodeId n = 12;
  const double alpha = 3.0;
  for (int i = 0; i < 100; ++i) {
    const auto inst = random_scsv_instance(n, 0.3, rng);
    const bool truth = ref::spanning_connected(n, inst.h);
    spanning += truth;
    const auto heavy = static_cast<std::int64_t>(std::ceil(n * alpha));

    const auto a = build_scsv_reduction(inst.g, inst.h, ScsvTarget::weighted_diameter, alpha);
    const auto ecc = ref::eccentricities(ref::floyd(a.graph));
    bool ok = truth ? ref::max_of(ecc) <= n - 1 : ref::min_of(ecc) >= heavy;

    const NodeId anchor = static_cast<NodeId>(rng.range(0, n - 1));
    const auto b = build_scsv_reduction(inst.g, inst.h, ScsvTarget::directed_bichromatic, alpha, anchor);
    const auto db = ref::st_diameter(ref::floyd(b.graph), b.partition->s_set, b.partition->t_set);
    ok = ok && (truth ? db < ref::kInf : db >= ref::kInf);

    const auto c = build_scsv_reduction(inst.g, inst.h, ScsvTarget::directed_diameter, alpha, anchor);
    const auto dc = ref::max_of(ref::eccentricities(ref::floyd(c.graph)));
    ok = ok && (truth ? dc < ref::kInf : dc >= ref::kInf);
    ok = ok && a.truth == truth && b.truth == truth && c.truth == truth;
    scsv_bad += !ok;
  }
  o.require(scsv_bad == 0, "scsv gap");
  o.detail << "scsv 100 pairs (" << spanning << " spanning) x 3 targets bad=" << scsv_bad;
}

// ---- 2. disjointness to hitting set ------------------------------------------

void criterion2(Outcome& o) {
  int cases = 0, bad = 0;
  auto check = [&](const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    const auto h = disj_to_hse(x, y);
    const bool disjoint = ref::disjoint(x, y);
    bad += !(disjoint == !eval_cc(h) && disjoint == !ref::hse(h.alice, h.bob));
    ++cases;
  };
  for (int n = 1; n <= 4; ++n)
    for (int xm = 0; xm < (1 << n); ++xm)
      for (int ym = 0; ym < (1 << n); ++ym) {
        std::vector<std::uint8_t> x(n), y(n);
        for (int i = 0; i < n; ++i) x[i] = xm >> i & 1, y[i] = ym >> i & 1;
        check(x, y);
      }
  const int exhaustive = cases;
  Rng rng(0xc2);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.range(1, 16));
    const double p = rng.uniform(0.05, 0.5);
    std::vector<std::uint8_t> x(n), y(n);
    for (int k = 0; k < n; ++k) x[k] = rng.coin(p), y[k] = rng.coin(p);
    check(x, y);
  }
  o.require(bad == 0, "Disj(X,Y)=1 <=> HSE=0");
  o.detail << exhaustive << " exhaustive + " << cases - exhaustive << " random cases, mismatches=" << bad;
}

// ---- 3. pseudo-center pipeline -----------------------------------------------

void criterion3(Outcome& o) {
  double worst[2] = {0, 0};
  std::size_t max_center[3] = {0, 0, 0};
  int runs = 0;
  const NodeId sizes[] = {50, 100, 200};
  for (int si = 0; si < 3; ++si) {
    const NodeId n = sizes[si];
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      Rng rng(mix_seed(seed, n));
      const Graph g = gnp(n, 3 * ln(n) / n, rng, true, {1, 20});
      const auto d = ref::floyd(g);
      const auto ecc = ref::eccentricities(d);
      for (int ei = 0; ei < 2; ++ei) {
        PseudoCenterConfig cfg;
        cfg.epsilon = ei ? 0.25 : 0.0;
        cfg.engine = ei ? SsspKind::oracle_perturbed : SsspKind::oracle_exact;
        const auto r = run_pseudo_center(g, cfg, engine(seed));
        note(r.acct);
        ++runs;
        const double alpha = (1 + cfg.epsilon) * (1 + cfg.epsilon);
        std::int64_t far = 0;
        for (NodeId u = 0; u < n; ++u) {
          std::int64_t best = ref::kInf;
          for (NodeId c : r.center.members) best = std::min(best, d[c][u]);
          far = std::max(far, best);
        }
        for (NodeId v = 0; v < n; ++v) o.require(double(far) <= alpha * double(ecc[v]), "pseudo-center invariant");
        o.require(double(r.center.members.size()) <= kCenterSizeC * ln(n) * ln(n), "|C| bound");
        max_center[si] = std::max(max_center[si], r.center.members.size());
        const double bound = 2 + std::pow(cfg.epsilon, 3) + 3 * std::pow(cfg.epsilon, 2) + 4 * cfg.epsilon;
        for (NodeId v = 0; v < n; ++v) {
          o.require(r.estimate.est[v] >= ecc[v], "est >= ecc");
          o.require(double(r.estimate.est[v]) <= bound * double(ecc[v]), "est/ecc bound");
          worst[ei] = std::max(worst[ei], double(r.estimate.est[v]) / double(ecc[v]));
        }
      }
    }
  }
  o.detail << runs << " runs; worst est/ecc " << fmt(worst[0]) << " (eps=0, bound 2) and " << fmt(worst[1])
           << " (eps=0.25, bound 3.203); max |C| n=50:" << max_center[0] << " n=100:" << max_center[1]
           << " n=200:" << max_center[2];
}

// ---- 4. Cairo estimator ------------------------------------------------------

void criterion4(Outcome& o) {
  const NodeId n = 200;
  for (const char* fixture : {"gnp", "path", "tree"}) {
    for (int k : {1, 2}) {
      double max_c = 0, worst_ecc = 0;
      int c_fail = 0, other_fail = 0;
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Rng rng(mix_seed(seed, 0xca));
        const std::string f = fixture;
        const Graph g = f == "gnp" ? gnp(n, 0.05, rng) : f == "path" ? path_graph(n) : random_tree(n, rng);
        CairoConfig cfg;
        cfg.k = k;
        cfg.slack = kCairoSlack;
        const auto r = cairo_estimate(g, cfg, engine(seed));
        note(r.acct);
        const auto ecc = ref::eccentricities(ref::hops(g));
        const std::int64_t diam = ref::max_of(ecc);
        const double df = 2 - 1.0 / (1 << k), ef = 3 - 4.0 / ((1 << k) + 1);

        bool ok = r.d_hat <= diam;
        ok = ok && double(std::max(diam, r.d_hat)) <= df * double(std::min(diam, r.d_hat)) + kCairoSlack;
        for (NodeId v = 0; v < n; ++v) {
          ok = ok && r.est_ecc[v] <= ecc[v] && double(ecc[v]) <= ef * double(r.est_ecc[v]) + kCairoSlack;
          if (r.est_ecc[v] > 0) worst_ecc = std::max(worst_ecc, double(ecc[v]) / double(r.est_ecc[v]));
        }
        for (const auto& it : r.iterations)
          for (const auto& a : it.attempts) ok = ok && a.rounds <= 6 * r.d_prime;
        const double c = double(r.acct.total_rounds()) / (std::pow(double(n), 1.0 / (k + 1)) * ln(n) + double(diam));
        max_c = std::max(max_c, c);
        c_fail += c > kCairoMaxC;
        other_fail += !ok;
      }
      o.require(other_fail == 0, std::string("cairo ratio/under-estimate/per-iteration on ") + fixture);
      o.require(c_fail == 0, std::string("cairo c <= 10 on ") + fixture + " k=" + std::to_string(k));
      o.detail << fixture << " k=" << k << ": max c " << fmt(max_c, 2) << " (" << c_fail << "/50 above 10), worst ecc ratio "
               << fmt(worst_ecc, 2) << ", ratio failures " << other_fail << "; ";
    }
  }
}

// ---- 5. bi-chromatic, unweighted ---------------------------------------------

void criterion5(Outcome& o) {
  const NodeId n = 200;
  const double size_cap = kSampleSizeC * std::sqrt(double(n)) * ln(n);
  double max_c = 0, max_ratio = 0;
  std::size_t max_sample = 0;
  int warnings = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(mix_seed(seed, 0xb1));
    const Graph g = gnp(n, 0.05, rng);
    const auto p = random_bipartition(n, rng);
    const auto r = bichromatic_unweighted(g, p, {}, engine(seed));
    note(r.acct);
    const auto hop = ref::hops(g);
    const auto dst = ref::st_diameter(hop, p.s_set, p.t_set);
    o.require(r.estimate <= dst, "estimate <= D_ST");
    o.require(double(dst) <= 5.0 / 3.0 * double(r.estimate) + kBichromaticSlack, "D_ST <= 5/3 est + 5");
    o.require(double(r.parts.z.size()) <= size_cap && double(r.parts.x.size()) <= size_cap, "|Z|,|X| bound");
    max_sample = std::max({max_sample, r.parts.z.size(), r.parts.x.size()});
    const double c = double(r.acct.total_rounds()) / (std::sqrt(double(n)) * ln(n) + double(ref::max_of(ref::eccentricities(hop))));
    max_c = std::max(max_c, c);
    o.require(c <= kBichromaticMaxC, "rounds <= 10 (sqrt(n) ln n + D)");
    max_ratio = std::max(max_ratio, double(dst) / double(std::max<std::int64_t>(r.estimate, 1)));
    warnings += r.parts.size_warning;
  }

  Rng rng(0xb2);
  int gadgets = 0;
  for (int i = 0; gadgets < 12; ++i) {
    const int N = static_cast<int>(rng.range(2, 5));
    const auto inst = random_instance(CCKind::ov, N, 5, rng, rng.uniform(0.4, 0.8));
    GadgetBundle b;
    try {
      b = build_ov_bichromatic_gadget(inst, 0.5, OvVariant::undirected, static_cast<int>(rng.range(2, 6)));
    } catch (const DegenerateInstance&) {
      continue;
    }
    ++gadgets;
    const auto r = bichromatic_unweighted(b.graph, *b.partition, {}, engine(i + 1));
    note(r.acct);
    const auto dst = ref::st_diameter(ref::hops(b.graph), b.partition->s_set, b.partition->t_set);
    o.require(!b.truth ? dst == 3 * b.t + 1 : dst >= 5 * b.t + 1, "ov fixture D_ST");
    o.require(r.estimate <= dst && double(dst) <= 5.0 / 3.0 * double(r.estimate) + kBichromaticSlack,
              "ov fixture two-sided bound");
  }
  o.detail << "30 random + " << gadgets << " OV fixtures; max D_ST/est " << fmt(max_ratio) << "; max |Z|,|X| "
           << max_sample << " (cap " << fmt(size_cap, 1) << "); max c " << fmt(max_c, 2) << "; size warnings "
           << warnings;
}

// ---- 6. bi-chromatic, weighted -----------------------------------------------

void criterion6(Outcome& o) {
  const NodeId n = 100;
  double max_ratio = 0, max_flood = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(mix_seed(seed, 0xb6));
    const Graph g = gnp(n, 0.05, rng, false, {1, 20});
    const auto p = random_bipartition(n, rng);
    const auto r = bichromatic_weighted(g, p, {}, engine(seed));
    note(r.acct);
    const auto dst = ref::st_diameter(ref::floyd(g), p.s_set, p.t_set);
    o.require(r.estimate <= dst && dst <= 2 * r.estimate + r.w, "D' <= D_ST <= 2D' + w(s,t)");
    const auto hop_d = ref::max_of(ref::eccentricities(ref::hops(g)));
    o.require(double(r.flood_rounds) <= kFloodC * double(hop_d), "flood <= 3D");
    max_ratio = std::max(max_ratio, double(dst) / double(r.estimate));
    max_flood = std::max(max_flood, double(r.flood_rounds) / double(hop_d));
  }
  o.detail << "20 runs; max D_ST/D' " << fmt(max_ratio) << "; max flood/D " << fmt(max_flood, 2);
}

// ---- 7. simulator contracts --------------------------------------------------

template <class F>
bool replays(F run) {
  EngineConfig a = engine(77), b = engine(77);
  b.exec = SimExec::openmp;
  return run(a) == run(a) && run(a) == run(b);
}

std::string dump(const Accounting& acct, const nlohmann::json& extra) {
  nlohmann::json j = acct.to_json();
  j["result"] = extra;
  return j.dump();
}

void criterion7(Outcome& o) {
  Rng rng(0xd7);
  const Graph g = gnp(80, 0.06, rng);
  const Graph gw = gnp(80, 0.06, rng, false, {1, 15});
  const Graph gd = gnp(60, 0.1, rng, true, {1, 15});
  const auto p = random_bipartition(80, rng);
  std::map<std::string, bool> det;
  det["pseudo_center"] = replays([&](EngineConfig e) {
    PseudoCenterConfig c;
    c.epsilon = 0.25;
    c.engine = SsspKind::oracle_perturbed;
    const auto r = run_pseudo_center(gd, c, e);
    note(r.acct);
    return dump(r.acct, {r.center.members, r.estimate.est});
  });
  det["cairo"] = replays([&](EngineConfig e) {
    CairoConfig c;
    c.k = 2;
    const auto r = cairo_estimate(g, c, e);
    note(r.acct);
    return dump(r.acct, {r.roots, r.est_ecc});
  });
  det["bichromatic_unweighted"] = replays([&](EngineConfig e) {
    const auto r = bichromatic_unweighted(g, p, {}, e);
    note(r.acct);
    return dump(r.acct, {r.estimate, r.parts.z, r.parts.x, r.parts.w});
  });
  det["bichromatic_weighted"] = replays([&](EngineConfig e) {
    const auto r = bichromatic_weighted(gw, p, SsspEngine{SsspKind::distributed_bellman_ford}, e);
    note(r.acct);
    return dump(r.acct, {r.estimate, r.s, r.t});
  });
  det["multi_bfs"] = replays([&](EngineConfig e) {
    const std::vector<NodeId> src = {1, 5, 9, 40};
    const auto r = multi_bfs(g, src, e);
    note(r.acct);
    return dump(r.acct, {});
  });
  int det_fail = 0;
  for (const auto& [name, ok] : det) {
    o.require(ok, "determinism of " + name);
    det_fail += !ok;
  }

  double max_ratio = 0;
  int mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng r2(mix_seed(seed, 0x3b));
    const NodeId n = static_cast<NodeId>(r2.range(40, 150));
    const Graph h = gnp(n, 4.0 / n, r2);
    std::set<NodeId> src;
    const auto want = static_cast<std::size_t>(r2.range(1, 25));
    while (src.size() < want) src.insert(static_cast<NodeId>(r2.range(0, n - 1)));
    const std::vector<NodeId> sv(src.begin(), src.end());
    const auto r = multi_bfs(h, sv, engine(seed));
    note(r.acct);
    const auto hop = ref::hops(h);
    const auto diam = ref::max_of(ref::eccentricities(hop));
    for (NodeId v = 0; v < n; ++v)
      for (std::size_t i = 0; i < sv.size(); ++i) mismatches += r.result.dist[v][i].value() != hop[sv[i]][v];
    const double bound = kMultiBfsC * double(sv.size() + diam);
    o.require(double(r.pipeline_rounds) <= bound, "multi-BFS rounds <= 4(|S|+D)");
    max_ratio = std::max(max_ratio, double(r.pipeline_rounds) / double(sv.size() + diam));
  }
  o.require(mismatches == 0, "multi-BFS distances");
  o.require(g_bandwidth.violations == 0, "zero bandwidth violations");
  o.require(g_bandwidth.max_words <= std::size_t(kWords), "messages within W");
  o.detail << "determinism " << det.size() - det_fail << "/" << det.size() << " algorithms (serial and OpenMP); "
           << "violations " << g_bandwidth.violations << " over " << g_bandwidth.runs << " strict W=4 runs, max words "
           << g_bandwidth.max_words << "; multi-BFS max rounds/(|S|+D) " << fmt(max_ratio, 2)
           << ", distance mismatches " << mismatches;
}

// ---- 8. oracle self-check ----------------------------------------------------

void criterion8(Outcome& o) {
  Rng rng(0xe8);
  int bad = 0, graphs = 0;
  for (int i = 0; i < 200; ++i) {
    const bool directed = i % 2, weighted = i / 2 % 2;
    const NodeId n = static_cast<NodeId>(rng.range(2, 64));
    const Graph g = ref::random_graph(n, rng.uniform(0.02, 0.3), directed, weighted, rng);
    ++graphs;
    const auto fw = ref::floyd(g);
    const auto ap = all_pairs(g);
    bool ok = ap == all_pairs(g, Execution::parallel);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = 0; v < n; ++v) ok = ok && ap[u][v] == ref::to_distance(fw[u][v]);
    const auto ecc = all_eccentricities(g);
    const auto recc = ref::eccentricities(fw);
    for (NodeId v = 0; v < n; ++v) ok = ok && ecc[v] == ref::to_distance(recc[v]);
    ok = ok && diameter(g) == ref::to_distance(ref::max_of(recc)) && radius(g) == ref::to_distance(ref::min_of(recc));
    const auto p = random_bipartition(n, rng);
    ok = ok && st_diameter(g, p) == ref::to_distance(ref::st_diameter(fw, p.s_set, p.t_set));
    ok = ok && st_radius(g, p) == ref::to_distance(ref::st_radius(fw, p.s_set, p.t_set));
    ok = ok && hop_diameter(g) == ref::to_distance(ref::max_of(ref::eccentricities(ref::hops(g))));
    const NodeId src = static_cast<NodeId>(rng.range(0, n - 1));
    const auto in = sssp_exact(g, src, Direction::inward).dist;
    for (NodeId v = 0; v < n; ++v) ok = ok && in[v] == ref::to_distance(fw[v][src]);
    bad += !ok;
  }
  o.require(bad == 0, "oracle vs Floyd-Warshall");
  o.detail << graphs << " graphs (4 kinds x 50), mismatching graphs " << bad;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"gadget gaps", criterion1},
      {"disjointness to hitting set", criterion2},
      {"pseudo-center pipeline", criterion3},
      {"cairo estimator", criterion4},
      {"bi-chromatic unweighted", criterion5},
      {"bi-chromatic weighted", criterion6},
      {"simulator contracts", criterion7},
      {"oracle self-check", criterion8},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << "criterion " << id << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " | "
              << o.detail.str() << " (" << fmt(secs, 1) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
