#include "distapx/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>

#include "distapx/generators.hpp"
#include "distapx/oracle.hpp"

namespace distapx {

const char* gap_parameter_name(GapParameter p) {
  switch (p) {
    case GapParameter::radius: return "radius";
    case GapParameter::diameter: return "diameter";
    case GapParameter::st_diameter: return "st_diameter";
    case GapParameter::all_eccentricities: return "all_eccentricities";
  }
  return "?";
}

const char* scsv_target_name(ScsvTarget t) {
  switch (t) {
    case ScsvTarget::weighted_diameter: return "weighted_diameter";
    case ScsvTarget::directed_bichromatic: return "directed_bichromatic";
    case ScsvTarget::directed_diameter: return "directed_diameter";
  }
  return "?";
}

int tribes_t(double eps) {
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("tribes gadget: eps must be in (0, 1]");
  return static_cast<int>(std::ceil(4.0 / eps - 1e-12));
}

namespace {

template <class Pred>
int least_t(Pred ok, int from, const char* who) {
  for (int t = from; t < 1000000; ++t)
    if (ok(double(t))) return t;
  throw std::invalid_argument(std::string(who) + ": no t satisfies the gap for this eps");
}

void check_eps(double eps, const char* who) {
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument(std::string(who) + ": eps must be in (0, 1]");
}

}  // namespace

int hse_t(double eps) {
  check_eps(eps, "hse gadget");
  return least_t([&](double t) { return (2 * t + 4) / (t + 4) > 2 - eps; }, 1, "hse gadget");
}

int ov_undirected_t(double eps) {
  check_eps(eps, "ov gadget");
  return least_t([&](double t) { return (5 * t + 1) / (3 * t + 1) > 5.0 / 3.0 - eps; }, 1, "ov gadget");
}

int ov_directed_t(double eps) {
  check_eps(eps, "ov gadget");
  return least_t([&](double t) { return (2 * t + 3) / (t + 3) >= 2 - eps; }, 3, "ov gadget");
}

std::int64_t GadgetBundle::cut_size() const {
  std::vector<char> side(graph.node_count(), 0);
  for (NodeId v : alice_nodes) side[v] = 1;
  for (NodeId v : bob_nodes) side[v] = 2;
  std::int64_t cut = 0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (side[v] != 1) continue;
    for (const Link& l : graph.links(v)) cut += side[l.peer] == 2;
  }
  return cut;
}

namespace {

struct Builder {
  NodeId n = 0;
  std::vector<Edge> edges;
  std::vector<NodeId> alice, bob;

  NodeId add(bool alice_side) {
    (alice_side ? alice : bob).push_back(n);
    return n++;
  }
  void edge(NodeId u, NodeId v, Weight w = 1) { edges.push_back({u, v, w}); }

  // u = x_0, x_1, ..., x_len = v with len-1 fresh nodes in between.
  void path(NodeId u, NodeId v, int len, bool alice_side) {
    NodeId prev = u;
    for (int k = 1; k < len; ++k) {
      NodeId mid = add(alice_side);
      edge(prev, mid);
      prev = mid;
    }
    edge(prev, v);
  }

  Graph finish(GraphKind kind) const { return Graph(n, kind, edges); }
};

std::vector<int> columns_with_one(const BitMatrix& m, int d) {
  std::vector<int> keep;
  for (int c = 0; c < d; ++c) {
    if (std::any_of(m.begin(), m.end(), [&](const auto& row) { return row[c] != 0; })) keep.push_back(c);
  }
  return keep;
}

void expect_kind(const CCInstance& inst, CCKind kind, const char* who) {
  inst.validate();
  if (inst.kind != kind) throw std::invalid_argument(std::string(who) + ": expected a " + cc_kind_name(kind) + " instance");
}

}  // namespace

GadgetBundle build_tribes_radius_gadget(const CCInstance& inst, double eps, int t_override) {
  expect_kind(inst, CCKind::tribes, "tribes gadget");
  const int t = t_override > 0 ? t_override : tribes_t(eps);
  const int n = inst.n;
  Builder b;
  std::vector<NodeId> a0(n), a1(n), b0(n), b1(n);
  for (auto& v : a0) v = b.add(true);
  for (auto& v : a1) v = b.add(true);
  const NodeId ca = b.add(true);
  for (auto& v : b0) v = b.add(false);
  for (auto& v : b1) v = b.add(false);
  const NodeId cb = b.add(false);

  for (const auto* k : {&a0, &a1, &b0, &b1})
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) b.edge((*k)[i], (*k)[j], t);
  for (int i = 0; i < n; ++i) {
    b.edge(a0[i], ca, t);
    b.edge(b0[i], cb, t);
    b.edge(a0[i], b0[i], 1);
    b.edge(a1[i], b1[i], 1);
    for (int j = 0; j < n; ++j) {
      if (!inst.alice[i][j]) b.edge(a0[i], a1[j], t);
      if (!inst.bob[i][j]) b.edge(b0[i], b1[j], t);
    }
  }
  b.edge(ca, cb, 1);

  GadgetBundle g;
  g.family = "tribes_radius";
  g.graph = b.finish({false, true});
  g.alice_nodes = b.alice;
  g.bob_nodes = b.bob;
  g.t = t;
  g.predicted = {GapParameter::radius, Distance(t + 2), false, Distance(2 * t), true};
  g.truth = eval_cc(inst);
  g.params = {{"N", n}, {"eps", eps}, {"t", t}};
  return g;
}

GadgetBundle build_hse_radius_gadget(const CCInstance& inst, double eps, int t_override) {
  expect_kind(inst, CCKind::hse, "hse gadget");
  const int t = t_override > 0 ? t_override : hse_t(eps);
  const std::vector<int> keep = columns_with_one(inst.alice, inst.d);
  if (keep.empty()) throw DegenerateInstance("hse gadget: every coordinate is 0 in all of A");

  Builder b;
  auto make_path = [&](bool alice_side) {
    std::vector<NodeId> p(t + 1);
    for (auto& v : p) v = b.add(alice_side);
    for (int k = 0; k < t; ++k) b.edge(p[k], p[k + 1]);
    return p;
  };
  std::vector<std::vector<NodeId>> ap, bp;
  for (int i = 0; i < inst.n; ++i) ap.push_back(make_path(true));
  const NodeId x = b.add(true);
  std::vector<NodeId> ca(keep.size()), cb(keep.size());
  for (auto& v : ca) v = b.add(true);
  for (int i = 0; i < inst.n; ++i) bp.push_back(make_path(false));
  for (auto& v : cb) v = b.add(false);

  for (int i = 0; i < inst.n; ++i) {
    b.edge(ap[i][t], x);
    b.edge(x, ap[i][0]);
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    b.edge(ca[k], cb[k]);
    for (int i = 0; i < inst.n; ++i) {
      if (inst.alice[i][keep[k]]) b.edge(ap[i][t], ca[k]);
      if (inst.bob[i][keep[k]]) b.edge(cb[k], bp[i][0]);
    }
  }

  GadgetBundle g;
  g.family = "hse_radius";
  g.graph = b.finish({true, false});
  g.alice_nodes = b.alice;
  g.bob_nodes = b.bob;
  g.t = t;
  g.predicted = {GapParameter::radius, Distance(t + 4), false, Distance(2 * t + 4), true};
  g.truth = eval_cc(inst);
  g.params = {{"N", inst.n}, {"d", inst.d}, {"kept_coordinates", keep}, {"eps", eps}, {"t", t}};
  return g;
}

GadgetBundle build_ov_bichromatic_gadget(const CCInstance& inst, double eps, OvVariant variant, int t_override) {
  expect_kind(inst, CCKind::ov, "ov gadget");
  const bool directed = variant == OvVariant::directed;
  const int t = t_override > 0 ? t_override : directed ? ov_directed_t(eps) : ov_undirected_t(eps);
  if (directed && t < 3) throw std::invalid_argument("ov gadget (directed): t must be >= 3 so the return path has length t-2 >= 1");
  if (t < 1) throw std::invalid_argument("ov gadget: t must be >= 1");

  BitMatrix a = inst.alice, bm = inst.bob;
  bool added_hat = false;
  if (!directed) {
    bool has_hat = false;
    for (int c = 0; c < inst.d && !has_hat; ++c) {
      has_hat = std::all_of(a.begin(), a.end(), [&](const auto& r) { return r[c] == 0; }) &&
                std::all_of(bm.begin(), bm.end(), [&](const auto& r) { return r[c] == 1; });
    }
    if (!has_hat) {
      for (auto& r : a) r.push_back(0);
      for (auto& r : bm) r.push_back(1);
      added_hat = true;
    }
  }
  const int d = static_cast<int>(a[0].size());
  // A coordinate no b uses has a c_B with no way down to T; it never affects
  // orthogonality, so both sides drop it.
  const std::vector<int> keep = columns_with_one(bm, d);
  if (keep.empty()) throw DegenerateInstance("ov gadget: every coordinate is 0 in all of B");

  Builder b;
  std::vector<std::vector<NodeId>> ap(inst.n, std::vector<NodeId>(t + 1));
  for (auto& p : ap) {
    for (auto& v : p) v = b.add(true);
    for (int k = 0; k < t; ++k) b.edge(p[k], p[k + 1]);
  }
  std::vector<NodeId> ca(keep.size()), cb(keep.size()), b0(inst.n), p;
  for (auto& v : ca) v = b.add(true);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (int i = 0; i < inst.n; ++i) {
      if (!a[i][keep[k]]) continue;
      if (directed) {
        b.edge(ap[i][t], ca[k]);
      } else {
        b.path(ap[i][t], ca[k], t, true);
      }
    }
  }
  for (auto& v : b0) v = b.add(false);
  for (auto& v : cb) v = b.add(false);
  if (directed) {
    p.resize(t - 1);
    for (auto& v : p) v = b.add(false);
    for (int k = 0; k + 1 < t - 1; ++k) b.edge(p[k], p[k + 1]);
    for (NodeId v : b0) b.edge(v, p.front());
    for (NodeId v : cb) b.edge(p.back(), v);
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    b.edge(ca[k], cb[k]);
    for (int i = 0; i < inst.n; ++i) {
      if (!bm[i][keep[k]]) continue;
      if (directed) {
        b.edge(cb[k], b0[i]);
      } else {
        b.path(cb[k], b0[i], t, false);
      }
    }
  }

  GadgetBundle g;
  g.family = directed ? "ov_bichromatic_directed" : "ov_bichromatic_undirected";
  g.graph = b.finish({directed, false});
  g.alice_nodes = b.alice;
  g.bob_nodes = b.bob;
  g.t = t;
  std::vector<bool> in_s(b.n, true);
  for (NodeId v : b0) in_s[v] = false;
  g.partition = STPartition::from_colors(in_s);
  if (directed) {
    g.predicted = {GapParameter::st_diameter, Distance(t + 3), true, Distance(2 * t + 3), false};
  } else {
    g.predicted = {GapParameter::st_diameter, Distance(3 * t + 1), true, Distance(5 * t + 1), false};
  }
  g.truth = eval_cc(inst);
  g.params = {{"N", inst.n}, {"d", inst.d}, {"kept_coordinates", keep}, {"added_hat", added_hat},
              {"eps", eps}, {"t", t}};
  return g;
}

namespace {

bool spanning_connected(NodeId n, const std::vector<Edge>& h) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : h) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n, 0);
  std::queue<NodeId> q;
  q.push(0);
  seen[0] = 1;
  NodeId reached = 1;
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop();
    for (NodeId v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

}  // namespace

GadgetBundle build_scsv_reduction(const Graph& g, const std::vector<Edge>& h_edges, ScsvTarget target, double alpha,
                                  NodeId anchor) {
  if (g.directed()) throw std::invalid_argument("scsv reduction: g must be undirected");
  const NodeId n = g.node_count();
  if (n < 1 || hop_diameter(g).is_inf()) throw std::invalid_argument("scsv reduction: g must be connected");
  if (!g.valid(anchor)) throw std::invalid_argument("scsv reduction: anchor out of range");
  if (!(alpha >= 1)) throw std::invalid_argument("scsv reduction: alpha must be >= 1");
  std::set<std::pair<NodeId, NodeId>> in_h;
  for (const Edge& e : h_edges) {
    if (!g.valid(e.u) || !g.valid(e.v) || !g.has_arc(e.u, e.v)) {
      throw std::invalid_argument("scsv reduction: H edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " is not an edge of g");
    }
    in_h.insert(std::minmax(e.u, e.v));
  }

  GadgetBundle out;
  out.family = std::string("scsv_") + scsv_target_name(target);
  out.truth = spanning_connected(n, h_edges);
  out.params = {{"n", n}, {"h_edges", in_h.size()}, {"target", scsv_target_name(target)}};
  std::vector<Edge> edges;

  if (target == ScsvTarget::weighted_diameter) {
    const auto heavy = static_cast<Weight>(std::ceil(double(n) * alpha));
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, in_h.count(std::minmax(e.u, e.v)) ? 1 : heavy});
    out.graph = Graph(n, {false, true}, edges);
    out.predicted = {GapParameter::all_eccentricities, Distance(n - 1), false, Distance(heavy), true};
    out.params["alpha"] = alpha;
    out.params["heavy_weight"] = heavy;
    return out;
  }

  // v_G = v, v_H = n + v.
  for (NodeId v = 0; v < n; ++v) edges.push_back({n + v, v, 1});
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, e.v, 1});
    edges.push_back({e.v, e.u, 1});
  }
  for (const auto& [u, v] : in_h) {
    edges.push_back({n + u, n + v, 1});
    edges.push_back({n + v, n + u, 1});
  }
  out.params["anchor"] = anchor;
  if (target == ScsvTarget::directed_bichromatic) {
    out.graph = Graph(2 * n, {true, false}, edges);
    std::vector<bool> in_s(2 * n, false);
    in_s[n + anchor] = true;
    out.partition = STPartition::from_colors(in_s);
    out.predicted = {GapParameter::st_diameter, Distance(n), false, Distance::inf(), true};
  } else {
    edges.push_back({anchor, n + anchor, 1});
    out.graph = Graph(2 * n, {true, false}, edges);
    out.predicted = {GapParameter::diameter, Distance(2 * n + 1), false, Distance::inf(), true};
  }
  return out;
}

ScsvInstance random_scsv_instance(NodeId n, double p, Rng& rng, double p_break) {
  ScsvInstance inst;
  inst.g = gnp(n, p, rng);
  std::vector<Edge> edges(inst.g.edges().begin(), inst.g.edges().end());
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng.range(0, i - 1)]);
  std::vector<NodeId> parent(n);
  for (NodeId v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<Edge> tree, extra;
  for (const Edge& e : edges) {
    const NodeId a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      tree.push_back(e);
    } else if (rng.coin(0.3)) {
      extra.push_back(e);
    }
  }
  if (!tree.empty() && rng.coin(p_break)) {
    const int cuts = 1 + static_cast<int>(rng.range(0, 1));
    for (int c = 0; c < cuts && !tree.empty(); ++c) tree.erase(tree.begin() + rng.range(0, tree.size() - 1));
  }
  inst.h = tree;
  inst.h.insert(inst.h.end(), extra.begin(), extra.end());
  return inst;
}

GapReport verify_gap(const GadgetBundle& b, std::size_t max_arcs) {
  const Graph& g = b.graph;
  if (g.arc_count() > max_arcs) {
    throw OversizeBundle("verify_gap: " + b.family + " has n=" + std::to_string(g.node_count()) +
                         " and " + std::to_string(g.arc_count()) + " arcs, above the limit of " +
                         std::to_string(max_arcs));
  }
  GapReport r;
  r.predicted_yes = b.truth == b.predicted.yes_when_truth;
  switch (b.predicted.parameter) {
    case GapParameter::radius: r.value = radius(g); break;
    case GapParameter::diameter: r.value = diameter(g); break;
    case GapParameter::st_diameter:
      if (!b.partition) throw std::invalid_argument("verify_gap: st_diameter needs a partition");
      r.value = st_diameter(g, *b.partition);
      break;
    case GapParameter::all_eccentricities: {
      const auto ecc = all_eccentricities(g, Execution::parallel);
      r.value = r.predicted_yes ? *std::max_element(ecc.begin(), ecc.end()) : *std::min_element(ecc.begin(), ecc.end());
      break;
    }
  }
  const GapPrediction& p = b.predicted;
  if (r.predicted_yes) {
    r.pass = r.value.is_finite() && (p.yes_exact ? r.value == p.yes_value : r.value <= p.yes_value);
  } else {
    r.pass = p.no_bound.is_inf() ? r.value.is_inf() : r.value >= p.no_bound;
  }
  return r;
}

namespace {

nlohmann::json dist_json(Distance d) { return d.is_inf() ? nlohmann::json("INF") : nlohmann::json(d.value()); }

}  // namespace

nlohmann::json bundle_sidecar(const GadgetBundle& b, const GapReport* report) {
  nlohmann::json j;
  j["family"] = b.family;
  j["params"] = b.params;
  j["nodes"] = b.graph.node_count();
  j["arcs"] = b.graph.arc_count();
  j["partition"] = b.partition ? nlohmann::json{{"S", b.partition->s_set}, {"T", b.partition->t_set}} : nlohmann::json();
  j["predicted"] = {{"parameter", gap_parameter_name(b.predicted.parameter)},
                    {"yes_value", dist_json(b.predicted.yes_value)},
                    {"yes_exact", b.predicted.yes_exact},
                    {"no_bound", dist_json(b.predicted.no_bound)},
                    {"yes_when_truth", b.predicted.yes_when_truth}};
  j["truth"] = b.truth;
  j["alice_nodes"] = b.alice_nodes;
  j["bob_nodes"] = b.bob_nodes;
  j["cut_size"] = b.cut_size();
  if (report) {
    j["report"] = {{"value", dist_json(report->value)}, {"predicted_side", report->predicted_yes ? "yes" : "no"},
                   {"pass", report->pass}};
  }
  return j;
}

void export_bundle(const GadgetBundle& b, const std::string& prefix) {
  write_graph_file(prefix + ".graph", b.graph);
  std::ofstream out(prefix + ".json");
  if (!out) throw std::runtime_error("cannot write " + prefix + ".json");
  out << bundle_sidecar(b).dump(2) << '\n';
}

}  // namespace distapx
