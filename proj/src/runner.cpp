#include "distapx/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "distapx/bichromatic.hpp"
#include "distapx/cairo.hpp"
#include "distapx/gadgets.hpp"
#include "distapx/generators.hpp"
#include "distapx/oracle.hpp"
#include "distapx/pseudo_center.hpp"

namespace distapx {

using nlohmann::json;

json to_json(const ExperimentConfig& c) {
  return {
      {"command", c.command},
      {"graph_file", c.graph_file},
      {"partition_file", c.partition_file},
      {"gen",
       {{"model", c.gen.model}, {"n", c.gen.n}, {"p", c.gen.p}, {"w_lo", c.gen.w_lo}, {"w_hi", c.gen.w_hi},
        {"directed", c.gen.directed}}},
      {"algorithm", c.algorithm},
      {"k", c.k},
      {"alt_q", c.alt_q},
      {"rate_by_ell", c.rate_by_ell},
      {"epsilon", c.epsilon},
      {"sssp", c.sssp},
      {"cost_scale", c.cost_scale},
      {"sample_c", c.sample_c},
      {"lower_c", c.lower_c},
      {"upper_c", c.upper_c},
      {"c_z", c.c_z},
      {"c_x", c.c_x},
      {"p_s", c.p_s},
      {"slack", c.slack},
      {"words", c.words},
      {"mode", c.mode},
      {"round_cap", c.round_cap},
      {"trials", c.trials},
      {"seed", c.seed},
      {"family", c.family},
      {"instance_file", c.instance_file},
      {"cc_n", c.cc_n},
      {"cc_d", c.cc_d},
      {"p_one", c.p_one},
      {"gadget_eps", c.gadget_eps},
      {"alpha", c.alpha},
      {"sweep", c.sweep},
      {"sweep_values", c.sweep_values},
      {"output", c.output},
  };
}

namespace {

template <class T>
std::function<void(const json&)> into(T& field) {
  return [&field](const json& v) { field = v.get<T>(); };
}

}  // namespace

void apply_json(ExperimentConfig& c, const json& j) {
  if (!j.is_object()) throw UsageError("config: expected a JSON object");
  const std::map<std::string, std::function<void(const json&)>> top = {
      {"command", into(c.command)},       {"graph_file", into(c.graph_file)},
      {"partition_file", into(c.partition_file)},
      {"algorithm", into(c.algorithm)},   {"k", into(c.k)},
      {"alt_q", into(c.alt_q)},           {"rate_by_ell", into(c.rate_by_ell)},
      {"epsilon", into(c.epsilon)},       {"sssp", into(c.sssp)},
      {"cost_scale", into(c.cost_scale)}, {"sample_c", into(c.sample_c)},
      {"lower_c", into(c.lower_c)},       {"upper_c", into(c.upper_c)},
      {"c_z", into(c.c_z)},               {"c_x", into(c.c_x)},
      {"p_s", into(c.p_s)},               {"slack", into(c.slack)},
      {"words", into(c.words)},           {"mode", into(c.mode)},
      {"round_cap", into(c.round_cap)},   {"trials", into(c.trials)},
      {"seed", into(c.seed)},             {"family", into(c.family)},
      {"instance_file", into(c.instance_file)},
      {"cc_n", into(c.cc_n)},             {"cc_d", into(c.cc_d)},
      {"p_one", into(c.p_one)},           {"gadget_eps", into(c.gadget_eps)},
      {"alpha", into(c.alpha)},           {"sweep", into(c.sweep)},
      {"sweep_values", into(c.sweep_values)},
      {"output", into(c.output)},
  };
  const std::map<std::string, std::function<void(const json&)>> gen = {
      {"model", into(c.gen.model)}, {"n", into(c.gen.n)},       {"p", into(c.gen.p)},
      {"w_lo", into(c.gen.w_lo)},   {"w_hi", into(c.gen.w_hi)}, {"directed", into(c.gen.directed)},
  };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "gen") {
        if (!value.is_object()) throw UsageError("config: \"gen\" must be an object");
        for (const auto& [gk, gv] : value.items()) {
          auto it = gen.find(gk);
          if (it == gen.end()) throw UsageError("config: unknown key gen." + gk);
          it->second(gv);
        }
        continue;
      }
      auto it = top.find(key);
      if (it == top.end()) throw UsageError("config: unknown key " + key);
      it->second(value);
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  apply_json(base, j);
  return base;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t config_hash(const ExperimentConfig& c) {
  json j = to_json(c);
  j.erase("output");  // where results go does not change them
  return fnv1a(j.dump());
}

Graph load_graph(const ExperimentConfig& c, std::uint64_t seed, int* retries) {
  if (!c.graph_file.empty()) {
    try {
      return read_graph_file(c.graph_file);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  const auto& g = c.gen;
  if (g.n < 1) throw UsageError("gen.n must be >= 1");
  if (g.w_lo < 1 || g.w_hi < g.w_lo) throw UsageError("gen: need 1 <= w_lo <= w_hi");
  Rng rng(mix_seed(seed, 0x6e));
  const WeightRange w{g.w_lo, g.w_hi};
  if (g.model == "gnp") {
    GenStats stats;
    Graph out = gnp(g.n, g.p, rng, g.directed, w, 100, &stats);
    if (retries) *retries = stats.retries;
    return out;
  }
  if (g.directed && g.model != "path") throw UsageError("gen: only gnp and path support directed graphs");
  if (g.model == "random_tree") return random_tree(g.n, rng, w);
  if (g.model == "path") return path_graph(g.n, g.directed);
  if (g.model == "clique") return clique(g.n);
  throw UsageError("gen.model must be gnp, random_tree, path or clique (got " + g.model + ")");
}

void CsvTable::write(std::ostream& out) const {
  out << "# schema=1\n";
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  auto sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [seed, cells] : sorted) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  }
}

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}
std::string num(std::int64_t x) { return std::to_string(x); }
std::string num(Distance d) { return d.str(); }
std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << x;
  return os.str();
}

EngineConfig engine_config(const ExperimentConfig& c, std::uint64_t seed) {
  EngineConfig e;
  if (c.words < 1 || c.words > 8) throw UsageError("words must be in [1, 8]");
  e.words_per_message = c.words;
  if (c.mode == "strict") {
    e.mode = BandwidthMode::strict;
  } else if (c.mode == "log_only") {
    e.mode = BandwidthMode::log_only;
  } else {
    throw UsageError("mode must be strict or log_only");
  }
  e.round_cap = c.round_cap;
  e.seed = seed;
  return e;
}

SsspKind sssp_kind(const std::string& s) {
  for (SsspKind k : {SsspKind::distributed_bellman_ford, SsspKind::oracle_exact, SsspKind::oracle_perturbed})
    if (s == sssp_kind_name(k)) return k;
  throw UsageError("sssp must be distributed_bellman_ford, oracle_exact or oracle_perturbed (got " + s + ")");
}

struct Trial {
  std::vector<std::string> cells;
  double ratio = 0;
  std::int64_t rounds = 0;
  bool pass = false;
};

const std::vector<std::string>& algorithm_header(const std::string& algo) {
  static const std::map<std::string, std::vector<std::string>> headers = {
      {"pseudo_center",
       {"center_size", "diameter", "diameter_est", "radius", "radius_est", "bound"}},
      {"cairo", {"diameter", "d_hat", "radius", "r_hat", "worst_ecc_ratio", "c"}},
      {"bichromatic_unweighted", {"d_st", "estimate", "z_size", "x_size", "size_warning", "c"}},
      {"bichromatic_weighted", {"d_st", "estimate", "w_st", "flood_rounds", "hop_diameter", "flood_ok"}},
  };
  auto it = headers.find(algo);
  if (it == headers.end()) {
    throw UsageError("algorithm must be pseudo_center, cairo, bichromatic_unweighted or bichromatic_weighted (got " +
                     algo + ")");
  }
  return it->second;
}

Trial run_trial(const ExperimentConfig& c, std::uint64_t seed, std::uint64_t hash) {
  int retries = 0;
  const Graph g = load_graph(c, seed, &retries);
  const NodeId n = g.node_count();
  const EngineConfig ecfg = engine_config(c, seed);
  const double ln = std::log(std::max<double>(n, 2));
  Trial t;
  std::vector<std::string> extra;
  std::size_t violations = 0;

  if (c.algorithm == "pseudo_center") {
    PseudoCenterConfig pc;
    pc.epsilon = c.epsilon;
    pc.engine = sssp_kind(c.sssp);
    pc.cost_scale = c.cost_scale;
    pc.sample_c = c.sample_c;
    pc.lower_c = c.lower_c;
    pc.upper_c = c.upper_c;
    PseudoCenterRun run;
    try {
      run = run_pseudo_center(g, pc, ecfg);
    } catch (const NotStronglyConnected& e) {
      throw UsageError(std::string("pseudo_center needs a strongly connected graph: ") + e.what());
    }
    const auto ecc = all_eccentricities(g);
    bool ok = double(run.center.members.size()) <= pc.size_c * ln * ln;
    for (NodeId v = 0; v < n; ++v) {
      if (run.estimate.est[v] < ecc[v].value()) ok = false;
      if (ecc[v].value() > 0) t.ratio = std::max(t.ratio, double(run.estimate.est[v]) / double(ecc[v].value()));
    }
    ok = ok && t.ratio <= pc.ratio_bound() + 1e-9;
    t.pass = ok;
    extra = {num(std::int64_t(run.center.members.size())), num(diameter(g)), num(run.estimate.diameter_est),
             num(radius(g)), num(run.estimate.radius_est), num(pc.ratio_bound())};
    t.rounds = run.acct.total_rounds();
    violations = run.acct.violations();
  } else if (c.algorithm == "cairo") {
    if (g.directed() || g.weighted()) throw UsageError("cairo requires an unweighted undirected graph");
    CairoConfig cc;
    cc.k = c.k;
    cc.alt_q = c.alt_q;
    cc.rate_by_ell = c.rate_by_ell;
    cc.slack = c.slack;
    CairoResult r;
    try {
      r = cairo_estimate(g, cc, ecfg);
    } catch (const CairoNonConvergence&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const CairoCheck chk = check_cairo(g, cc, r);
    t.pass = chk.d_hat_le_d && chk.diameter_ratio && chk.ecc_ratio && chk.per_iteration_rounds;
    t.ratio = r.d_hat > 0 ? double(chk.diameter) / double(r.d_hat) : 0;
    extra = {num(chk.diameter), num(r.d_hat), num(chk.radius), num(r.r_hat), num(chk.worst_ecc_ratio), num(chk.c)};
    t.rounds = r.acct.total_rounds();
    violations = r.acct.violations();
  } else if (c.algorithm == "bichromatic_unweighted") {
    if (g.directed() || g.weighted()) throw UsageError("bichromatic_unweighted requires an unweighted undirected graph");
    if (n < 2) throw UsageError("bichromatic_unweighted needs n >= 2");
    Rng prng(mix_seed(seed, 0x57));
    const STPartition p = random_bipartition(n, prng, c.p_s);
    BichromaticConfig bc;
    bc.c_z = c.c_z;
    bc.c_x = c.c_x;
    bc.slack = c.slack;
    const auto r = bichromatic_unweighted(g, p, bc, ecfg);
    const Distance dst = st_diameter(g, p);
    t.pass = dst.is_finite() && r.estimate <= dst.value() &&
             double(dst.value()) <= 5.0 / 3.0 * double(r.estimate) + bc.slack;
    t.ratio = r.estimate > 0 ? double(dst.value()) / double(r.estimate) : 0;
    const double denom = std::sqrt(double(n)) * ln + double(diameter(g).value());
    extra = {num(dst), num(r.estimate), num(std::int64_t(r.parts.z.size())), num(std::int64_t(r.parts.x.size())),
             r.parts.size_warning ? "1" : "0", num(double(r.acct.total_rounds()) / denom)};
    t.rounds = r.acct.total_rounds();
    violations = r.acct.violations();
  } else if (c.algorithm == "bichromatic_weighted") {
    if (g.directed()) throw UsageError("bichromatic_weighted requires an undirected graph");
    if (n < 2) throw UsageError("bichromatic_weighted needs n >= 2");
    Rng prng(mix_seed(seed, 0x57));
    const STPartition p = random_bipartition(n, prng, c.p_s);
    SsspEngine engine;
    engine.kind = sssp_kind(c.sssp);
    engine.epsilon = engine.kind == SsspKind::oracle_perturbed ? c.epsilon : 0.0;
    engine.cost_scale = c.cost_scale;
    const auto r = bichromatic_weighted(g, p, engine, ecfg);
    const Distance dst = st_diameter(g, p);
    const Distance hop_d = hop_diameter(g);
    const bool flood_ok = r.flood_rounds <= 3 * hop_d.value();
    t.pass = dst.is_finite() && r.estimate <= dst.value() && dst.value() <= 2 * r.estimate + r.w && flood_ok;
    t.ratio = r.estimate > 0 ? double(dst.value()) / double(r.estimate) : 0;
    extra = {num(dst), num(r.estimate), num(r.w), num(r.flood_rounds), num(hop_d), flood_ok ? "1" : "0"};
    t.rounds = r.acct.total_rounds();
    violations = r.acct.violations();
  } else {
    algorithm_header(c.algorithm);  // throws
  }
  if (violations > 0) t.pass = false;
  std::vector<std::string> row = {std::to_string(seed), hex(hash), num(std::int64_t(n)), num(std::int64_t(g.edge_count())),
                                  num(std::int64_t(retries)), num(t.rounds), num(std::int64_t(violations)), num(t.ratio)};
  row.insert(row.end(), extra.begin(), extra.end());
  row.push_back(t.pass ? "1" : "0");
  t.cells = std::move(row);
  return t;
}

std::vector<std::string> run_header(const std::string& algo) {
  std::vector<std::string> h = {"seed", "config_hash", "n", "m", "gen_retries", "rounds", "violations", "ratio"};
  const auto& extra = algorithm_header(algo);
  h.insert(h.end(), extra.begin(), extra.end());
  h.push_back("pass");
  return h;
}

// Runs body(i) for every trial, in parallel, rethrowing the first failure in
// trial order.
template <class Body>
void for_trials(int trials, Body body) {
  std::vector<std::exception_ptr> errors(trials);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < trials; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

BatteryResult run_algorithm_battery(const ExperimentConfig& c) {
  if (c.trials < 1) throw UsageError("trials must be >= 1");
  BatteryResult out;
  out.table.header = run_header(c.algorithm);
  const std::uint64_t hash = config_hash(c);
  std::vector<Trial> trials(c.trials);
  for_trials(c.trials, [&](int i) { trials[i] = run_trial(c, c.seed + i, hash); });
  double sum = 0;
  for (int i = 0; i < c.trials; ++i) {
    const Trial& t = trials[i];
    out.table.rows.push_back({c.seed + i, t.cells});
    out.passed += t.pass;
    sum += t.ratio;
    out.max_ratio = std::max(out.max_ratio, t.ratio);
    out.max_rounds = std::max(out.max_rounds, t.rounds);
  }
  out.trials = c.trials;
  out.mean_ratio = sum / c.trials;
  return out;
}

namespace {

CCInstance instance_from_json(const json& j) {
  CCInstance inst;
  const std::string kind = j.at("kind").get<std::string>();
  bool found = false;
  for (CCKind k : {CCKind::disj, CCKind::tribes, CCKind::ov, CCKind::hse}) {
    if (kind == cc_kind_name(k)) {
      inst.kind = k;
      found = true;
    }
  }
  if (!found) throw UsageError("instance: unknown kind " + kind);
  inst.alice = j.at("alice").get<BitMatrix>();
  inst.bob = j.at("bob").get<BitMatrix>();
  inst.n = static_cast<int>(inst.alice.size());
  inst.d = inst.n ? static_cast<int>(inst.alice[0].size()) : 0;
  inst.validate();
  return inst;
}

GadgetBundle make_bundle(const ExperimentConfig& c, const std::optional<CCInstance>& fixed, Rng& rng) {
  const std::string& f = c.family;
  if (f.rfind("scsv_", 0) == 0) {
    ScsvTarget target;
    if (f == "scsv_weighted") {
      target = ScsvTarget::weighted_diameter;
    } else if (f == "scsv_bichromatic") {
      target = ScsvTarget::directed_bichromatic;
    } else if (f == "scsv_diameter") {
      target = ScsvTarget::directed_diameter;
    } else {
      throw UsageError("unknown gadget family " + f);
    }
    const auto inst = random_scsv_instance(c.gen.n, c.gen.p, rng);
    const auto anchor = static_cast<NodeId>(rng.range(0, c.gen.n - 1));
    return build_scsv_reduction(inst.g, inst.h, target, c.alpha, anchor);
  }
  CCKind kind;
  if (f == "tribes") {
    kind = CCKind::tribes;
  } else if (f == "hse") {
    kind = CCKind::hse;
  } else if (f == "ov_undirected" || f == "ov_directed") {
    kind = CCKind::ov;
  } else {
    throw UsageError("unknown gadget family " + f);
  }
  if (c.cc_n < 1 || c.cc_d < 1) throw UsageError("cc_n and cc_d must be >= 1");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    CCInstance inst;
    if (fixed) {
      if (fixed->kind != kind) throw UsageError("instance kind does not match family " + f);
      inst = *fixed;
    } else {
      inst = random_instance(kind, static_cast<int>(rng.range(1, c.cc_n)), c.cc_d, rng, c.p_one);
    }
    try {
      if (f == "tribes") return build_tribes_radius_gadget(inst, c.gadget_eps);
      if (f == "hse") return build_hse_radius_gadget(inst, c.gadget_eps);
      return build_ov_bichromatic_gadget(inst, c.gadget_eps,
                                         f == "ov_directed" ? OvVariant::directed : OvVariant::undirected);
    } catch (const DegenerateInstance&) {
      if (fixed) throw;
    }
  }
  throw UsageError("could not draw a non-degenerate instance for " + f);
}

}  // namespace

BatteryResult run_gadget_battery(const ExperimentConfig& c) {
  if (c.trials < 1) throw UsageError("trials must be >= 1");
  std::optional<CCInstance> fixed;
  if (!c.instance_file.empty()) {
    std::ifstream in(c.instance_file);
    if (!in) throw UsageError("cannot open instance file " + c.instance_file);
    try {
      fixed = instance_from_json(json::parse(in));
    } catch (const json::exception& e) {
      throw UsageError(std::string("instance file: ") + e.what());
    }
  }
  BatteryResult out;
  out.table.header = {"seed", "config_hash", "family", "t", "nodes", "arcs", "cut", "truth", "value", "side", "pass"};
  const std::uint64_t hash = config_hash(c);
  const int trials = fixed ? 1 : c.trials;
  std::vector<std::pair<std::vector<std::string>, bool>> rows(trials);
  for_trials(trials, [&](int i) {
    const std::uint64_t seed = c.seed + i;
    Rng rng(mix_seed(seed, 0x9a));
    GadgetBundle b;
    try {
      b = make_bundle(c, fixed, rng);
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const GapReport r = verify_gap(b);
    rows[i] = {{std::to_string(seed), hex(hash), b.family, std::to_string(b.t), num(std::int64_t(b.graph.node_count())),
                num(std::int64_t(b.graph.arc_count())), num(b.cut_size()), b.truth ? "1" : "0", num(r.value),
                r.predicted_yes ? "yes" : "no", r.pass ? "1" : "0"},
               r.pass};
  });
  for (int i = 0; i < trials; ++i) {
    out.table.rows.push_back({c.seed + i, rows[i].first});
    out.passed += rows[i].second;
  }
  out.trials = trials;
  return out;
}

BatteryResult run_bench(const ExperimentConfig& c) {
  std::vector<double> values = c.sweep_values;
  if (values.empty()) {
    if (c.sweep == "n") values = {50, 100, 200};
    if (c.sweep == "k") values = {1, 2};
    if (c.sweep == "epsilon") values = {0, 0.25};
  }
  if (c.sweep != "n" && c.sweep != "k" && c.sweep != "epsilon") throw UsageError("sweep must be n, k or epsilon");
  BatteryResult out;
  out.table.header = run_header(c.algorithm);
  out.table.header.insert(out.table.header.begin(), c.sweep);
  double ratio_sum = 0;
  for (double v : values) {
    ExperimentConfig cc = c;
    if (c.sweep == "n") cc.gen.n = static_cast<int>(v);
    if (c.sweep == "k") cc.k = static_cast<int>(v);
    if (c.sweep == "epsilon") cc.epsilon = v;
    BatteryResult part = run_algorithm_battery(cc);
    for (auto& [seed, cells] : part.table.rows) {
      cells.insert(cells.begin(), num(v));
      out.table.rows.push_back({seed, std::move(cells)});
    }
    out.trials += part.trials;
    out.passed += part.passed;
    ratio_sum += part.mean_ratio * part.trials;
    out.max_ratio = std::max(out.max_ratio, part.max_ratio);
    out.max_rounds = std::max(out.max_rounds, part.max_rounds);
  }
  out.mean_ratio = out.trials ? ratio_sum / out.trials : 0;
  return out;
}

int cmd_oracle(const ExperimentConfig& c, std::ostream& out, std::ostream& log) {
  const Graph g = load_graph(c, c.seed);
  const auto ecc = all_eccentricities(g, Execution::parallel);
  const Distance d = diameter(g), r = radius(g);
  out << "n " << g.node_count() << " m " << g.edge_count() << " directed " << g.directed() << " weighted "
      << g.weighted() << '\n';
  out << "diameter " << d << '\n';
  out << "radius " << r << " center";
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (ecc[v] == r) out << ' ' << v;
  out << '\n';
  out << "node ecc\n";
  for (NodeId v = 0; v < g.node_count(); ++v) out << v << ' ' << ecc[v] << '\n';
  if (!c.partition_file.empty()) {
    std::ifstream in(c.partition_file);
    if (!in) throw UsageError("cannot open partition file " + c.partition_file);
    std::vector<bool> in_s(g.node_count(), false);
    NodeId v;
    while (in >> v) {
      if (!g.valid(v)) throw UsageError("partition file: node " + std::to_string(v) + " out of range");
      in_s[v] = true;
    }
    STPartition p = STPartition::from_colors(in_s);
    try {
      p.validate(g.node_count(), true);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    out << "st_diameter " << st_diameter(g, p) << '\n';
    out << "st_radius " << st_radius(g, p) << '\n';
  }
  log << "oracle: n=" << g.node_count() << " diameter=" << d << " radius=" << r << '\n';
  return 0;
}

namespace {

void summary(std::ostream& log, const std::string& what, const BatteryResult& r) {
  log << what << ": " << r.passed << "/" << r.trials << " pass, mean ratio " << num(r.mean_ratio) << ", max ratio "
      << num(r.max_ratio) << ", max rounds " << r.max_rounds << '\n';
}

}  // namespace

int cmd_run(const ExperimentConfig& c, std::ostream& out, std::ostream& log) {
  const BatteryResult r = run_algorithm_battery(c);
  r.table.write(out);
  summary(log, "run " + c.algorithm, r);
  return r.all_pass() ? 0 : 1;
}

int cmd_gadget(const ExperimentConfig& c, std::ostream& out, std::ostream& log) {
  const BatteryResult r = run_gadget_battery(c);
  r.table.write(out);
  log << "gadget " << c.family << ": " << r.passed << "/" << r.trials << " pass\n";
  return r.all_pass() ? 0 : 1;
}

int cmd_bench(const ExperimentConfig& c, std::ostream& out, std::ostream& log) {
  const BatteryResult r = run_bench(c);
  r.table.write(out);
  summary(log, "bench " + c.algorithm + " over " + c.sweep, r);
  return r.all_pass() ? 0 : 1;
}

int run_command(const ExperimentConfig& c, std::ostream& stdout_stream, std::ostream& log) {
  try {
    std::ofstream file;
    std::ostream* out = &stdout_stream;
    std::string path = c.output;
    if (path.empty() && c.command != "oracle") {
      if (const char* dir = std::getenv("DISTAPX_OUT_DIR"); dir && *dir) {
        path = std::string(dir) + "/" + c.command + "_" + (c.command == "gadget" ? c.family : c.algorithm) + ".csv";
      }
    }
    if (!path.empty()) {
      file.open(path);
      if (!file) throw UsageError("cannot write " + path);
      out = &file;
    }
    int code;
    if (c.command == "oracle") {
      code = cmd_oracle(c, *out, log);
    } else if (c.command == "run") {
      code = cmd_run(c, *out, log);
    } else if (c.command == "gadget") {
      code = cmd_gadget(c, *out, log);
    } else if (c.command == "bench") {
      code = cmd_bench(c, *out, log);
    } else {
      throw UsageError("command must be oracle, run, gadget or bench");
    }
    if (!path.empty()) log << "wrote " << path << '\n';
    return code;
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    log << "failed: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace distapx
