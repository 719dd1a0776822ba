#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "distapx/graph.hpp"

namespace distapx {

struct GeneratorSpec {
  std::string model = "gnp";  // gnp | random_tree | path | clique
  int n = 100;
  double p = 0.05;
  Weight w_lo = 1;
  Weight w_hi = 1;
  bool directed = false;
};

struct ExperimentConfig {
  std::string command = "run";  // oracle | run | gadget | bench
  std::string graph_file;       // empty: use `gen`
  std::string partition_file;   // ids of S, whitespace separated; oracle only
  GeneratorSpec gen;
  std::string algorithm = "cairo";  // pseudo_center | cairo | bichromatic_unweighted | bichromatic_weighted

  int k = 1;
  bool alt_q = false;
  bool rate_by_ell = false;
  double epsilon = 0.0;
  std::string sssp = "oracle_exact";  // distributed_bellman_ford | oracle_exact | oracle_perturbed
  double cost_scale = 1.0;
  double sample_c = 24.0, lower_c = 8.0, upper_c = 36.0;
  double c_z = 2.0, c_x = 4.0;
  double p_s = 0.5;  // P(node in S) for random bipartitions
  double slack = 4.0;

  int words = 4;
  std::string mode = "strict";  // strict | log_only
  std::int64_t round_cap = 1'000'000;

  int trials = 1;
  std::uint64_t seed = 1;

  // gadget batteries
  std::string family = "tribes";  // tribes | hse | ov_undirected | ov_directed | scsv_weighted | scsv_bichromatic | scsv_diameter
  std::string instance_file;      // empty: random instances
  int cc_n = 4;
  int cc_d = 7;
  double p_one = 0.5;
  double gadget_eps = 0.5;
  double alpha = 3.0;

  // bench
  std::string sweep = "n";  // n | k | epsilon
  std::vector<double> sweep_values;

  std::string output;  // empty: $DISTAPX_OUT_DIR/<command>_<name>.csv, or stdout
};

/// Raised for unusable configs and violated algorithm preconditions.
class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

nlohmann::json to_json(const ExperimentConfig& c);
/// Overrides only the keys present; unknown keys are a UsageError.
void apply_json(ExperimentConfig& c, const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});
std::uint64_t fnv1a(const std::string& s);
std::uint64_t config_hash(const ExperimentConfig& c);

/// File graph, or a fresh generator draw seeded with `seed`.
Graph load_graph(const ExperimentConfig& c, std::uint64_t seed, int* retries = nullptr);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::pair<std::uint64_t, std::vector<std::string>>> rows;  // keyed by seed

  void write(std::ostream& out) const;  // "# schema=1", header, rows sorted by seed
};

struct BatteryResult {
  CsvTable table;
  int trials = 0;
  int passed = 0;
  double mean_ratio = 0;
  double max_ratio = 0;
  std::int64_t max_rounds = 0;
  bool all_pass() const { return passed == trials; }
};

BatteryResult run_algorithm_battery(const ExperimentConfig& c);
BatteryResult run_gadget_battery(const ExperimentConfig& c);
BatteryResult run_bench(const ExperimentConfig& c);

/// Exit codes: 0 pass, 1 assertion failure, 2 usage error. Human-readable
/// summaries go to `log`; CSV goes to the configured output.
int cmd_oracle(const ExperimentConfig& c, std::ostream& out, std::ostream& log);
int cmd_run(const ExperimentConfig& c, std::ostream& out, std::ostream& log);
int cmd_gadget(const ExperimentConfig& c, std::ostream& out, std::ostream& log);
int cmd_bench(const ExperimentConfig& c, std::ostream& out, std::ostream& log);

/// Dispatches on c.command, resolving the output path; catches UsageError.
int run_command(const ExperimentConfig& c, std::ostream& stdout_stream, std::ostream& log);

}  // namespace distapx
