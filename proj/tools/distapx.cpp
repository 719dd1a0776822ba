// distapx: oracle | run | gadget | bench
#include <iostream>

#include "CLI11.hpp"
#include "distapx/runner.hpp"

using distapx::ExperimentConfig;

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  std::string config_file;
  bool dump_config = false;

  CLI::App app{"Distance-parameter experiments on a simulated CONGEST network"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", config_file, "JSON config; its keys override flags");
  app.add_flag("--dump-config", dump_config, "print the resolved config as JSON and exit");
  app.add_option("--graph", cfg.graph_file, "graph file (n m directed weighted, then u v [w])");
  app.add_option("--model", cfg.gen.model, "generator: gnp | random_tree | path | clique");
  app.add_option("-n,--n", cfg.gen.n, "generator node count");
  app.add_option("-p,--p", cfg.gen.p, "gnp edge probability");
  app.add_option("--w-lo", cfg.gen.w_lo, "smallest edge weight");
  app.add_option("--w-hi", cfg.gen.w_hi, "largest edge weight");
  app.add_flag("--directed", cfg.gen.directed, "generate a directed graph");
  app.add_option("--seed", cfg.seed, "first trial seed");
  app.add_option("--trials", cfg.trials, "number of trials");
  app.add_option("-o,--output", cfg.output, "CSV output file");
  app.add_option("--words", cfg.words, "words per message");
  app.add_option("--mode", cfg.mode, "strict | log_only");
  app.add_option("--round-cap", cfg.round_cap, "abort a phase after this many rounds");

  auto* oracle = app.add_subcommand("oracle", "exact diameter, radius and eccentricities");
  oracle->add_option("--partition", cfg.partition_file, "file listing the S nodes");

  auto add_algorithm_options = [&](CLI::App* sub) {
    sub->add_option("-a,--algorithm", cfg.algorithm,
                    "pseudo_center | cairo | bichromatic_unweighted | bichromatic_weighted");
    sub->add_option("-k,--k", cfg.k, "Cairo iterations");
    sub->add_flag("--alt-q", cfg.alt_q, "Cairo: q = n^(1/(k+1)) / ln n");
    sub->add_flag("--rate-by-ell", cfg.rate_by_ell, "Cairo: sample W_i at q ln n / ell_i");
    sub->add_option("--epsilon", cfg.epsilon, "SSSP approximation slack");
    sub->add_option("--sssp", cfg.sssp, "distributed_bellman_ford | oracle_exact | oracle_perturbed");
    sub->add_option("--cost-scale", cfg.cost_scale, "scale of charged SSSP rounds");
    sub->add_option("--slack", cfg.slack, "additive slack of the ratio checks");
    sub->add_option("--p-s", cfg.p_s, "P(node in S) for random bipartitions");
    sub->add_option("--c-z", cfg.c_z, "Z sampling constant");
    sub->add_option("--c-x", cfg.c_x, "X sampling constant");
  };
  auto* run = app.add_subcommand("run", "run an algorithm over trials and compare with the oracle");
  add_algorithm_options(run);

  auto* gadget = app.add_subcommand("gadget", "build and verify lower-bound gadgets");
  gadget->add_option("-f,--family", cfg.family,
                     "tribes | hse | ov_undirected | ov_directed | scsv_weighted | scsv_bichromatic | scsv_diameter");
  gadget->add_option("--instance", cfg.instance_file, "JSON instance {kind, alice, bob}");
  gadget->add_option("--cc-n", cfg.cc_n, "largest N of random instances");
  gadget->add_option("--cc-d", cfg.cc_d, "vector width of random OV/HSE instances");
  gadget->add_option("--p-one", cfg.p_one, "P(bit = 1) in random instances");
  gadget->add_option("--eps", cfg.gadget_eps, "gap parameter; t is derived from it");
  gadget->add_option("--alpha", cfg.alpha, "approximation ratio for the reweighted SCSV target");

  auto* bench = app.add_subcommand("bench", "sweep n, k or epsilon and emit CSV");
  add_algorithm_options(bench);
  bench->add_option("--sweep", cfg.sweep, "n | k | epsilon");
  bench->add_option("--values", cfg.sweep_values, "sweep values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (!config_file.empty()) cfg = distapx::load_config(config_file, cfg);
  } catch (const distapx::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (dump_config) {
    std::cout << distapx::to_json(cfg).dump(2) << '\n';
    return 0;
  }
  return distapx::run_command(cfg, std::cout, std::cerr);
}
