#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "distapx/graph.hpp"
#include "distapx/primitives.hpp"

namespace distapx {

struct PseudoCenterConfig {
  double epsilon = 0.0;
  SsspKind engine = SsspKind::oracle_exact;  // perturbed engines use `epsilon`
  double cost_scale = 1.0;
  // Sampling probability min(1, sample_c ln n / |W|), accepted when
  // lower_c ln n <= |S| <= upper_c ln n; S = W once |W| <= upper_c ln n.
  double sample_c = 24.0;
  double lower_c = 8.0;
  double upper_c = 36.0;
  double iteration_cap_c = 10.0;  // cap = ceil(c ln n)
  int max_resamples = 1000;
  int las_vegas_retries = 3;
  double size_c = 80.0;  // |C| <= size_c ln^2 n is asserted by callers

  SsspEngine sssp_engine() const;
  double alpha() const { return (1 + epsilon) * (1 + epsilon); }
  double ratio_bound() const {
    return 2 + epsilon * epsilon * epsilon + 3 * epsilon * epsilon + 4 * epsilon;
  }
};

struct CenterWitness {
  std::vector<NodeId> sample;
  NodeId anchor = -1;
  std::int64_t threshold = 0;  // estimated distance from the sample to the anchor
  std::int64_t w_before = 0;
  std::int64_t removed = 0;
  int resamples = 0;
};

struct PseudoCenter {
  std::vector<NodeId> members;  // ascending
  double alpha = 1.0;
  std::vector<CenterWitness> witness;  // one per iteration
  std::vector<std::int64_t> w_sizes;   // |W| at the start of each iteration, then 0
};

struct EccEstimate {
  std::vector<std::int64_t> est;
  std::int64_t d_a_of_c = 0;
  std::int64_t diameter_est = 0;
  std::int64_t radius_est = 0;
};

class NotStronglyConnected : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NonConvergence : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

PseudoCenter compute_pseudo_center(const Graph& g, const PseudoCenterConfig& cfg, const Bootstrap& boot,
                                   Accounting& acct);

EccEstimate estimate_eccentricities(const Graph& g, const PseudoCenter& center, const PseudoCenterConfig& cfg,
                                    const Bootstrap& boot, Accounting& acct);

struct PseudoCenterRun {
  PseudoCenter center;
  EccEstimate estimate;
  std::int64_t d_prime = 0;
  int attempts = 0;
  Accounting acct;
};

/// Bootstrap, pseudo-center (retrying with a fresh seed stream on
/// non-convergence), then the eccentricity estimates.
PseudoCenterRun run_pseudo_center(const Graph& g, const PseudoCenterConfig& cfg, const EngineConfig& engine_cfg);

}  // namespace distapx
