#pragma once

#include <cstdint>
#include <vector>

#include "distapx/graph.hpp"
#include "distapx/primitives.hpp"

namespace distapx {

struct CairoConfig {
  int k = 1;
  bool alt_q = false;  // q = n^(1/(k+1)) / ln n instead of (n / ln n)^(1/(k+1))
  bool rate_by_ell = false;  // sample W_i at q ln n / ell_i instead of q ln n / n
  int retry_cap = 20;  // attempts per iteration before giving up
  double slack = 4.0;  // additive slack used by the ratio checks

  double diameter_factor() const;  // 2 - 1/2^k
  double ecc_factor() const;       // 3 - 4/(2^k + 1)
};

struct CairoAttempt {
  bool empty_z = false;
  bool pass = false;
  std::int64_t rounds = 0;  // election + BFS + selection
};

struct CairoIteration {
  std::int64_t ell = 0;  // size of the next W
  std::int64_t sample_size = 0;
  NodeId w = -1;
  std::int64_t w_distance = 0;
  std::vector<CairoAttempt> attempts;
};

struct CairoResult {
  double q = 0;
  std::int64_t d_prime = 0;
  std::vector<CairoIteration> iterations;
  std::vector<NodeId> roots;  // w_1..w_k and S_0..S_k, ascending
  std::int64_t roots_upper = 0;
  std::vector<std::int64_t> est_ecc;
  std::int64_t d_hat = 0;
  std::int64_t r_hat = 0;        // min over all nodes' estimates
  std::int64_t r_hat_roots = 0;  // min over roots' exact eccentricities
  Accounting acct;
};

class CairoNonConvergence : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sampling loop, multi-source BFS from all roots and the final aggregation.
/// Needs a connected, unweighted, undirected graph and 1 <= k <= max(1, ln n).
CairoResult cairo_estimate(const Graph& g, const CairoConfig& cfg, const EngineConfig& engine_cfg);

struct CairoCheck {
  bool d_hat_le_d = false;
  bool diameter_ratio = false;
  bool ecc_ratio = false;
  bool radius_ratio = false;  // either readout within the diameter factor
  bool radius_by_roots = false;
  bool per_iteration_rounds = false;  // every attempt <= 6 D'
  double worst_ecc_ratio = 0;
  double c = 0;  // total rounds / (n^(1/(k+1)) ln n + D)
  std::int64_t diameter = 0;
  std::int64_t radius = 0;
};

CairoCheck check_cairo(const Graph& g, const CairoConfig& cfg, const CairoResult& r);

}  // namespace distapx
