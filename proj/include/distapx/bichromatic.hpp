#pragma once

#include <cstdint>
#include <vector>

#include "distapx/graph.hpp"
#include "distapx/primitives.hpp"

namespace distapx {

struct BichromaticConfig {
  double c_z = 2.0;         // Z sampling constant
  double c_x = 4.0;         // X sampling constant
  double size_warn_c = 1.0; // warn when |S_w| or |T_w| > size_warn_c * sqrt(n)
  double slack = 5.0;       // additive slack of the 5/3 check
};

struct FiveEstimates {
  std::vector<NodeId> z, x;
  std::int64_t d[5] = {0, 0, 0, 0, 0};  // D1..D5
  NodeId w = -1;
  std::int64_t d_w = 0;  // the largest per-node D_s, attained at w
  std::vector<NodeId> s_w, t_w;
  std::vector<NodeId> s_of;  // s(x) for each x in `x`, same order
  std::vector<NodeId> t_of;  // t(s) for each s in `s_w`, same order
  bool size_warning = false;
};

struct BichromaticResult {
  std::int64_t estimate = 0;
  FiveEstimates parts;
  std::int64_t d_prime = 0;
  Accounting acct;
};

/// Largest D >= 0 with d_x > D/5 and d_z > 2D/5, or 0 if none; capped at cap.
std::int64_t largest_ds(Distance d_x, Distance d_z, std::int64_t cap);

/// Estimate of D_ST on a connected unweighted undirected graph with a
/// bi-chromatic partition.
BichromaticResult bichromatic_unweighted(const Graph& g, const STPartition& p, const BichromaticConfig& cfg,
                                         const EngineConfig& engine_cfg);

struct WeightedBichromaticResult {
  std::int64_t estimate = 0;  // max(max_{s'} d(s', t), max_{t'} d(s, t'))
  NodeId s = -1, t = -1;
  Weight w = 0;
  std::int64_t d_prime = 0;
  std::int64_t flood_rounds = 0;
  Accounting acct;
};

class NoCrossingEdge : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lightest S-T edge plus two SSSP runs on a weighted undirected graph.
WeightedBichromaticResult bichromatic_weighted(const Graph& g, const STPartition& p, const SsspEngine& engine,
                                               const EngineConfig& engine_cfg);

}  // namespace distapx
