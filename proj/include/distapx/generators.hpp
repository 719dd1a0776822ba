#pragma once

#include <cstdint>
#include <vector>

#include "distapx/graph.hpp"
#include "distapx/random.hpp"

namespace distapx {

struct WeightRange {
  Weight lo = 1;
  Weight hi = 1;
};

struct GenStats {
  int retries = 0;
};

// G(n,p) redrawn until connected (strongly connected when directed). Throws
// std::runtime_error after `max_retries` failed draws.
Graph gnp(NodeId n, double p, Rng& rng, bool directed = false, WeightRange w = {},
          int max_retries = 100, GenStats* stats = nullptr);

// Uniform labelled tree via a random Pruefer sequence.
Graph random_tree(NodeId n, Rng& rng, WeightRange w = {});

Graph path_graph(NodeId n, bool directed = false);
Graph clique(NodeId n);
Graph star(NodeId leaves);

// Random S/T bipartition with both sides non-empty (n >= 2).
STPartition random_bipartition(NodeId n, Rng& rng, double p_s = 0.5);

bool is_strongly_connected(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace distapx
