#pragma once

#include <vector>

#include "distapx/graph.hpp"

namespace distapx {

/// Selects the serial reference or the OpenMP kernel for data-parallel loops.
enum class Execution { serial, parallel };

/// Exact single-source distances: BFS on unweighted graphs, Dijkstra
/// otherwise. Throws std::invalid_argument for an invalid source.
DistanceVector sssp_exact(const Graph& g, NodeId source, Direction dir = Direction::outward);

/// Hop distances over the communication links (direction and weight ignored).
std::vector<Distance> hop_distances(const Graph& g, NodeId source);

/// Row u holds d(u, .). One single-source run per row; the parallel kernel
/// splits rows across threads.
std::vector<std::vector<Distance>> all_pairs(const Graph& g, Execution exec = Execution::serial);

std::vector<Distance> all_eccentricities(const Graph& g, Execution exec = Execution::serial);
Distance diameter(const Graph& g);
Distance radius(const Graph& g);

/// ST eccentricity of every node of p.s_set, in s_set order.
std::vector<Distance> st_eccentricities(const Graph& g, const STPartition& p);
Distance st_diameter(const Graph& g, const STPartition& p);
Distance st_radius(const Graph& g, const STPartition& p);

/// Hop-diameter of the communication graph (INF when disconnected).
Distance hop_diameter(const Graph& g);

}  // namespace distapx
