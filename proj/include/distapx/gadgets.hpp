#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "distapx/graph.hpp"
#include "distapx/random.hpp"

namespace distapx {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

enum class CCKind { disj, tribes, ov, hse };

const char* cc_kind_name(CCKind k);

/// Two-party instance. Disj stores N rows of one bit each; Tribes is N x N;
/// OV and HSE are N x d.
struct CCInstance {
  CCKind kind = CCKind::disj;
  BitMatrix alice, bob;
  int n = 0;
  int d = 0;

  void validate() const;
};

/// Brute-force value: Disj 1 iff disjoint, Tribes 1 iff some pair of rows is
/// disjoint, OV 1 iff some a.b = 0, HSE 1 iff some a meets every b.
bool eval_cc(const CCInstance& inst);

/// Bits per row are 1 with probability p_one.
CCInstance random_instance(CCKind kind, int n, int d, Rng& rng, double p_one = 0.5);

int disj_index_width(int n);  // ceil(log2 n), 1 for n = 1

/// A_i = b(i) b~(i) X_i, B_i = b~(i) b(i) Y_i.
CCInstance disj_to_hse(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y);

class DegenerateInstance : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class OversizeBundle : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GapParameter { radius, diameter, st_diameter, all_eccentricities };

const char* gap_parameter_name(GapParameter p);

/// The yes side is the small one: value <= yes_value (== when yes_exact). The
/// no side asks for value >= no_bound; an infinite no_bound asks for an
/// infinite value. For all_eccentricities the yes side bounds the largest
/// eccentricity and the no side the smallest. The yes side is expected when
/// the CC value equals yes_when_truth.
struct GapPrediction {
  GapParameter parameter = GapParameter::radius;
  Distance yes_value = Distance(0);
  bool yes_exact = false;
  Distance no_bound = Distance::inf();
  bool yes_when_truth = true;
};

struct GadgetBundle {
  std::string family;
  Graph graph;
  std::optional<STPartition> partition;
  std::vector<NodeId> alice_nodes, bob_nodes;
  int t = 0;
  GapPrediction predicted;
  bool truth = false;  // CC value; for SCSV, whether H is spanning and connected
  nlohmann::json params;
  std::int64_t cut_size() const;  // links between alice_nodes and bob_nodes
};

int tribes_t(double eps);  // ceil(4/eps)
int hse_t(double eps);     // least t with (2t+4)/(t+4) > 2 - eps
int ov_undirected_t(double eps);  // least t with (5t+1)/(3t+1) > 5/3 - eps
int ov_directed_t(double eps);    // least t >= 3 with (2t+3)/(t+3) >= 2 - eps

/// t_override > 0 replaces the value derived from eps.
GadgetBundle build_tribes_radius_gadget(const CCInstance& inst, double eps, int t_override = 0);
GadgetBundle build_hse_radius_gadget(const CCInstance& inst, double eps, int t_override = 0);

enum class OvVariant { undirected, directed };
GadgetBundle build_ov_bichromatic_gadget(const CCInstance& inst, double eps, OvVariant variant, int t_override = 0);

enum class ScsvTarget { weighted_diameter, directed_bichromatic, directed_diameter };

const char* scsv_target_name(ScsvTarget t);

/// `anchor` is the node whose copies form S (target b) or carry the back-arc
/// (target c).
GadgetBundle build_scsv_reduction(const Graph& g, const std::vector<Edge>& h_edges, ScsvTarget target,
                                  double alpha = 3.0, NodeId anchor = 0);

struct ScsvInstance {
  Graph g;
  std::vector<Edge> h;
};

/// Connected G(n,p) with H = a random spanning tree plus extra edges; with
/// probability p_break one or two tree edges are then removed.
ScsvInstance random_scsv_instance(NodeId n, double p, Rng& rng, double p_break = 0.5);

struct GapReport {
  Distance value;
  bool predicted_yes = false;
  bool pass = false;
};

/// Exact check of the bundle's parameter; refuses graphs above max_arcs.
GapReport verify_gap(const GadgetBundle& b, std::size_t max_arcs = 50000);

nlohmann::json bundle_sidecar(const GadgetBundle& b, const GapReport* report = nullptr);

/// Writes <prefix>.graph and <prefix>.json.
void export_bundle(const GadgetBundle& b, const std::string& prefix);

}  // namespace distapx
