#pragma once

#include "netform/graph.hpp"
#include "netform/payoff.hpp"
#include "netform/random.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netform {

/// A profitable single-link deviation. For Delete, node i strictly gains by
/// cutting (i, j). For Add, i strictly gains and j does not lose.
struct Deviation {
  DeviationKind kind;
  NodeId i;
  NodeId j;
  Rational gain_i;
  Rational gain_j;
};

struct StabilityReport {
  bool stable = true;
  std::optional<Deviation> witness;
};

/// Pairwise stability with the first witness in (i ascending, j ascending)
/// scan order over ordered pairs.
StabilityReport is_pairwise_stable(const Graph& g, const Params& p);
StabilityReport is_pairwise_stable(const Graph& g, const UtilityTable& table);

/// Witness-free check for enumeration loops. `sigmas` must hold sigma(g, i).
bool is_pairwise_stable_fast(const Graph& g, const UtilityTable& table,
                             std::span<const std::uint64_t> sigmas);

// Closed-form stability regions for the standard topologies.

enum class Region { R1a, R1b, R1c, R2, R3a, R3b, R3c, R3d };

enum class StableTopology {
  Complete,
  Null,
  Cycle,
  CompleteBipartite,
  CompleteEquiTripartite,
  CompleteEquiKPartite,
};

std::string_view region_name(Region r);
std::string_view topology_name(StableTopology t);

struct RegionPrediction {
  /// Every region whose condition holds; several on shared boundaries and
  /// nested sub-regions (1c lies inside 1b, 3d inside 3b).
  std::vector<Region> regions;
  /// Union of the topology sets of those regions, in enum order.
  std::vector<StableTopology> topologies;

  bool predicts(StableTopology t) const;
};

RegionPrediction predicted_stable_topologies(const Params& p);

struct TopologyInstance {
  std::string name;  // e.g. "CompleteBipartite(3,2)"
  Graph graph;
};

/// Concrete members of a topology family on n nodes. Stars are left out of
/// the bipartite family and the triangle out of the cycle family: in both,
/// some nodes have no pair of neighbors and so no bridging benefit.
std::vector<TopologyInstance> topology_instances(StableTopology t, std::uint32_t n);

struct Action {
  enum class Kind { Add, Delete, Pass };
  Kind kind = Kind::Pass;
  NodeId partner = 0;
  UtilityTable::Scaled gain = 0;
};

/// Best single-link move for node i: any deletion of an incident edge, or an
/// addition the partner weakly accepts. Ties among maximal moves are broken
/// uniformly with rng (drawn only when there is more than one). Pass unless
/// the best gain is positive, or zero for an addition when
/// allow_indifferent_adds is set.
Action best_response(const Graph& g, NodeId i, const UtilityTable& table, Rng& rng,
                     bool allow_indifferent_adds);
Action best_response(const Graph& g, NodeId i, const Params& p, Rng& rng,
                     bool allow_indifferent_adds);

}  // namespace netform
