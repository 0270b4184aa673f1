#pragma once

// Agent-based network formation. A run starts from a random graph of the
// configured density; every iteration visits all nodes in a fresh uniformly
// random order and lets each apply its best single-link response to the
// current graph. Additions need the partner's weak consent, deletions are
// unilateral.

#include "netform/classifier.hpp"
#include "netform/graph.hpp"
#include "netform/payoff.hpp"
#include "netform/stability.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace netform {

struct SimConfig {
  std::uint32_t n = 10;
  Rational density = 0;
  Params params{Rational(1, 2), Rational(1, 2)};
  std::uint32_t max_iterations = 1000;
  std::uint32_t idle_terminate = 30;
  std::uint32_t repetitions = 100;
  std::uint64_t master_seed = 0;
  bool allow_indifferent_adds = false;
  bool detect_cycles = true;
  /// Keep the per-act log and per-iteration trajectory in RunResult.
  bool record_trajectory = true;
  ClassifierConfig classifier{};
};

struct TrajectoryPoint {
  std::uint32_t iteration;
  Rational clustering;
  Rational total_utility;
};

struct ActRecord {
  std::uint32_t iteration;
  NodeId actor;
  NodeId partner;
  Action::Kind kind;
};

struct RunResult {
  Graph initial_graph{1};
  Graph final_graph{1};
  bool converged = false;
  /// A graph state recurred at iteration boundaries and the run ended
  /// without converging.
  bool dynamic_equilibrium = false;
  bool state_revisited = false;
  std::uint32_t iterations_used = 0;
  std::uint64_t acts = 0;
  Rational final_utility;
  Rational final_clustering;
  ClassLabel label = ClassLabel::Unclassified;
  std::vector<ClassLabel> all_matches;
  /// Iteration 0 is the initial graph.
  std::vector<TrajectoryPoint> trajectory;
  std::vector<ActRecord> act_log;
};

RunResult run_once(const SimConfig& cfg, std::uint64_t run_seed);

struct BatchStats {
  std::uint32_t repetitions = 0;
  /// Runs per primary label, indexed by ClassLabel.
  std::array<std::uint32_t, kLabelCount> class_frequencies{};
  /// Runs whose all_matches contains the label.
  std::array<std::uint32_t, kLabelCount> match_frequencies{};
  ClassLabel modal_class = ClassLabel::Unclassified;
  Rational mean_utility;
  Rational mean_iterations;
  Rational mean_acts;
  Rational mean_final_clustering;
  std::uint32_t converged_runs = 0;
  std::uint32_t dynamic_equilibria = 0;
  /// Converged runs (without indifferent adds) whose final graph failed the
  /// stability certificate. Always 0 unless an invariant is broken.
  std::uint32_t unstable_converged = 0;

  std::uint32_t frequency(ClassLabel l) const { return class_frequencies[static_cast<std::size_t>(l)]; }
};

/// Runs cfg.repetitions runs with seeds derive_run_seed(master_seed,
/// cell_index, rep) and aggregates them.
BatchStats run_batch(const SimConfig& cfg, std::uint64_t cell_index = 0);

}  // namespace netform
