#include "netform/dynamics.hpp"

#include <numeric>
#include <set>

namespace netform {

namespace {

std::vector<std::uint64_t> node_sigmas(const Graph& g) {
  std::vector<std::uint64_t> out(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out[i] = sigma(g, i);
  return out;
}

}  // namespace

RunResult run_once(const SimConfig& cfg, std::uint64_t run_seed) {
  Rng rng(run_seed);
  Graph g = random_graph(cfg.n, cfg.density, rng);
  const UtilityTable table(cfg.params, cfg.n);

  RunResult result;
  result.initial_graph = g;
  auto record_point = [&](std::uint32_t iteration) {
    if (!cfg.record_trajectory) return;
    result.trajectory.push_back({iteration, clustering_coefficient(g), table.to_rational(table.total_utility(g))});
  };
  record_point(0);

  std::set<StateKey> seen;
  if (cfg.detect_cycles) seen.insert(canonical_state_key(g));

  std::vector<NodeId> order(cfg.n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::uint32_t idle_streak = 0;
  std::uint32_t iteration = 0;
  while (iteration < cfg.max_iterations) {
    ++iteration;
    shuffle(std::span<NodeId>(order), rng);
    bool modified = false;
    for (NodeId v : order) {
      const Action action = best_response(g, v, table, rng, cfg.allow_indifferent_adds);
      if (action.kind == Action::Kind::Pass) continue;
      g.toggle_edge(v, action.partner);
      ++result.acts;
      modified = true;
      if (cfg.record_trajectory) result.act_log.push_back({iteration, v, action.partner, action.kind});
    }
    record_point(iteration);

    if (modified) {
      idle_streak = 0;
      if (cfg.detect_cycles && !seen.insert(canonical_state_key(g)).second) result.state_revisited = true;
      continue;
    }
    ++idle_streak;
    if (idle_streak >= cfg.idle_terminate) {
      result.converged = true;
      break;
    }
    if (!cfg.allow_indifferent_adds) {
      // Every node passed on an unchanged graph, and a pass never draws from
      // rng, so the remaining idle iterations would replay this one exactly.
      const std::uint32_t remaining = cfg.idle_terminate - idle_streak;
      const std::uint32_t room = cfg.max_iterations - iteration;
      const std::uint32_t skip = std::min(remaining, room);
      for (std::uint32_t k = 1; k <= skip; ++k) record_point(iteration + k);
      iteration += skip;
      result.converged = remaining <= room;
      break;
    }
  }

  result.iterations_used = iteration;
  result.dynamic_equilibrium = result.state_revisited && !result.converged;
  result.final_graph = g;
  result.final_utility = table.to_rational(table.total_utility(g));
  result.final_clustering = clustering_coefficient(g);
  Classification cls = classify(g, cfg.classifier);
  result.label = cls.primary;
  result.all_matches = std::move(cls.all_matches);
  return result;
}

BatchStats run_batch(const SimConfig& cfg, std::uint64_t cell_index) {
  SimConfig run_cfg = cfg;
  run_cfg.record_trajectory = false;
  const UtilityTable table(cfg.params, cfg.n);

  BatchStats stats;
  stats.repetitions = cfg.repetitions;
  Rational utility_sum = 0;
  Rational clustering_sum = 0;
  std::uint64_t iteration_sum = 0;
  std::uint64_t act_sum = 0;
  for (std::uint32_t rep = 0; rep < cfg.repetitions; ++rep) {
    const RunResult run = run_once(run_cfg, derive_run_seed(cfg.master_seed, cell_index, rep));
    ++stats.class_frequencies[static_cast<std::size_t>(run.label)];
    for (ClassLabel l : run.all_matches) ++stats.match_frequencies[static_cast<std::size_t>(l)];
    utility_sum += run.final_utility;
    clustering_sum += run.final_clustering;
    iteration_sum += run.iterations_used;
    act_sum += run.acts;
    if (run.converged) {
      ++stats.converged_runs;
      if (!cfg.allow_indifferent_adds) {
        const auto sig = node_sigmas(run.final_graph);
        if (!is_pairwise_stable_fast(run.final_graph, table, sig)) ++stats.unstable_converged;
      }
    }
    if (run.dynamic_equilibrium) ++stats.dynamic_equilibria;
  }

  if (cfg.repetitions > 0) {
    const Rational reps(static_cast<unsigned long>(cfg.repetitions));
    stats.mean_utility = utility_sum / reps;
    stats.mean_final_clustering = clustering_sum / reps;
    stats.mean_iterations = Rational(static_cast<unsigned long>(iteration_sum)) / reps;
    stats.mean_acts = Rational(static_cast<unsigned long>(act_sum)) / reps;
    stats.mean_utility.canonicalize();
    stats.mean_final_clustering.canonicalize();
    stats.mean_iterations.canonicalize();
    stats.mean_acts.canonicalize();
  }

  std::uint32_t best = 0;
  for (ClassLabel l : all_labels()) {
    if (stats.frequency(l) > best) {
      best = stats.frequency(l);
      stats.modal_class = l;
    }
  }
  return stats;
}

}  // namespace netform
