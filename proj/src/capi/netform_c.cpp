#include "netform/netform.h"

#include "netform/classifier.hpp"
#include "netform/dynamics.hpp"
#include "netform/efficiency.hpp"
#include "netform/errors.hpp"
#include "netform/oracle.hpp"
#include "netform/pos.hpp"
#include "netform/stability.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace netform;

struct nf_graph {
  Graph g;
};
struct nf_params {
  Params p;
};
struct nf_sim_config {
  SimConfig cfg;
};
struct nf_run {
  RunResult r;
};
struct nf_batch {
  BatchStats s;
};
struct nf_oracle {
  OracleResult r;
};
struct nf_verify_report {
  VerifyReport r;
};
struct nf_pos_grid {
  std::vector<PosCell> cells;
};

namespace {

thread_local std::string last_error;

template <class F>
nf_status guard(F&& body) {
  try {
    body();
    return NF_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return NF_ERR_PARSE;
  } catch (const LimitError& e) {
    last_error = e.what();
    return NF_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return NF_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return NF_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NF_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return NF_ERR_INTERNAL;
  }
}

template <class T>
T& need(T* ptr, const char* what) {
  if (ptr == nullptr) throw std::invalid_argument(std::string("null ") + what);
  return *ptr;
}

char* dup(std::string_view s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

char* dup_rational(const Rational& r) { return dup(to_string(r)); }

char* dup_optional(const std::optional<Rational>& r) { return r ? dup_rational(*r) : nullptr; }

const char* need_text(const char* text, const char* what) {
  if (text == nullptr) throw std::invalid_argument(std::string("null ") + what);
  return text;
}

Rational rational_arg(const char* text, const char* what) { return parse_rational(need_text(text, what)); }

template <class T>
void emit(T** out, T* value) {
  std::unique_ptr<T> owned(value);
  need(out, "output pointer");
  *out = owned.release();
}

void fill_pos(const PosVerdict& v, nf_pos* out) {
  out->kind = static_cast<nf_pos_kind>(v.kind);
  out->method = static_cast<nf_pos_method>(v.method);
  out->value = dup_optional(v.value);
  out->best_stable_utility = dup_optional(v.best_stable_utility);
  out->efficient_utility = dup_optional(v.efficient_utility);
  out->exhaustive = v.exhaustive ? 1 : 0;
}

}  // namespace

extern "C" {

const char* nf_last_error(void) { return last_error.c_str(); }

const char* nf_status_string(nf_status status) {
  switch (status) {
    case NF_OK: return "ok";
    case NF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NF_ERR_PARSE: return "parse error";
    case NF_ERR_LIMIT: return "size limit exceeded";
    case NF_ERR_OUT_OF_MEMORY: return "out of memory";
    case NF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nf_string_free(char* s) { std::free(s); }

nf_status nf_rational_format_decimal(const char* value, int places, char** out) {
  return guard([&] {
    if (places < 0) throw std::invalid_argument("negative decimal places");
    need(out, "output pointer");
    *out = dup(format_decimal(rational_arg(value, "value"), places));
  });
}

nf_status nf_rational_format_compact(const char* value, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup(format_compact(rational_arg(value, "value")));
  });
}

nf_status nf_rational_canonical(const char* value, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(rational_arg(value, "value"));
  });
}

nf_status nf_rational_compare(const char* a, const char* b, int* out) {
  return guard([&] {
    const int c = cmp(rational_arg(a, "a"), rational_arg(b, "b"));
    need(out, "output pointer") = (c > 0) - (c < 0);
  });
}

nf_status nf_rational_range(const char* lo, const char* hi, const char* step, char*** out, size_t* count) {
  return guard([&] {
    need(out, "output pointer");
    need(count, "count pointer");
    const auto values = rational_range(rational_arg(lo, "lo"), rational_arg(hi, "hi"), rational_arg(step, "step"));
    auto** items = static_cast<char**>(std::calloc(values.size() == 0 ? 1 : values.size(), sizeof(char*)));
    if (items == nullptr) throw std::bad_alloc();
    try {
      for (std::size_t k = 0; k < values.size(); ++k) items[k] = dup_rational(values[k]);
    } catch (...) {
      nf_string_array_free(items, values.size());
      throw;
    }
    *out = items;
    *count = values.size();
  });
}

void nf_string_array_free(char** items, size_t count) {
  if (items == nullptr) return;
  for (size_t k = 0; k < count; ++k) std::free(items[k]);
  std::free(items);
}

nf_status nf_graph_create(uint32_t n, nf_graph** out) {
  return guard([&] { emit(out, new nf_graph{Graph(n)}); });
}

nf_status nf_graph_standard(nf_standard_kind kind, uint32_t n, nf_graph** out) {
  return guard([&] {
    if (kind < NF_STANDARD_COMPLETE || kind > NF_STANDARD_WHEEL) throw std::invalid_argument("unknown standard kind");
    emit(out, new nf_graph{standard_graph(static_cast<StandardKind>(kind), n)});
  });
}

nf_status nf_graph_complete_multipartite(const uint32_t* sizes, size_t count, nf_graph** out) {
  return guard([&] {
    if (count > 0) need(sizes, "sizes");
    emit(out, new nf_graph{complete_multipartite(std::span<const std::uint32_t>(sizes, count))});
  });
}

nf_status nf_graph_turan(uint32_t n, nf_graph** out) {
  return guard([&] { emit(out, new nf_graph{turan_graph(n)}); });
}

nf_status nf_graph_random(uint32_t n, const char* density, uint64_t seed, nf_graph** out) {
  return guard([&] {
    Rng rng(seed);
    emit(out, new nf_graph{random_graph(n, rational_arg(density, "density"), rng)});
  });
}

nf_status nf_graph_parse(const char* text, nf_graph** out) {
  return guard([&] { emit(out, new nf_graph{parse_edge_list(need_text(text, "text"))}); });
}

nf_status nf_graph_format(const nf_graph* g, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup(format_edge_list(need(g, "graph").g));
  });
}

nf_status nf_graph_clone(const nf_graph* g, nf_graph** out) {
  return guard([&] { emit(out, new nf_graph{need(g, "graph").g}); });
}

void nf_graph_free(nf_graph* g) { delete g; }

uint32_t nf_graph_node_count(const nf_graph* g) { return g ? g->g.node_count() : 0; }
size_t nf_graph_edge_count(const nf_graph* g) { return g ? g->g.edge_count() : 0; }

nf_status nf_graph_add_edge(nf_graph* g, uint32_t i, uint32_t j) {
  return guard([&] { need(g, "graph").g.add_edge(i, j); });
}

nf_status nf_graph_remove_edge(nf_graph* g, uint32_t i, uint32_t j) {
  return guard([&] { need(g, "graph").g.remove_edge(i, j); });
}

nf_status nf_graph_has_edge(const nf_graph* g, uint32_t i, uint32_t j, int* out) {
  return guard([&] { need(out, "output pointer") = need(g, "graph").g.has_edge(i, j) ? 1 : 0; });
}

nf_status nf_graph_degree(const nf_graph* g, uint32_t i, uint32_t* out) {
  return guard([&] { need(out, "output pointer") = degree(need(g, "graph").g, i); });
}

nf_status nf_graph_triangle_count(const nf_graph* g, uint64_t* out) {
  return guard([&] { need(out, "output pointer") = triangle_count(need(g, "graph").g); });
}

nf_status nf_graph_clustering(const nf_graph* g, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(clustering_coefficient(need(g, "graph").g));
  });
}

int nf_graph_equal(const nf_graph* a, const nf_graph* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->g == b->g ? 1 : 0;
}

nf_status nf_params_create(const char* delta, const char* cost, nf_params** out) {
  return guard([&] {
    emit(out, new nf_params{Params::grid_point(rational_arg(delta, "delta"), rational_arg(cost, "cost"))});
  });
}

nf_status nf_params_delta(const nf_params* p, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(p, "params").p.delta());
  });
}

nf_status nf_params_cost(const nf_params* p, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(p, "params").p.cost());
  });
}

void nf_params_free(nf_params* p) { delete p; }

nf_status nf_node_utility(const nf_graph* g, const nf_params* p, uint32_t i, char** out) {
  return guard([&] {
    need(out, "output pointer");
    const Graph& graph = need(g, "graph").g;
    if (i >= graph.node_count()) throw std::out_of_range("node out of range");
    *out = dup_rational(node_utility(graph, i, need(p, "params").p));
  });
}

nf_status nf_total_utility(const nf_graph* g, const nf_params* p, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(total_utility(need(g, "graph").g, need(p, "params").p));
  });
}

nf_status nf_is_pairwise_stable(const nf_graph* g, const nf_params* p, int* stable, nf_deviation* witness) {
  return guard([&] {
    const StabilityReport report = is_pairwise_stable(need(g, "graph").g, need(p, "params").p);
    need(stable, "output pointer") = report.stable ? 1 : 0;
    if (witness == nullptr) return;
    *witness = nf_deviation{NF_DEVIATION_ADD, 0, 0, nullptr, nullptr};
    if (!report.witness) return;
    const Deviation& d = *report.witness;
    witness->kind = d.kind == DeviationKind::Add ? NF_DEVIATION_ADD : NF_DEVIATION_DELETE;
    witness->i = d.i;
    witness->j = d.j;
    witness->gain_i = dup_rational(d.gain_i);
    witness->gain_j = dup_rational(d.gain_j);
  });
}

void nf_deviation_clear(nf_deviation* d) {
  if (d == nullptr) return;
  std::free(d->gain_i);
  std::free(d->gain_j);
  d->gain_i = nullptr;
  d->gain_j = nullptr;
}

nf_status nf_predicted_topologies(const nf_params* p, uint32_t* topologies, uint32_t* regions) {
  return guard([&] {
    const RegionPrediction pred = predicted_stable_topologies(need(p, "params").p);
    std::uint32_t t_mask = 0;
    std::uint32_t r_mask = 0;
    for (StableTopology t : pred.topologies) t_mask |= 1U << static_cast<unsigned>(t);
    for (Region r : pred.regions) r_mask |= 1U << static_cast<unsigned>(r);
    if (topologies != nullptr) *topologies = t_mask;
    if (regions != nullptr) *regions = r_mask;
  });
}

const char* nf_topology_name(nf_topology t) {
  if (t < NF_TOPOLOGY_COMPLETE || t > NF_TOPOLOGY_COMPLETE_EQUI_K_PARTITE) return "?";
  return topology_name(static_cast<StableTopology>(t)).data();
}

const char* nf_region_name(uint32_t region) {
  if (region > static_cast<uint32_t>(Region::R3d)) return "?";
  return region_name(static_cast<Region>(region)).data();
}

const char* nf_label_name(nf_label label) {
  if (label < NF_LABEL_NULL || label >= NF_LABEL_COUNT) return "?";
  return label_name(static_cast<ClassLabel>(label)).data();
}

nf_status nf_label_parse(const char* text, nf_label* out) {
  return guard([&] {
    const auto label = parse_label(need_text(text, "text"));
    if (!label) throw ParseError(std::string("unknown label: ") + text);
    need(out, "output pointer") = static_cast<nf_label>(*label);
  });
}

nf_status nf_classify(const nf_graph* g, nf_label* primary, uint32_t* matches) {
  return guard([&] {
    const Classification c = classify(need(g, "graph").g);
    if (primary != nullptr) *primary = static_cast<nf_label>(c.primary);
    if (matches != nullptr) {
      std::uint32_t mask = 0;
      for (ClassLabel l : c.all_matches) mask |= 1U << static_cast<unsigned>(l);
      *matches = mask;
    }
  });
}

nf_status nf_efficient_graph(const nf_params* p, uint32_t n, int resolve_with_oracle, unsigned workers,
                             nf_efficiency* out) {
  return guard([&] {
    need(out, "output pointer");
    const EfficiencyVerdict v = efficient_graph(need(p, "params").p, n, resolve_with_oracle != 0, workers);
    auto* graph = new nf_graph{v.graph};
    try {
      out->utility = dup_rational(v.utility);
    } catch (...) {
      delete graph;
      throw;
    }
    out->graph = graph;
    out->shape = static_cast<nf_shape>(v.label);
    out->certainty = static_cast<nf_certainty>(v.certainty);
    out->predicted = v.predicted ? static_cast<nf_shape>(*v.predicted) : NF_SHAPE_OTHER;
  });
}

void nf_efficiency_clear(nf_efficiency* e) {
  if (e == nullptr) return;
  std::free(e->utility);
  delete e->graph;
  e->utility = nullptr;
  e->graph = nullptr;
}

nf_status nf_triangle_lower_bound(uint32_t n, uint64_t edges, uint64_t* out) {
  return guard([&] { need(out, "output pointer") = triangle_lower_bound(n, edges); });
}

const char* nf_pos_kind_name(nf_pos_kind kind) {
  if (kind < NF_POS_EXACT || kind > NF_POS_UNDEFINED) return "?";
  return pos_kind_name(static_cast<PosKind>(kind)).data();
}

nf_status nf_price_of_stability(const nf_params* p, uint32_t n, nf_pos_method method, unsigned workers,
                                nf_pos* out) {
  return guard([&] {
    need(out, "output pointer");
    fill_pos(price_of_stability(need(p, "params").p, n, static_cast<PosMethod>(method), workers), out);
  });
}

void nf_pos_clear(nf_pos* v) {
  if (v == nullptr) return;
  std::free(v->value);
  std::free(v->best_stable_utility);
  std::free(v->efficient_utility);
  v->value = v->best_stable_utility = v->efficient_utility = nullptr;
}

nf_status nf_pos_grid_compute(uint32_t n, const char* step, nf_pos_method method, unsigned workers,
                              nf_pos_grid** out) {
  return guard([&] {
    emit(out, new nf_pos_grid{pos_grid(n, rational_arg(step, "step"), static_cast<PosMethod>(method), workers)});
  });
}

size_t nf_pos_grid_size(const nf_pos_grid* grid) { return grid ? grid->cells.size() : 0; }

nf_status nf_pos_grid_cell(const nf_pos_grid* grid, size_t k, char** delta, char** cost, nf_pos* out) {
  return guard([&] {
    const auto& cells = need(grid, "grid").cells;
    if (k >= cells.size()) throw std::out_of_range("grid cell out of range");
    need(delta, "delta pointer");
    need(cost, "cost pointer");
    need(out, "output pointer");
    *delta = dup_rational(cells[k].delta);
    *cost = dup_rational(cells[k].cost);
    fill_pos(cells[k].verdict, out);
  });
}

void nf_pos_grid_free(nf_pos_grid* grid) { delete grid; }

nf_status nf_sim_config_create(nf_sim_config** out) {
  return guard([&] { emit(out, new nf_sim_config{}); });
}

void nf_sim_config_free(nf_sim_config* cfg) { delete cfg; }

nf_status nf_sim_config_set_n(nf_sim_config* cfg, uint32_t n) {
  return guard([&] {
    if (n < 2 || n > kMaxNodes) throw std::invalid_argument("node count outside [2, 64]");
    need(cfg, "config").cfg.n = n;
  });
}

nf_status nf_sim_config_set_density(nf_sim_config* cfg, const char* density) {
  return guard([&] {
    const Rational d = rational_arg(density, "density");
    if (d < 0 || d > 1) throw std::invalid_argument("density outside [0, 1]");
    need(cfg, "config").cfg.density = d;
  });
}

nf_status nf_sim_config_set_params(nf_sim_config* cfg, const nf_params* p) {
  return guard([&] { need(cfg, "config").cfg.params = need(p, "params").p; });
}

nf_status nf_sim_config_set_max_iterations(nf_sim_config* cfg, uint32_t iterations) {
  return guard([&] { need(cfg, "config").cfg.max_iterations = iterations; });
}

nf_status nf_sim_config_set_idle_terminate(nf_sim_config* cfg, uint32_t iterations) {
  return guard([&] {
    if (iterations == 0) throw std::invalid_argument("idle streak must be at least 1");
    need(cfg, "config").cfg.idle_terminate = iterations;
  });
}

nf_status nf_sim_config_set_repetitions(nf_sim_config* cfg, uint32_t repetitions) {
  return guard([&] { need(cfg, "config").cfg.repetitions = repetitions; });
}

nf_status nf_sim_config_set_seed(nf_sim_config* cfg, uint64_t master_seed) {
  return guard([&] { need(cfg, "config").cfg.master_seed = master_seed; });
}

nf_status nf_sim_config_set_allow_indifferent_adds(nf_sim_config* cfg, int allow) {
  return guard([&] { need(cfg, "config").cfg.allow_indifferent_adds = allow != 0; });
}

nf_status nf_sim_config_set_record_trajectory(nf_sim_config* cfg, int record) {
  return guard([&] { need(cfg, "config").cfg.record_trajectory = record != 0; });
}

uint64_t nf_derive_run_seed(uint64_t master_seed, uint64_t cell, uint64_t rep) {
  return derive_run_seed(master_seed, cell, rep);
}

nf_status nf_run_once(const nf_sim_config* cfg, uint64_t run_seed, nf_run** out) {
  return guard([&] { emit(out, new nf_run{run_once(need(cfg, "config").cfg, run_seed)}); });
}

void nf_run_free(nf_run* run) { delete run; }
int nf_run_converged(const nf_run* run) { return run && run->r.converged ? 1 : 0; }
int nf_run_dynamic_equilibrium(const nf_run* run) { return run && run->r.dynamic_equilibrium ? 1 : 0; }
uint32_t nf_run_iterations(const nf_run* run) { return run ? run->r.iterations_used : 0; }
uint64_t nf_run_acts(const nf_run* run) { return run ? run->r.acts : 0; }
nf_label nf_run_label(const nf_run* run) {
  return run ? static_cast<nf_label>(run->r.label) : NF_LABEL_UNCLASSIFIED;
}

uint32_t nf_run_matches(const nf_run* run) {
  if (run == nullptr) return 0;
  std::uint32_t mask = 0;
  for (ClassLabel l : run->r.all_matches) mask |= 1U << static_cast<unsigned>(l);
  return mask;
}

nf_status nf_run_final_utility(const nf_run* run, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(run, "run").r.final_utility);
  });
}

nf_status nf_run_final_clustering(const nf_run* run, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(run, "run").r.final_clustering);
  });
}

nf_status nf_run_initial_graph(const nf_run* run, nf_graph** out) {
  return guard([&] { emit(out, new nf_graph{need(run, "run").r.initial_graph}); });
}

nf_status nf_run_final_graph(const nf_run* run, nf_graph** out) {
  return guard([&] { emit(out, new nf_graph{need(run, "run").r.final_graph}); });
}

size_t nf_run_trajectory_size(const nf_run* run) { return run ? run->r.trajectory.size() : 0; }

nf_status nf_run_trajectory_point(const nf_run* run, size_t k, uint32_t* iteration, char** clustering,
                                  char** utility) {
  return guard([&] {
    const auto& traj = need(run, "run").r.trajectory;
    if (k >= traj.size()) throw std::out_of_range("trajectory index out of range");
    if (iteration != nullptr) *iteration = traj[k].iteration;
    char* c = clustering != nullptr ? dup_rational(traj[k].clustering) : nullptr;
    try {
      if (utility != nullptr) *utility = dup_rational(traj[k].total_utility);
    } catch (...) {
      std::free(c);
      throw;
    }
    if (clustering != nullptr) *clustering = c;
  });
}

nf_status nf_run_batch(const nf_sim_config* cfg, uint64_t cell, nf_batch** out) {
  return guard([&] { emit(out, new nf_batch{run_batch(need(cfg, "config").cfg, cell)}); });
}

void nf_batch_free(nf_batch* batch) { delete batch; }
uint32_t nf_batch_repetitions(const nf_batch* batch) { return batch ? batch->s.repetitions : 0; }
nf_label nf_batch_modal_class(const nf_batch* batch) {
  return batch ? static_cast<nf_label>(batch->s.modal_class) : NF_LABEL_UNCLASSIFIED;
}

uint32_t nf_batch_frequency(const nf_batch* batch, nf_label label) {
  if (batch == nullptr || label < NF_LABEL_NULL || label >= NF_LABEL_COUNT) return 0;
  return batch->s.class_frequencies[static_cast<std::size_t>(label)];
}

uint32_t nf_batch_match_frequency(const nf_batch* batch, nf_label label) {
  if (batch == nullptr || label < NF_LABEL_NULL || label >= NF_LABEL_COUNT) return 0;
  return batch->s.match_frequencies[static_cast<std::size_t>(label)];
}

uint32_t nf_batch_converged(const nf_batch* batch) { return batch ? batch->s.converged_runs : 0; }
uint32_t nf_batch_dynamic_equilibria(const nf_batch* batch) { return batch ? batch->s.dynamic_equilibria : 0; }
uint32_t nf_batch_unstable_converged(const nf_batch* batch) { return batch ? batch->s.unstable_converged : 0; }

nf_status nf_batch_mean_utility(const nf_batch* batch, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(batch, "batch").s.mean_utility);
  });
}

nf_status nf_batch_mean_iterations(const nf_batch* batch, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(batch, "batch").s.mean_iterations);
  });
}

nf_status nf_batch_mean_acts(const nf_batch* batch, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(batch, "batch").s.mean_acts);
  });
}

nf_status nf_batch_mean_clustering(const nf_batch* batch, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(batch, "batch").s.mean_final_clustering);
  });
}

nf_status nf_oracle_enumerate(uint32_t n, const nf_params* p, unsigned workers, nf_oracle** out) {
  return guard([&] { emit(out, new nf_oracle{enumerate(n, need(p, "params").p, workers)}); });
}

void nf_oracle_free(nf_oracle* o) { delete o; }
uint64_t nf_oracle_visited(const nf_oracle* o) { return o ? o->r.visited : 0; }
size_t nf_oracle_stable_count(const nf_oracle* o) { return o ? o->r.stable_graphs.size() : 0; }
uint64_t nf_oracle_stable_code(const nf_oracle* o, size_t k) {
  return o && k < o->r.stable_graphs.size() ? o->r.stable_graphs[k] : 0;
}
size_t nf_oracle_efficient_count(const nf_oracle* o) { return o ? o->r.efficient_graphs.size() : 0; }
uint64_t nf_oracle_efficient_code(const nf_oracle* o, size_t k) {
  return o && k < o->r.efficient_graphs.size() ? o->r.efficient_graphs[k] : 0;
}

nf_status nf_oracle_max_utility(const nf_oracle* o, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_rational(need(o, "oracle").r.max_utility);
  });
}

nf_status nf_oracle_max_stable_utility(const nf_oracle* o, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_optional(need(o, "oracle").r.max_stable_utility);
  });
}

nf_status nf_oracle_pos(const nf_oracle* o, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup_optional(need(o, "oracle").r.pos);
  });
}

nf_status nf_oracle_dump(const nf_oracle* o, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup(format_dump(need(o, "oracle").r));
  });
}

nf_status nf_graph_from_code(uint32_t n, uint64_t code, nf_graph** out) {
  return guard([&] { emit(out, new nf_graph{graph_from_code(n, code)}); });
}

nf_status nf_verify_cells(uint32_t n, const nf_params* const* cells, size_t count, unsigned workers,
                          nf_verify_report** out) {
  return guard([&] {
    if (count > 0) need(cells, "cells");
    std::vector<Params> list;
    list.reserve(count);
    for (size_t k = 0; k < count; ++k) list.push_back(need(cells[k], "cell").p);
    emit(out, new nf_verify_report{verify_cells(n, list, workers)});
  });
}

void nf_verify_report_free(nf_verify_report* r) { delete r; }

size_t nf_verify_checked(const nf_verify_report* r, nf_claim claim) {
  return r ? r->r.checked(static_cast<Claim>(claim)) : 0;
}

size_t nf_verify_failures(const nf_verify_report* r, nf_claim claim) {
  return r ? r->r.failures(static_cast<Claim>(claim)) : 0;
}

nf_status nf_verify_format(const nf_verify_report* r, char** out) {
  return guard([&] {
    need(out, "output pointer");
    *out = dup(format_report(need(r, "report").r));
  });
}

}  // extern "C"
