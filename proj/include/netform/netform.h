#ifndef NETFORM_NETFORM_H
#define NETFORM_NETFORM_H

/*
 * C interface to the netform library.
 *
 * Every fallible call returns nf_status; on failure nf_last_error() describes
 * the most recent error on the calling thread. Objects are opaque handles
 * released with their matching *_free function. Exact rational values travel
 * as decimal or "p/q" strings; strings returned through char** are owned by
 * the caller and released with nf_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(NETFORM_BUILDING)
#define NF_API __attribute__((visibility("default")))
#else
#define NF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nf_status {
  NF_OK = 0,
  NF_ERR_INVALID_ARGUMENT = 1,
  NF_ERR_PARSE = 2,
  NF_ERR_LIMIT = 3,
  NF_ERR_OUT_OF_MEMORY = 4,
  NF_ERR_INTERNAL = 5,
} nf_status;

NF_API const char* nf_last_error(void);
NF_API const char* nf_status_string(nf_status status);
NF_API void nf_string_free(char* s);

/* Rationals as text */

/* Reformats a rational ("3/8", "0.375") as a decimal rounded half away from
   zero to `places` digits. */
NF_API nf_status nf_rational_format_decimal(const char* value, int places, char** out);
/* Shortest terminating decimal ("0.05", "1"), else rounded to 12 digits. */
NF_API nf_status nf_rational_format_compact(const char* value, char** out);
/* Canonical "p/q" form. */
NF_API nf_status nf_rational_canonical(const char* value, char** out);
/* Sign of a - b in *out (-1, 0, 1). */
NF_API nf_status nf_rational_compare(const char* a, const char* b, int* out);
/* lo, lo + step, ..., hi as canonical strings. Release with nf_string_array_free. */
NF_API nf_status nf_rational_range(const char* lo, const char* hi, const char* step, char*** out, size_t* count);
NF_API void nf_string_array_free(char** items, size_t count);

/* Graphs */

typedef struct nf_graph nf_graph;

typedef enum nf_standard_kind {
  NF_STANDARD_COMPLETE = 0,
  NF_STANDARD_STAR = 1,
  NF_STANDARD_CYCLE = 2,
  NF_STANDARD_WHEEL = 3,
} nf_standard_kind;

NF_API nf_status nf_graph_create(uint32_t n, nf_graph** out);
NF_API nf_status nf_graph_standard(nf_standard_kind kind, uint32_t n, nf_graph** out);
NF_API nf_status nf_graph_complete_multipartite(const uint32_t* sizes, size_t count, nf_graph** out);
NF_API nf_status nf_graph_turan(uint32_t n, nf_graph** out);
/* Random graph with round(density * C(n,2)) edges drawn from a generator
   seeded with `seed`. */
NF_API nf_status nf_graph_random(uint32_t n, const char* density, uint64_t seed, nf_graph** out);
/* Edge-list text: "n <count>" then one "i j" line per edge. */
NF_API nf_status nf_graph_parse(const char* text, nf_graph** out);
NF_API nf_status nf_graph_format(const nf_graph* g, char** out);
NF_API nf_status nf_graph_clone(const nf_graph* g, nf_graph** out);
NF_API void nf_graph_free(nf_graph* g);

NF_API uint32_t nf_graph_node_count(const nf_graph* g);
NF_API size_t nf_graph_edge_count(const nf_graph* g);
NF_API nf_status nf_graph_add_edge(nf_graph* g, uint32_t i, uint32_t j);
NF_API nf_status nf_graph_remove_edge(nf_graph* g, uint32_t i, uint32_t j);
NF_API nf_status nf_graph_has_edge(const nf_graph* g, uint32_t i, uint32_t j, int* out);
NF_API nf_status nf_graph_degree(const nf_graph* g, uint32_t i, uint32_t* out);
NF_API nf_status nf_graph_triangle_count(const nf_graph* g, uint64_t* out);
NF_API nf_status nf_graph_clustering(const nf_graph* g, char** out);
NF_API int nf_graph_equal(const nf_graph* a, const nf_graph* b);

/* Parameters */

typedef struct nf_params nf_params;

/* delta and cost in (0, 1]; the value 1 is accepted as a grid end point. */
NF_API nf_status nf_params_create(const char* delta, const char* cost, nf_params** out);
NF_API nf_status nf_params_delta(const nf_params* p, char** out);
NF_API nf_status nf_params_cost(const nf_params* p, char** out);
NF_API void nf_params_free(nf_params* p);

/* Payoff and stability */

NF_API nf_status nf_node_utility(const nf_graph* g, const nf_params* p, uint32_t i, char** out);
NF_API nf_status nf_total_utility(const nf_graph* g, const nf_params* p, char** out);

typedef enum nf_deviation_kind { NF_DEVIATION_ADD = 0, NF_DEVIATION_DELETE = 1 } nf_deviation_kind;

typedef struct nf_deviation {
  nf_deviation_kind kind;
  uint32_t i;
  uint32_t j;
  char* gain_i;
  char* gain_j;
} nf_deviation;

/* *stable is 1 or 0. When unstable and witness is non-null, the first
   profitable deviation is stored there; release with nf_deviation_clear. */
NF_API nf_status nf_is_pairwise_stable(const nf_graph* g, const nf_params* p, int* stable, nf_deviation* witness);
NF_API void nf_deviation_clear(nf_deviation* d);

typedef enum nf_topology {
  NF_TOPOLOGY_COMPLETE = 0,
  NF_TOPOLOGY_NULL = 1,
  NF_TOPOLOGY_CYCLE = 2,
  NF_TOPOLOGY_COMPLETE_BIPARTITE = 3,
  NF_TOPOLOGY_COMPLETE_EQUI_TRIPARTITE = 4,
  NF_TOPOLOGY_COMPLETE_EQUI_K_PARTITE = 5,
} nf_topology;

/* Bit t of *topologies is set when topology t is predicted stable; bit r of
   *regions for each applicable region in the order 1a 1b 1c 2 3a 3b 3c 3d. */
NF_API nf_status nf_predicted_topologies(const nf_params* p, uint32_t* topologies, uint32_t* regions);
NF_API const char* nf_topology_name(nf_topology t);
NF_API const char* nf_region_name(uint32_t region);

/* Classifier */

typedef enum nf_label {
  NF_LABEL_NULL = 0,
  NF_LABEL_STAR,
  NF_LABEL_SHARED,
  NF_LABEL_COMPLETE,
  NF_LABEL_NEAR_NULL,
  NF_LABEL_NEAR_STAR,
  NF_LABEL_NEAR_SHARED,
  NF_LABEL_NEAR_COMPLETE,
  NF_LABEL_BIPARTITE_COMPLETE,
  NF_LABEL_TURAN,
  NF_LABEL_EQUI_K_PARTITE_COMPLETE,
  NF_LABEL_EQUI_K_PARTITE,
  NF_LABEL_K_PARTITE_COMPLETE,
  NF_LABEL_K_PARTITE,
  NF_LABEL_UNCLASSIFIED,
  NF_LABEL_COUNT
} nf_label;

NF_API const char* nf_label_name(nf_label label);
NF_API nf_status nf_label_parse(const char* text, nf_label* out);
/* Bit l of *matches is set for every label the graph passes. */
NF_API nf_status nf_classify(const nf_graph* g, nf_label* primary, uint32_t* matches);

/* Efficiency */

typedef enum nf_shape {
  NF_SHAPE_NULL = 0,
  NF_SHAPE_TURAN = 1,
  NF_SHAPE_COMPLETE = 2,
  NF_SHAPE_CONJECTURED = 3,
  NF_SHAPE_OTHER = 4,
} nf_shape;

typedef enum nf_certainty {
  NF_CERTAINTY_PROVEN = 0,
  NF_CERTAINTY_CONJECTURED = 1,
  NF_CERTAINTY_ENUMERATED = 2,
} nf_certainty;

typedef struct nf_efficiency {
  nf_shape shape;
  nf_certainty certainty;
  /* Conjectured region only, otherwise NF_SHAPE_OTHER. */
  nf_shape predicted;
  char* utility;
  nf_graph* graph;
} nf_efficiency;

NF_API nf_status nf_efficient_graph(const nf_params* p, uint32_t n, int resolve_with_oracle, unsigned workers,
                                    nf_efficiency* out);
NF_API void nf_efficiency_clear(nf_efficiency* e);
NF_API nf_status nf_triangle_lower_bound(uint32_t n, uint64_t edges, uint64_t* out);

/* Price of stability */

typedef enum nf_pos_kind { NF_POS_EXACT = 0, NF_POS_LOWER_BOUND = 1, NF_POS_UNDEFINED = 2 } nf_pos_kind;
typedef enum nf_pos_method { NF_POS_CLOSED_FORM = 0, NF_POS_ORACLE = 1 } nf_pos_method;

typedef struct nf_pos {
  nf_pos_kind kind;
  nf_pos_method method;
  /* Null strings mean "not available". */
  char* value;
  char* best_stable_utility;
  char* efficient_utility;
  int exhaustive;
} nf_pos;

NF_API const char* nf_pos_kind_name(nf_pos_kind kind);
NF_API nf_status nf_price_of_stability(const nf_params* p, uint32_t n, nf_pos_method method, unsigned workers,
                                       nf_pos* out);
NF_API void nf_pos_clear(nf_pos* v);

typedef struct nf_pos_grid nf_pos_grid;

/* Interior cells k*step on both axes, row-major by delta then cost. */
NF_API nf_status nf_pos_grid_compute(uint32_t n, const char* step, nf_pos_method method, unsigned workers,
                                     nf_pos_grid** out);
NF_API size_t nf_pos_grid_size(const nf_pos_grid* grid);
NF_API nf_status nf_pos_grid_cell(const nf_pos_grid* grid, size_t k, char** delta, char** cost, nf_pos* out);
NF_API void nf_pos_grid_free(nf_pos_grid* grid);

/* Dynamics */

typedef struct nf_sim_config nf_sim_config;

/* Defaults: n 10, density 0, delta = cost = 1/2, 1000 iterations, 30 idle
   iterations to converge, 100 repetitions, seed 0. */
NF_API nf_status nf_sim_config_create(nf_sim_config** out);
NF_API void nf_sim_config_free(nf_sim_config* cfg);
NF_API nf_status nf_sim_config_set_n(nf_sim_config* cfg, uint32_t n);
NF_API nf_status nf_sim_config_set_density(nf_sim_config* cfg, const char* density);
NF_API nf_status nf_sim_config_set_params(nf_sim_config* cfg, const nf_params* p);
NF_API nf_status nf_sim_config_set_max_iterations(nf_sim_config* cfg, uint32_t iterations);
NF_API nf_status nf_sim_config_set_idle_terminate(nf_sim_config* cfg, uint32_t iterations);
NF_API nf_status nf_sim_config_set_repetitions(nf_sim_config* cfg, uint32_t repetitions);
NF_API nf_status nf_sim_config_set_seed(nf_sim_config* cfg, uint64_t master_seed);
NF_API nf_status nf_sim_config_set_allow_indifferent_adds(nf_sim_config* cfg, int allow);
NF_API nf_status nf_sim_config_set_record_trajectory(nf_sim_config* cfg, int record);

/* Seed for repetition `rep` of grid cell `cell` under a master seed. */
NF_API uint64_t nf_derive_run_seed(uint64_t master_seed, uint64_t cell, uint64_t rep);

typedef struct nf_run nf_run;

NF_API nf_status nf_run_once(const nf_sim_config* cfg, uint64_t run_seed, nf_run** out);
NF_API void nf_run_free(nf_run* run);
NF_API int nf_run_converged(const nf_run* run);
NF_API int nf_run_dynamic_equilibrium(const nf_run* run);
NF_API uint32_t nf_run_iterations(const nf_run* run);
NF_API uint64_t nf_run_acts(const nf_run* run);
NF_API nf_label nf_run_label(const nf_run* run);
NF_API uint32_t nf_run_matches(const nf_run* run);
NF_API nf_status nf_run_final_utility(const nf_run* run, char** out);
NF_API nf_status nf_run_final_clustering(const nf_run* run, char** out);
NF_API nf_status nf_run_initial_graph(const nf_run* run, nf_graph** out);
NF_API nf_status nf_run_final_graph(const nf_run* run, nf_graph** out);
NF_API size_t nf_run_trajectory_size(const nf_run* run);
NF_API nf_status nf_run_trajectory_point(const nf_run* run, size_t k, uint32_t* iteration, char** clustering,
                                         char** utility);

typedef struct nf_batch nf_batch;

/* Repetitions seeded by nf_derive_run_seed(master_seed, cell, rep). */
NF_API nf_status nf_run_batch(const nf_sim_config* cfg, uint64_t cell, nf_batch** out);
NF_API void nf_batch_free(nf_batch* batch);
NF_API uint32_t nf_batch_repetitions(const nf_batch* batch);
NF_API nf_label nf_batch_modal_class(const nf_batch* batch);
/* Runs whose primary label is `label`. */
NF_API uint32_t nf_batch_frequency(const nf_batch* batch, nf_label label);
/* Runs whose label set contains `label`. */
NF_API uint32_t nf_batch_match_frequency(const nf_batch* batch, nf_label label);
NF_API uint32_t nf_batch_converged(const nf_batch* batch);
NF_API uint32_t nf_batch_dynamic_equilibria(const nf_batch* batch);
NF_API uint32_t nf_batch_unstable_converged(const nf_batch* batch);
NF_API nf_status nf_batch_mean_utility(const nf_batch* batch, char** out);
NF_API nf_status nf_batch_mean_iterations(const nf_batch* batch, char** out);
NF_API nf_status nf_batch_mean_acts(const nf_batch* batch, char** out);
NF_API nf_status nf_batch_mean_clustering(const nf_batch* batch, char** out);

/* Exhaustive enumeration (n <= 7) */

typedef struct nf_oracle nf_oracle;

NF_API nf_status nf_oracle_enumerate(uint32_t n, const nf_params* p, unsigned workers, nf_oracle** out);
NF_API void nf_oracle_free(nf_oracle* o);
NF_API uint64_t nf_oracle_visited(const nf_oracle* o);
NF_API size_t nf_oracle_stable_count(const nf_oracle* o);
NF_API uint64_t nf_oracle_stable_code(const nf_oracle* o, size_t k);
NF_API size_t nf_oracle_efficient_count(const nf_oracle* o);
NF_API uint64_t nf_oracle_efficient_code(const nf_oracle* o, size_t k);
NF_API nf_status nf_oracle_max_utility(const nf_oracle* o, char** out);
/* *out is null when no graph is stable. */
NF_API nf_status nf_oracle_max_stable_utility(const nf_oracle* o, char** out);
/* *out is null when the ratio is undefined. */
NF_API nf_status nf_oracle_pos(const nf_oracle* o, char** out);
NF_API nf_status nf_oracle_dump(const nf_oracle* o, char** out);
NF_API nf_status nf_graph_from_code(uint32_t n, uint64_t code, nf_graph** out);

typedef enum nf_claim {
  NF_CLAIM_STABLE_TOPOLOGIES = 0,
  NF_CLAIM_EFFICIENT_WINNER = 1,
  NF_CLAIM_POS_ONE = 2,
  NF_CLAIM_POS_LOWER_BOUND = 3,
  NF_CLAIM_CONJECTURE_AUDIT = 4,
} nf_claim;

typedef struct nf_verify_report nf_verify_report;

/* Checks the closed-form predictions against enumeration on every listed
   parameter cell. */
NF_API nf_status nf_verify_cells(uint32_t n, const nf_params* const* cells, size_t count, unsigned workers,
                                 nf_verify_report** out);
NF_API void nf_verify_report_free(nf_verify_report* r);
NF_API size_t nf_verify_checked(const nf_verify_report* r, nf_claim claim);
NF_API size_t nf_verify_failures(const nf_verify_report* r, nf_claim claim);
/* Summary header lines and one CSV row per check. */
NF_API nf_status nf_verify_format(const nf_verify_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
