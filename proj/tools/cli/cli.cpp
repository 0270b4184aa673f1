#include "cli.hpp"

#include "netform/netform.h"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace netform::cli {

namespace {

namespace fs = std::filesystem;

struct Failure : std::runtime_error {
  Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

[[noreturn]] void usage_error(const std::string& what) { throw Failure(kExitUsage, what); }
[[noreturn]] void io_error(const std::string& what) { throw Failure(kExitIo, what); }

void check(nf_status status) {
  if (status == NF_OK) return;
  const std::string what = nf_last_error();
  switch (status) {
    case NF_ERR_INVALID_ARGUMENT:
    case NF_ERR_PARSE:
    case NF_ERR_LIMIT: throw Failure(kExitUsage, what);
    default: throw Failure(kExitInvariant, what);
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using GraphHandle = Handle<nf_graph, nf_graph_free>;
using ParamsHandle = Handle<nf_params, nf_params_free>;
using ConfigHandle = Handle<nf_sim_config, nf_sim_config_free>;
using RunHandle = Handle<nf_run, nf_run_free>;
using BatchHandle = Handle<nf_batch, nf_batch_free>;
using OracleHandle = Handle<nf_oracle, nf_oracle_free>;
using ReportHandle = Handle<nf_verify_report, nf_verify_report_free>;
using PosGridHandle = Handle<nf_pos_grid, nf_pos_grid_free>;

// Copies a library-owned string and releases it; null becomes "".
std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  nf_string_free(s);
  return out;
}

std::string compact(const std::string& value) {
  char* out = nullptr;
  check(nf_rational_format_compact(value.c_str(), &out));
  return take(out);
}

std::string decimal6(const std::string& value) {
  char* out = nullptr;
  check(nf_rational_format_decimal(value.c_str(), 6, &out));
  return take(out);
}

std::string canonical(const std::string& value) {
  char* out = nullptr;
  check(nf_rational_canonical(value.c_str(), &out));
  return take(out);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) usage_error("empty item in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) usage_error("empty list");
  return out;
}

// "lo:hi" or a single value, stepped by `step`.
std::vector<std::string> parse_range(const std::string& text, const std::string& step) {
  const auto parts = split(text, ':');
  if (parts.size() > 2) usage_error("range '" + text + "' is not lo:hi");
  const std::string& lo = parts.front();
  const std::string& hi = parts.back();
  char** items = nullptr;
  std::size_t count = 0;
  check(nf_rational_range(lo.c_str(), hi.c_str(), step.c_str(), &items, &count));
  std::vector<std::string> out(items, items + count);
  nf_string_array_free(items, count);
  return out;
}

std::vector<std::uint32_t> parse_sizes(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const std::string& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v < 2 || v > 64) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::logic_error&) {
      usage_error("node count '" + item + "' is not an integer in [2, 64]");
    }
  }
  return out;
}

ParamsHandle make_params(const std::string& delta, const std::string& cost) {
  nf_params* p = nullptr;
  check(nf_params_create(delta.c_str(), cost.c_str(), &p));
  return ParamsHandle(p);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) io_error("cannot open " + path.string() + " for writing");
  file << content;
  file.close();
  if (!file) io_error("failed writing " + path.string());
}

fs::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) io_error("cannot create output directory " + dir);
  return fs::path(dir);
}

// The manifest doubles as a --config file reproducing the run.
void write_manifest(const fs::path& dir, const CLI::App& sub) {
  std::string text = "# effective settings for: " + sub.get_name() + "\n";
  std::istringstream lines(sub.config_to_str(true, false));
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("config=", 0) != 0) text += line + '\n';
  }
  write_file(dir / "manifest.txt", text);
}

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

// Runs task(k) for k in [0, count) on `workers` threads; the first exception
// is rethrown after all threads finish.
template <class Task>
void parallel_for(std::size_t count, unsigned workers, Task task) {
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, workers), count));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t k = next++; k < count; k = next++) task(k);
    } catch (...) {
      errors[id] = std::current_exception();
      next = count;
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Settings shared by the simulation commands.
struct SimSettings {
  std::string n_list = "10";
  std::string delta_range = "0.05:1";
  std::string cost_range = "0.05:1";
  std::string step = "0.05";
  std::string densities = "0,0.35,0.7";
  std::uint32_t reps = 100;
  std::uint64_t seed = 0;
  std::uint32_t max_iters = 1000;
  std::uint32_t idle_terminate = 30;
  bool indifferent_adds = false;
  unsigned workers = 0;
  std::string out = "out";
};

void add_grid_options(CLI::App* sub, SimSettings& s) {
  sub->add_option("--n", s.n_list, "Node counts, comma separated")->capture_default_str();
  sub->add_option("--delta-range", s.delta_range, "Link benefit range lo:hi")->capture_default_str();
  sub->add_option("--cost-range", s.cost_range, "Link cost range lo:hi")->capture_default_str();
  sub->add_option("--step", s.step, "Grid step for both ranges")->capture_default_str();
}

void add_dynamics_options(CLI::App* sub, SimSettings& s) {
  sub->add_option("--seed", s.seed, "Master seed")->capture_default_str();
  sub->add_option("--max-iters", s.max_iters, "Iteration cap per run")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--idle-terminate", s.idle_terminate, "Idle iterations that count as convergence")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_flag("--allow-indifferent-adds", s.indifferent_adds, "Let nodes add links with zero gain");
}

void add_output_options(CLI::App* sub, SimSettings& s) {
  sub->add_option("--workers", s.workers, "Worker threads (0: all cores)")->capture_default_str();
  sub->add_option("--out", s.out, "Output directory")->capture_default_str();
}

struct Cell {
  std::uint32_t n;
  std::string delta;
  std::string cost;
  std::string density;
};

struct CellStats {
  nf_label modal = NF_LABEL_UNCLASSIFIED;
  std::uint32_t reps = 0;
  std::uint32_t unstable = 0;
  std::array<std::uint32_t, NF_LABEL_COUNT> freq{};
  std::array<std::uint32_t, NF_LABEL_COUNT> matches{};
  std::string mean_utility, mean_iterations, mean_acts, mean_clustering;
};

// Cells in output order: n, then delta, then cost, then density. A cell's
// position is its seed index.
std::vector<Cell> sweep_cells(const SimSettings& s) {
  const auto ns = parse_sizes(s.n_list);
  const auto deltas = parse_range(s.delta_range, s.step);
  const auto costs = parse_range(s.cost_range, s.step);
  std::vector<std::string> densities;
  for (const std::string& d : split(s.densities, ',')) densities.push_back(canonical(d));
  std::vector<Cell> cells;
  for (std::uint32_t n : ns) {
    for (const auto& d : deltas) {
      for (const auto& c : costs) {
        for (const auto& g : densities) cells.push_back({n, d, c, g});
      }
    }
  }
  // reject bad parameters before spending time on simulation
  for (const auto& d : deltas) make_params(d, costs.front());
  for (const auto& c : costs) make_params(deltas.front(), c);
  return cells;
}

CellStats simulate_cell(const SimSettings& s, const Cell& cell, std::uint64_t index) {
  nf_sim_config* raw = nullptr;
  check(nf_sim_config_create(&raw));
  ConfigHandle cfg(raw);
  const ParamsHandle params = make_params(cell.delta, cell.cost);
  check(nf_sim_config_set_n(cfg.get(), cell.n));
  check(nf_sim_config_set_density(cfg.get(), cell.density.c_str()));
  check(nf_sim_config_set_params(cfg.get(), params.get()));
  check(nf_sim_config_set_max_iterations(cfg.get(), s.max_iters));
  check(nf_sim_config_set_idle_terminate(cfg.get(), s.idle_terminate));
  check(nf_sim_config_set_repetitions(cfg.get(), s.reps));
  check(nf_sim_config_set_seed(cfg.get(), s.seed));
  check(nf_sim_config_set_allow_indifferent_adds(cfg.get(), s.indifferent_adds ? 1 : 0));

  nf_batch* braw = nullptr;
  check(nf_run_batch(cfg.get(), index, &braw));
  BatchHandle batch(braw);
  CellStats out;
  out.modal = nf_batch_modal_class(batch.get());
  out.reps = nf_batch_repetitions(batch.get());
  out.unstable = nf_batch_unstable_converged(batch.get());
  for (int l = 0; l < NF_LABEL_COUNT; ++l) {
    out.freq[l] = nf_batch_frequency(batch.get(), static_cast<nf_label>(l));
    out.matches[l] = nf_batch_match_frequency(batch.get(), static_cast<nf_label>(l));
  }
  char* text = nullptr;
  check(nf_batch_mean_utility(batch.get(), &text));
  out.mean_utility = take(text);
  check(nf_batch_mean_iterations(batch.get(), &text));
  out.mean_iterations = take(text);
  check(nf_batch_mean_acts(batch.get(), &text));
  out.mean_acts = take(text);
  check(nf_batch_mean_clustering(batch.get(), &text));
  out.mean_clustering = take(text);
  return out;
}

std::vector<CellStats> simulate_all(const SimSettings& s, const std::vector<Cell>& cells) {
  std::vector<CellStats> stats(cells.size());
  parallel_for(cells.size(), s.workers == 0 ? default_workers() : s.workers,
               [&](std::size_t k) { stats[k] = simulate_cell(s, cells[k], k); });
  return stats;
}

std::uint32_t total_unstable(const std::vector<CellStats>& stats) {
  std::uint32_t total = 0;
  for (const auto& st : stats) total += st.unstable;
  return total;
}

void fail_on_unstable(const std::vector<CellStats>& stats) {
  if (const std::uint32_t bad = total_unstable(stats); bad > 0) {
    throw Failure(kExitInvariant, std::to_string(bad) + " converged runs ended in a graph that is not pairwise stable");
  }
}

int cmd_sweep(const SimSettings& s, const CLI::App& sub, std::ostream& out) {
  const auto cells = sweep_cells(s);
  const fs::path dir = prepare_dir(s.out);
  const auto stats = simulate_all(s, cells);

  std::string csv = "delta,cost,density,n,reps,modal_class,mean_utility,mean_iterations,mean_acts,mean_final_clustering";
  for (int l = 0; l < NF_LABEL_COUNT; ++l) csv += std::string(",freq_") + nf_label_name(static_cast<nf_label>(l));
  csv += '\n';
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const Cell& c = cells[k];
    const CellStats& st = stats[k];
    csv += compact(c.delta) + ',' + compact(c.cost) + ',' + compact(c.density) + ',' + std::to_string(c.n) + ',' +
           std::to_string(st.reps) + ',' + nf_label_name(st.modal) + ',' + decimal6(st.mean_utility) + ',' +
           decimal6(st.mean_iterations) + ',' + decimal6(st.mean_acts) + ',' + decimal6(st.mean_clustering);
    for (std::uint32_t f : st.freq) csv += ',' + std::to_string(f);
    csv += '\n';
  }
  write_file(dir / "sweep.csv", csv);
  write_manifest(dir, sub);
  out << "wrote " << cells.size() << " cells to " << (dir / "sweep.csv").string() << '\n';
  fail_on_unstable(stats);
  return kExitOk;
}

bool has_divisor_between(std::uint32_t n, std::uint32_t lo, std::uint32_t hi) {
  for (std::uint32_t k = lo; k <= hi; ++k) {
    if (n % k == 0) return true;
  }
  return false;
}

// Whether the closed-form stability regions name a topology, constructible on
// n nodes, that the classifier reports under `label`.
bool predicted_label(nf_label label, std::uint32_t topologies, std::uint32_t n) {
  auto has = [&](nf_topology t) { return ((topologies >> t) & 1U) != 0; };
  switch (label) {
    case NF_LABEL_NULL: return has(NF_TOPOLOGY_NULL);
    case NF_LABEL_COMPLETE: return has(NF_TOPOLOGY_COMPLETE);
    case NF_LABEL_SHARED: return has(NF_TOPOLOGY_CYCLE) && n >= 4;
    case NF_LABEL_BIPARTITE_COMPLETE:
    case NF_LABEL_TURAN: return has(NF_TOPOLOGY_COMPLETE_BIPARTITE) && n >= 4;
    case NF_LABEL_EQUI_K_PARTITE_COMPLETE:
    case NF_LABEL_K_PARTITE_COMPLETE:
      return (has(NF_TOPOLOGY_COMPLETE_EQUI_TRIPARTITE) && n % 3 == 0 && n >= 6) ||
             (has(NF_TOPOLOGY_COMPLETE_EQUI_K_PARTITE) && n >= 6 && has_divisor_between(n, 3, n / 2));
    default: return false;
  }
}

int cmd_regions(const SimSettings& s, const CLI::App& sub, std::ostream& out) {
  const auto cells = sweep_cells(s);
  const fs::path dir = prepare_dir(s.out);
  const auto stats = simulate_all(s, cells);
  const auto ns = parse_sizes(s.n_list);

  for (std::uint32_t n : ns) {
    fs::path target = dir;
    if (ns.size() > 1) target = prepare_dir((dir / ("n" + std::to_string(n))).string());
    // Cells for one n are contiguous; merge consecutive densities of a (delta, cost) pair.
    for (int l = 0; l < NF_LABEL_COUNT; ++l) {
      const auto label = static_cast<nf_label>(l);
      std::string csv = "delta,cost,observed,predicted,match\n";
      std::size_t matches = 0, observed_only = 0, predicted_only = 0;
      for (std::size_t k = 0; k < cells.size();) {
        if (cells[k].n != n) {
          ++k;
          continue;
        }
        const Cell& head = cells[k];
        bool observed = false;
        std::size_t j = k;
        for (; j < cells.size() && cells[j].n == n && cells[j].delta == head.delta && cells[j].cost == head.cost; ++j) {
          observed = observed || stats[j].matches[l] > 0;
        }
        k = j;
        const ParamsHandle params = make_params(head.delta, head.cost);
        std::uint32_t topologies = 0;
        check(nf_predicted_topologies(params.get(), &topologies, nullptr));
        const bool predicted = predicted_label(label, topologies, n);
        const char* verdict = observed && predicted ? "match"
                              : observed            ? "observed-only"
                              : predicted           ? "predicted-only"
                                                    : "none";
        matches += observed && predicted;
        observed_only += observed && !predicted;
        predicted_only += predicted && !observed;
        csv += compact(head.delta) + ',' + compact(head.cost) + ',' + (observed ? "1" : "0") + ',' +
               (predicted ? "1" : "0") + ',' + verdict + '\n';
      }
      write_file(target / (std::string("regions_") + nf_label_name(label) + ".csv"), csv);
      if (matches + observed_only + predicted_only > 0) {
        out << "n=" << n << ' ' << nf_label_name(label) << ": match=" << matches << " observed-only=" << observed_only
            << " predicted-only=" << predicted_only << '\n';
      }
    }
  }
  write_manifest(dir, sub);
  fail_on_unstable(stats);
  return kExitOk;
}

struct RunSettings {
  std::uint32_t n = 20;
  std::string delta = "0.5";
  std::string cost = "0.5";
  std::string density = "0";
};

int cmd_run(const SimSettings& s, const RunSettings& r, const CLI::App& sub, std::ostream& out) {
  nf_sim_config* raw = nullptr;
  check(nf_sim_config_create(&raw));
  ConfigHandle cfg(raw);
  const ParamsHandle params = make_params(r.delta, r.cost);
  check(nf_sim_config_set_n(cfg.get(), r.n));
  check(nf_sim_config_set_density(cfg.get(), r.density.c_str()));
  check(nf_sim_config_set_params(cfg.get(), params.get()));
  check(nf_sim_config_set_max_iterations(cfg.get(), s.max_iters));
  check(nf_sim_config_set_idle_terminate(cfg.get(), s.idle_terminate));
  check(nf_sim_config_set_allow_indifferent_adds(cfg.get(), s.indifferent_adds ? 1 : 0));
  check(nf_sim_config_set_record_trajectory(cfg.get(), 1));
  const fs::path dir = prepare_dir(s.out);

  nf_run* rraw = nullptr;
  check(nf_run_once(cfg.get(), nf_derive_run_seed(s.seed, 0, 0), &rraw));
  RunHandle run(rraw);

  std::string csv = "iteration,clustering,utility\n";
  for (std::size_t k = 0; k < nf_run_trajectory_size(run.get()); ++k) {
    std::uint32_t iteration = 0;
    char* clustering = nullptr;
    char* utility = nullptr;
    check(nf_run_trajectory_point(run.get(), k, &iteration, &clustering, &utility));
    const std::string c = take(clustering);
    const std::string u = take(utility);
    csv += std::to_string(iteration) + ',' + decimal6(c) + ',' + decimal6(u) + '\n';
  }
  write_file(dir / "trajectory.csv", csv);

  auto dump_graph = [&](nf_status (*get)(const nf_run*, nf_graph**), const char* name) {
    nf_graph* graw = nullptr;
    check(get(run.get(), &graw));
    GraphHandle g(graw);
    char* text = nullptr;
    check(nf_graph_format(g.get(), &text));
    write_file(dir / name, take(text));
  };
  dump_graph(nf_run_initial_graph, "initial.edges");
  dump_graph(nf_run_final_graph, "final.edges");

  char* text = nullptr;
  check(nf_run_final_utility(run.get(), &text));
  const std::string utility = take(text);
  check(nf_run_final_clustering(run.get(), &text));
  const std::string clustering = take(text);
  std::ostringstream summary;
  summary << "label=" << nf_label_name(nf_run_label(run.get())) << '\n'
          << "converged=" << nf_run_converged(run.get()) << '\n'
          << "dynamic_equilibrium=" << nf_run_dynamic_equilibrium(run.get()) << '\n'
          << "iterations=" << nf_run_iterations(run.get()) << '\n'
          << "acts=" << nf_run_acts(run.get()) << '\n'
          << "final_utility=" << utility << '\n'
          << "final_clustering=" << clustering << '\n';
  write_file(dir / "summary.txt", summary.str());
  write_manifest(dir, sub);
  out << summary.str();
  return kExitOk;
}

int cmd_atlas(const SimSettings& s, bool dump, const CLI::App& sub, std::ostream& out) {
  const auto ns = parse_sizes(s.n_list);
  const auto deltas = parse_range(s.delta_range, s.step);
  const auto costs = parse_range(s.cost_range, s.step);
  std::vector<ParamsHandle> owned;
  std::vector<const nf_params*> cells;
  for (const auto& d : deltas) {
    for (const auto& c : costs) {
      owned.push_back(make_params(d, c));
      cells.push_back(owned.back().get());
    }
  }
  const fs::path dir = prepare_dir(s.out);
  for (std::uint32_t n : ns) {
    nf_verify_report* raw = nullptr;
    check(nf_verify_cells(n, cells.data(), cells.size(), s.workers, &raw));
    ReportHandle report(raw);
    char* text = nullptr;
    check(nf_verify_format(report.get(), &text));
    write_file(dir / ("atlas_n" + std::to_string(n) + ".csv"), take(text));
    const std::array<std::pair<nf_claim, const char*>, 5> claims = {{
        {NF_CLAIM_STABLE_TOPOLOGIES, "stable-topologies"},
        {NF_CLAIM_EFFICIENT_WINNER, "efficient-winner"},
        {NF_CLAIM_POS_ONE, "pos-one"},
        {NF_CLAIM_POS_LOWER_BOUND, "pos-lower-bound"},
        {NF_CLAIM_CONJECTURE_AUDIT, "conjecture-audit"},
    }};
    for (const auto& [claim, name] : claims) {
      out << "n=" << n << ' ' << name << " checked=" << nf_verify_checked(report.get(), claim)
          << " failed=" << nf_verify_failures(report.get(), claim) << '\n';
    }
    if (!dump) continue;
    const fs::path dump_dir = prepare_dir((dir / ("oracle_n" + std::to_string(n))).string());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      nf_oracle* oraw = nullptr;
      check(nf_oracle_enumerate(n, cells[k], s.workers, &oraw));
      OracleHandle oracle(oraw);
      check(nf_oracle_dump(oracle.get(), &text));
      const std::string name = "d" + compact(deltas[k / costs.size()]) + "_c" + compact(costs[k % costs.size()]) + ".txt";
      write_file(dump_dir / name, take(text));
    }
  }
  write_manifest(dir, sub);
  return kExitOk;
}

int cmd_pos(const SimSettings& s, std::uint32_t n, const std::string& method, const CLI::App& sub,
            std::ostream& out) {
  const nf_pos_method m = method == "oracle" ? NF_POS_ORACLE : NF_POS_CLOSED_FORM;
  const fs::path dir = prepare_dir(s.out);
  nf_pos_grid* raw = nullptr;
  check(nf_pos_grid_compute(n, s.step.c_str(), m, s.workers, &raw));
  PosGridHandle grid(raw);
  std::string csv = "delta,cost,kind,value\n";
  for (std::size_t k = 0; k < nf_pos_grid_size(grid.get()); ++k) {
    char* delta = nullptr;
    char* cost = nullptr;
    nf_pos v{};
    check(nf_pos_grid_cell(grid.get(), k, &delta, &cost, &v));
    const std::string d = take(delta);
    const std::string c = take(cost);
    const std::string value = v.value != nullptr ? compact(v.value) : "";
    const char* kind = nf_pos_kind_name(v.kind);
    nf_pos_clear(&v);
    csv += compact(d) + ',' + compact(c) + ',' + kind + ',' + value + '\n';
  }
  write_file(dir / "pos.csv", csv);
  write_manifest(dir, sub);
  out << "wrote " << nf_pos_grid_size(grid.get()) << " cells to " << (dir / "pos.csv").string() << '\n';
  return kExitOk;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  std::ifstream file(path, std::ios::binary);
  if (!file) io_error("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  nf_graph* raw = nullptr;
  if (nf_graph_parse(buf.str().c_str(), &raw) != NF_OK) io_error(path + ": " + nf_last_error());
  GraphHandle g(raw);
  nf_label primary = NF_LABEL_UNCLASSIFIED;
  std::uint32_t matches = 0;
  check(nf_classify(g.get(), &primary, &matches));
  out << "primary: " << nf_label_name(primary) << "\nmatches:";
  for (int l = 0; l < NF_LABEL_COUNT; ++l) {
    if ((matches >> l) & 1U) out << ' ' << nf_label_name(static_cast<nf_label>(l));
  }
  out << '\n';
  return kExitOk;
}

// Turns the key=value lines of a --config file into leading command-line
// tokens, so flags given explicitly (parsed later) override them.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream file(path);
  if (!file) io_error("cannot read config file " + path);
  std::vector<std::string> tokens;
  for (const CLI::ConfigItem& item : CLI::ConfigTOML().from_config(file)) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty()) usage_error("config sections are not supported: " + item.fullname());
    if (item.name == "config") {
      if (item.inputs.empty() || (item.inputs.size() == 1 && item.inputs.front().empty())) continue;
      usage_error("config files cannot include other config files");
    }
    if (item.inputs.size() == 1 && item.inputs.front() == "false") continue;
    tokens.push_back("--" + item.name);
    if (item.inputs.size() == 1 && item.inputs.front() == "true") continue;
    // list values such as densities=0,0.35 arrive split; the options take them comma-joined
    std::string joined;
    for (const auto& v : item.inputs) joined += (joined.empty() ? "" : ",") + v;
    tokens.push_back(joined);
  }
  return tokens;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> rest;
  std::string config;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) usage_error("--config needs a file");
      config = args[++k];
    } else if (args[k].rfind("--config=", 0) == 0) {
      config = args[k].substr(9);
    } else {
      rest.push_back(args[k]);
    }
  }
  if (config.empty() || rest.size() < 2) return args;
  out.push_back(rest[0]);
  out.push_back(rest[1]);  // subcommand
  for (auto& t : config_tokens(config)) out.push_back(std::move(t));
  out.insert(out.end(), rest.begin() + 2, rest.end());
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Agent-based network formation with localized payoffs"};
  app.name("netform-sim");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  SimSettings s;
  RunSettings r;
  bool dump = false;
  std::uint32_t pos_n = 10;
  std::string pos_method = "closed_form";
  std::string input;

  const std::string config_help = "key=value file; explicit flags override it";
  std::string config_unused;

  auto* sweep = app.add_subcommand("sweep", "Grid sweep of the dynamics; writes sweep.csv");
  add_grid_options(sweep, s);
  sweep->add_option("--densities", s.densities, "Initial densities, comma separated")->capture_default_str();
  sweep->add_option("--reps", s.reps, "Repetitions per cell")->capture_default_str();
  add_dynamics_options(sweep, s);
  add_output_options(sweep, s);

  auto* regions = app.add_subcommand("regions", "Observed against predicted stable regions per structure");
  add_grid_options(regions, s);
  regions->add_option("--densities", s.densities, "Initial densities, comma separated")->capture_default_str();
  regions->add_option("--reps", s.reps, "Repetitions per cell")->capture_default_str();
  add_dynamics_options(regions, s);
  add_output_options(regions, s);

  auto* single = app.add_subcommand("run", "One trajectory; writes trajectory.csv and edge lists");
  single->add_option("--n", r.n, "Node count")->capture_default_str()->check(CLI::Range(2, 64));
  single->add_option("--delta", r.delta, "Link benefit")->capture_default_str();
  single->add_option("--cost", r.cost, "Link cost")->capture_default_str();
  single->add_option("--density", r.density, "Initial density")->capture_default_str();
  add_dynamics_options(single, s);
  add_output_options(single, s);

  auto* atlas = app.add_subcommand("atlas", "Exhaustive enumeration checks of the closed-form predictions");
  SimSettings atlas_s;
  atlas_s.n_list = "5";
  add_grid_options(atlas, atlas_s);
  atlas->add_flag("--dump", dump, "Also write the stable-graph listing of every cell");
  add_output_options(atlas, atlas_s);

  auto* pos = app.add_subcommand("pos", "Price of stability over the interior grid; writes pos.csv");
  pos->add_option("--n", pos_n, "Node count")->capture_default_str()->check(CLI::Range(2, 64));
  pos->add_option("--step", s.step, "Grid step")->capture_default_str();
  pos->add_option("--method", pos_method, "closed_form or oracle")
      ->capture_default_str()
      ->check(CLI::IsMember({"closed_form", "oracle"}));
  add_output_options(pos, s);

  auto* cls = app.add_subcommand("classify", "Classify the graph in an edge-list file");
  cls->add_option("file", input, "Edge-list file")->required();

  for (auto* sub : {sweep, regions, single, atlas, pos}) {
    sub->add_option("--config", config_unused, config_help);
  }

  try {
    std::vector<std::string> args(argv, argv + argc);
    args = expand_config(args);
    std::vector<const char*> ptrs;
    for (const auto& a : args) ptrs.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::ParseError& e) {
      return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    if (sweep->parsed()) return cmd_sweep(s, *sweep, out);
    if (regions->parsed()) return cmd_regions(s, *regions, out);
    if (single->parsed()) return cmd_run(s, r, *single, out);
    if (atlas->parsed()) return cmd_atlas(atlas_s, dump, *atlas, out);
    if (pos->parsed()) return cmd_pos(s, pos_n, pos_method, *pos, out);
    if (cls->parsed()) return cmd_classify(input, out);
    err << "error: no command\n";
    return kExitUsage;
  } catch (const Failure& f) {
    err << "error: " << f.what() << '\n';
    return f.code;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace netform::cli
