#include "netform/oracle.hpp"

#include "netform/efficiency.hpp"
#include "netform/errors.hpp"
#include "netform/pos.hpp"
#include "netform/stability.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace netform {

namespace {

using Scaled = UtilityTable::Scaled;

struct PairIndex {
  std::array<std::uint8_t, 64> first{};
  std::array<std::uint8_t, 64> second{};
  std::uint32_t count = 0;
};

PairIndex pair_index(std::uint32_t n) {
  PairIndex idx;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      idx.first[idx.count] = static_cast<std::uint8_t>(i);
      idx.second[idx.count] = static_cast<std::uint8_t>(j);
      ++idx.count;
    }
  }
  return idx;
}

struct Partial {
  std::vector<GraphCode> stable;
  bool any_stable = false;
  Scaled max_stable = 0;
  std::vector<GraphCode> efficient;
  Scaled max_utility = 0;
  bool any = false;
};

void merge_into(Partial& into, Partial&& from) {
  if (from.any_stable) {
    if (!into.any_stable || from.max_stable > into.max_stable) into.max_stable = from.max_stable;
    into.any_stable = true;
  }
  into.stable.insert(into.stable.end(), from.stable.begin(), from.stable.end());
  if (!from.any) return;
  if (!into.any || from.max_utility > into.max_utility) {
    into.max_utility = from.max_utility;
    into.efficient = std::move(from.efficient);
  } else if (from.max_utility == into.max_utility) {
    into.efficient.insert(into.efficient.end(), from.efficient.begin(), from.efficient.end());
  }
  into.any = true;
}

// Walks codes [lo, hi) once, evaluating every cell on each graph.
std::vector<Partial> scan_range(std::uint32_t n, const PairIndex& idx, std::span<const UtilityTable> tables,
                                GraphCode lo, GraphCode hi) {
  std::vector<Partial> out(tables.size());
  std::array<std::uint64_t, kOracleMaxNodes> rows{};
  std::array<std::uint32_t, kOracleMaxNodes> deg{};
  std::array<std::uint64_t, kOracleMaxNodes> sig{};
  std::array<std::uint32_t, 64> shared{};
  for (GraphCode code = lo; code < hi; ++code) {
    rows.fill(0);
    for (std::uint32_t k = 0; k < idx.count; ++k) {
      if ((code >> k) & 1U) {
        rows[idx.first[k]] |= std::uint64_t{1} << idx.second[k];
        rows[idx.second[k]] |= std::uint64_t{1} << idx.first[k];
      }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      deg[i] = static_cast<std::uint32_t>(std::popcount(rows[i]));
      std::uint64_t twice = 0;
      std::uint64_t rest = rows[i];
      while (rest != 0) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        twice += static_cast<std::uint64_t>(std::popcount(rows[i] & rows[j]));
      }
      sig[i] = twice / 2;
    }
    for (std::uint32_t k = 0; k < idx.count; ++k) {
      shared[k] = static_cast<std::uint32_t>(std::popcount(rows[idx.first[k]] & rows[idx.second[k]]));
    }

    for (std::size_t c = 0; c < tables.size(); ++c) {
      const UtilityTable& t = tables[c];
      std::array<Scaled, kOracleMaxNodes> base{};
      Scaled total = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        base[i] = t.utility(deg[i], sig[i]);
        total += base[i];
      }
      bool stable = true;
      for (std::uint32_t k = 0; k < idx.count && stable; ++k) {
        const std::uint32_t i = idx.first[k];
        const std::uint32_t j = idx.second[k];
        const std::uint32_t sh = shared[k];
        if ((code >> k) & 1U) {
          if (t.utility(deg[i] - 1, sig[i] - sh) > base[i]) stable = false;
          else if (t.utility(deg[j] - 1, sig[j] - sh) > base[j]) stable = false;
        } else {
          const Scaled gi = t.utility(deg[i] + 1, sig[i] + sh) - base[i];
          const Scaled gj = t.utility(deg[j] + 1, sig[j] + sh) - base[j];
          if ((gi > 0 && gj >= 0) || (gj > 0 && gi >= 0)) stable = false;
        }
      }
      Partial& acc = out[c];
      if (stable) {
        acc.stable.push_back(code);
        if (!acc.any_stable || total > acc.max_stable) acc.max_stable = total;
        acc.any_stable = true;
      }
      if (!acc.any || total > acc.max_utility) {
        acc.max_utility = total;
        acc.efficient.assign(1, code);
        acc.any = true;
      } else if (total == acc.max_utility) {
        acc.efficient.push_back(code);
      }
    }
  }
  return out;
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string hex_code(GraphCode code) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(code));
  return buf;
}

std::string format_deviation(const Deviation& d) {
  std::ostringstream os;
  os << (d.kind == DeviationKind::Add ? "add" : "delete") << " (" << d.i << "," << d.j
     << ") gain_i=" << to_string(d.gain_i) << " gain_j=" << to_string(d.gain_j);
  return os.str();
}

}  // namespace

std::uint32_t pair_count(std::uint32_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

Graph graph_from_code(std::uint32_t n, GraphCode code) {
  if (pair_count(n) > 64) throw LimitError("graph codes cover at most 64 node pairs");
  if (pair_count(n) < 64 && (code >> pair_count(n)) != 0) throw std::invalid_argument("code has bits beyond the pair count");
  Graph g(n);
  const PairIndex idx = pair_index(n);
  for (std::uint32_t k = 0; k < idx.count; ++k) {
    if ((code >> k) & 1U) g.add_edge(idx.first[k], idx.second[k]);
  }
  return g;
}

GraphCode code_from_graph(const Graph& g) {
  const std::uint32_t n = g.node_count();
  if (pair_count(n) > 64) throw LimitError("graph codes cover at most 64 node pairs");
  GraphCode code = 0;
  std::uint32_t k = 0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j, ++k) {
      if (g.has_edge(i, j)) code |= GraphCode{1} << k;
    }
  }
  return code;
}

std::vector<OracleResult> enumerate_cells(std::uint32_t n, std::span<const Params> cells, unsigned workers) {
  if (n == 0) throw std::invalid_argument("enumeration needs at least one node");
  if (n > kOracleMaxNodes) {
    throw LimitError("exhaustive enumeration is limited to " + std::to_string(kOracleMaxNodes) + " nodes");
  }
  const PairIndex idx = pair_index(n);
  const GraphCode total = GraphCode{1} << idx.count;
  std::vector<UtilityTable> tables;
  tables.reserve(cells.size());
  for (const Params& p : cells) tables.emplace_back(p, n);

  const unsigned w = static_cast<unsigned>(std::min<GraphCode>(resolve_workers(workers), total));
  std::vector<std::vector<Partial>> chunks(w);
  auto bound = [&](unsigned k) { return total * k / w; };
  if (w == 1) {
    chunks[0] = scan_range(n, idx, tables, 0, total);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (unsigned k = 0; k < w; ++k) {
      threads.emplace_back([&, k] { chunks[k] = scan_range(n, idx, tables, bound(k), bound(k + 1)); });
    }
    for (auto& t : threads) t.join();
  }

  std::vector<OracleResult> out;
  out.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    Partial merged;
    for (auto& chunk : chunks) merge_into(merged, std::move(chunk[c]));
    OracleResult r;
    r.n = n;
    r.params = cells[c];
    r.visited = total;
    r.stable_graphs = std::move(merged.stable);
    if (merged.any_stable) r.max_stable_utility = tables[c].to_rational(merged.max_stable);
    r.efficient_graphs = std::move(merged.efficient);
    r.max_utility = tables[c].to_rational(merged.max_utility);
    if (r.max_utility != 0 && r.max_stable_utility) {
      Rational ratio = *r.max_stable_utility / r.max_utility;
      ratio.canonicalize();
      r.pos = ratio;
    }
    out.push_back(std::move(r));
  }
  return out;
}

OracleResult enumerate(std::uint32_t n, const Params& p, unsigned workers) {
  const std::array<Params, 1> cells{p};
  return std::move(enumerate_cells(n, cells, workers).front());
}

std::string format_dump(const OracleResult& r) {
  const UtilityTable table(r.params, r.n);
  std::ostringstream os;
  os << "# n=" << r.n << " delta=" << to_string(r.params.delta()) << " cost=" << to_string(r.params.cost())
     << " visited=" << r.visited << '\n';
  os << "# stable=" << r.stable_graphs.size()
     << " max_stable_utility=" << (r.max_stable_utility ? to_string(*r.max_stable_utility) : "none")
     << " max_utility=" << to_string(r.max_utility) << " pos=" << (r.pos ? to_string(*r.pos) : "undefined")
     << '\n';
  os << "# efficient=";
  for (std::size_t k = 0; k < r.efficient_graphs.size(); ++k) {
    os << (k ? "," : "") << hex_code(r.efficient_graphs[k]);
  }
  os << '\n';
  for (GraphCode code : r.stable_graphs) {
    const Graph g = graph_from_code(r.n, code);
    os << "code=" << hex_code(code) << " u=" << to_string(table.to_rational(table.total_utility(g))) << '\n';
  }
  return os.str();
}

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::StableTopologies: return "stable-topologies";
    case Claim::EfficientWinner: return "efficient-winner";
    case Claim::PosOne: return "pos-one";
    case Claim::PosLowerBound: return "pos-lower-bound";
    case Claim::ConjectureAudit: return "conjecture-audit";
  }
  return "?";
}

std::size_t VerifyReport::checked(Claim c) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const ClaimCheck& k) { return k.claim == c; }));
}

std::size_t VerifyReport::failures(Claim c) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const ClaimCheck& k) { return k.claim == c && !k.pass; }));
}

std::size_t VerifyReport::total_failures() const {
  return failures(Claim::StableTopologies) + failures(Claim::EfficientWinner) + failures(Claim::PosOne) +
         failures(Claim::PosLowerBound);
}

VerifyReport verify_cells(std::uint32_t n, std::span<const Params> cells, unsigned workers) {
  if (n < 2) throw std::invalid_argument("verification needs at least two nodes");
  const std::vector<OracleResult> results = enumerate_cells(n, cells, workers);
  VerifyReport report;
  report.n = n;
  report.cells = cells.size();

  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Params& p = cells[c];
    const OracleResult& r = results[c];
    auto push = [&](Claim claim, bool pass, std::string detail) {
      report.checks.push_back({p.delta(), p.cost(), claim, pass, std::move(detail)});
    };

    for (StableTopology t : predicted_stable_topologies(p).topologies) {
      for (const TopologyInstance& inst : topology_instances(t, n)) {
        const bool found =
            std::binary_search(r.stable_graphs.begin(), r.stable_graphs.end(), code_from_graph(inst.graph));
        std::string detail = inst.name;
        if (!found) {
          const StabilityReport s = is_pairwise_stable(inst.graph, p);
          detail += s.witness ? " witness: " + format_deviation(*s.witness) : " missing from stable set";
        }
        push(Claim::StableTopologies, found, std::move(detail));
      }
    }

    const EfficiencyVerdict v = efficient_graph(p, n);
    if (v.certainty == Certainty::Proven) {
      const Rational u = total_utility(v.graph, p);
      const bool pass = u == r.max_utility;
      std::string detail = std::string(shape_name(v.label)) + " u=" + to_string(u) + " max=" + to_string(r.max_utility);
      if (!pass) detail += " witness code=" + hex_code(r.efficient_graphs.front());
      push(Claim::EfficientWinner, pass, std::move(detail));
    } else {
      const EfficientShape predicted = *v.predicted;
      const Rational u = total_utility(shape_graph(predicted, n), p);
      const bool pass = u == r.max_utility;
      std::string detail = "predicted " + std::string(shape_name(predicted)) + " u=" + to_string(u) +
                           " max=" + to_string(r.max_utility);
      if (!pass) detail += " attained by code=" + hex_code(r.efficient_graphs.front());
      push(Claim::ConjectureAudit, pass, std::move(detail));
    }

    const std::string pos_text = r.pos ? to_string(*r.pos) : std::string("undefined");
    if (pos_is_one_region(p)) push(Claim::PosOne, r.pos && *r.pos == 1, "pos=" + pos_text);
    if (pos_bounded_region(p)) {
      const Rational bound = pos_lower_bound(n);
      push(Claim::PosLowerBound, r.pos && *r.pos >= bound, "pos=" + pos_text + " bound=" + to_string(bound));
    }
  }
  return report;
}

VerifyReport verify_predictions(std::uint32_t n, const Rational& step, unsigned workers) {
  const std::vector<Rational> axis = rational_range(step, Rational(1), step);
  std::vector<Params> cells;
  cells.reserve(axis.size() * axis.size());
  for (const Rational& d : axis) {
    for (const Rational& c : axis) cells.push_back(Params::grid_point(d, c));
  }
  VerifyReport report = verify_cells(n, cells, workers);
  report.step = step;
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  os << "# n=" << report.n << " cells=" << report.cells;
  if (report.step != 0) os << " step=" << to_string(report.step);
  os << '\n';
  for (Claim c : {Claim::StableTopologies, Claim::EfficientWinner, Claim::PosOne, Claim::PosLowerBound,
                  Claim::ConjectureAudit}) {
    os << "# " << claim_name(c) << " checked=" << report.checked(c) << " failed=" << report.failures(c) << '\n';
  }
  os << "delta,cost,claim,result,detail\n";
  for (const ClaimCheck& k : report.checks) {
    os << format_compact(k.delta) << ',' << format_compact(k.cost) << ',' << claim_name(k.claim) << ','
       << (k.pass ? "pass" : "fail") << ",\"" << k.detail << "\"\n";
  }
  return os.str();
}

}  // namespace netform
