#include "netform/pos.hpp"

#include "netform/efficiency.hpp"
#include "netform/oracle.hpp"
#include "netform/stability.hpp"

#include <stdexcept>

namespace netform {

std::string_view pos_kind_name(PosKind k) {
  switch (k) {
    case PosKind::Exact: return "EXACT";
    case PosKind::LowerBound: return "LB";
    case PosKind::Undefined: return "UNDEF";
  }
  return "?";
}

std::string_view pos_method_name(PosMethod m) {
  return m == PosMethod::ClosedForm ? "closed_form" : "oracle";
}

Rational pos_lower_bound(std::uint32_t n) {
  Rational out = Rational(1, 2) + Rational(1, 2 * static_cast<unsigned long>(n));
  out.canonicalize();
  return out;
}

bool pos_is_one_region(const Params& p) {
  const Rational sq = p.delta() * p.delta();
  if (p.delta() == p.cost()) return true;
  if (p.delta() < p.cost()) return sq > p.cost() - p.delta();
  const Rational gap = p.delta() - p.cost();
  return gap > 2 * sq || (sq > gap && sq >= 3 * gap);
}

bool pos_bounded_region(const Params& p) {
  if (p.delta() <= p.cost()) return false;
  const Rational sq = p.delta() * p.delta();
  const Rational gap = p.delta() - p.cost();
  return gap <= sq && sq < 3 * gap;
}

namespace {

// Best total utility over the standard topologies that really are stable.
std::optional<Rational> best_standard_stable(const Params& p, std::uint32_t n) {
  const UtilityTable table(p, n);
  std::optional<Rational> best;
  for (StableTopology t : {StableTopology::Complete, StableTopology::Null, StableTopology::Cycle,
                           StableTopology::CompleteBipartite, StableTopology::CompleteEquiTripartite,
                           StableTopology::CompleteEquiKPartite}) {
    for (const TopologyInstance& inst : topology_instances(t, n)) {
      if (!is_pairwise_stable(inst.graph, table).stable) continue;
      const Rational u = table.to_rational(table.total_utility(inst.graph));
      if (!best || u > *best) best = u;
    }
  }
  return best;
}

PosVerdict from_oracle_result(const OracleResult& r) {
  PosVerdict v;
  v.method = PosMethod::Oracle;
  v.best_stable_utility = r.max_stable_utility;
  v.efficient_utility = r.max_utility;
  if (r.pos) {
    v.kind = PosKind::Exact;
    v.value = r.pos;
  }
  return v;
}

}  // namespace

PosVerdict price_of_stability(const Params& p, std::uint32_t n, PosMethod method, unsigned workers) {
  if (n < 2) throw std::invalid_argument("price of stability needs at least two nodes");
  if (method == PosMethod::Oracle) return from_oracle_result(enumerate(n, p, workers));

  PosVerdict v;
  v.method = PosMethod::ClosedForm;
  if (pos_is_one_region(p)) {
    const EfficiencyVerdict eff = efficient_graph(p, n);
    v.kind = PosKind::Exact;
    v.value = Rational(1);
    v.best_stable_utility = eff.utility;
    v.efficient_utility = eff.utility;
    return v;
  }
  if (p.delta() < p.cost()) {
    v.kind = PosKind::Undefined;
    v.best_stable_utility = Rational(0);
    v.efficient_utility = Rational(0);
    return v;
  }
  v.best_stable_utility = best_standard_stable(p, n);
  v.kind = PosKind::LowerBound;
  if (pos_bounded_region(p)) {
    v.value = pos_lower_bound(n);
    return v;
  }
  // No graph beats (n - 1)(delta - c + delta^2) per node, so the best stable
  // standard topology over that ceiling still bounds the ratio from below.
  const Rational ceiling = (p.delta() - p.cost() + p.delta() * p.delta()) *
                           Rational(static_cast<unsigned long>(n) * (n - 1));
  Rational ratio = v.best_stable_utility.value_or(Rational(0)) / ceiling;
  ratio.canonicalize();
  v.value = ratio;
  v.exhaustive = false;
  return v;
}

std::vector<PosCell> pos_grid(std::uint32_t n, const Rational& step, PosMethod method, unsigned workers) {
  if (step <= 0 || step >= 1) throw std::invalid_argument("grid step must lie in (0, 1)");
  const std::vector<Rational> axis = rational_range(step, 1 - step, step);
  std::vector<PosCell> out;
  out.reserve(axis.size() * axis.size());
  if (method == PosMethod::ClosedForm) {
    for (const Rational& d : axis) {
      for (const Rational& c : axis) out.push_back({d, c, price_of_stability(Params(d, c), n, method)});
    }
    return out;
  }
  std::vector<Params> cells;
  for (const Rational& d : axis) {
    for (const Rational& c : axis) cells.emplace_back(d, c);
  }
  const std::vector<OracleResult> results = enumerate_cells(n, cells, workers);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    out.push_back({cells[k].delta(), cells[k].cost(), from_oracle_result(results[k])});
  }
  return out;
}

}  // namespace netform
