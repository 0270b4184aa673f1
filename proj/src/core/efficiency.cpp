#include "netform/efficiency.hpp"

#include "netform/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace netform {

std::uint64_t triangle_lower_bound(std::uint32_t n, std::uint64_t e) {
  const std::uint64_t nn = n;
  if (e > nn * (nn - (nn > 0 ? 1 : 0)) / 2) throw std::invalid_argument("edge count exceeds C(n, 2)");
  if (4 * e <= nn * nn) return 0;
  const std::uint64_t num = nn * (4 * e - nn * nn);
  return (num + 8) / 9;
}

std::uint64_t turan_edge_count(std::uint32_t n) { return static_cast<std::uint64_t>(n) * n / 4; }

std::string_view shape_name(EfficientShape s) {
  switch (s) {
    case EfficientShape::Null: return "Null";
    case EfficientShape::Turan: return "Turan";
    case EfficientShape::Complete: return "Complete";
    case EfficientShape::Conjectured: return "Conjectured";
    case EfficientShape::Other: return "Other";
  }
  return "?";
}

std::string_view certainty_name(Certainty c) {
  switch (c) {
    case Certainty::Proven: return "proven";
    case Certainty::Conjectured: return "conjectured";
    case Certainty::Enumerated: return "enumerated";
  }
  return "?";
}

Rational closed_form_utility(EfficientShape s, const Params& p, std::uint32_t n) {
  const Rational gap = p.delta() - p.cost();
  switch (s) {
    case EfficientShape::Null: return Rational(0);
    case EfficientShape::Turan:
      return Rational(static_cast<unsigned long>(2 * turan_edge_count(n))) * (gap + p.delta() * p.delta());
    case EfficientShape::Complete:
      return Rational(static_cast<unsigned long>(n) * (n - 1)) * gap;
    default: break;
  }
  throw std::invalid_argument("no closed form for this shape");
}

Graph shape_graph(EfficientShape s, std::uint32_t n) {
  switch (s) {
    case EfficientShape::Null: return empty_graph(n);
    case EfficientShape::Turan: return turan_graph(n);
    case EfficientShape::Complete: return standard_graph(StandardKind::Complete, n);
    default: break;
  }
  throw std::invalid_argument("shape has no canonical graph");
}

EfficiencyRegion efficiency_region(const Params& p) {
  const Rational sq = p.delta() * p.delta();
  if (p.delta() < p.cost()) {
    return sq <= p.cost() - p.delta() ? EfficiencyRegion::Null : EfficiencyRegion::TuranBelowCost;
  }
  if (p.delta() == p.cost()) return EfficiencyRegion::TuranEqualCost;
  const Rational gap = p.delta() - p.cost();
  if (gap > 2 * sq) return EfficiencyRegion::Complete;
  if (sq >= 3 * gap) return EfficiencyRegion::TuranAboveCost;
  return EfficiencyRegion::Conjectured;
}

namespace {

EfficiencyVerdict from_oracle(const Params& p, std::uint32_t n, EfficiencyVerdict v, unsigned workers) {
  const OracleResult r = enumerate(n, p, workers);
  // Several shapes can tie; the one with fewer edges is reported.
  for (EfficientShape s : {EfficientShape::Null, EfficientShape::Turan, EfficientShape::Complete}) {
    const Graph g = shape_graph(s, n);
    if (std::binary_search(r.efficient_graphs.begin(), r.efficient_graphs.end(), code_from_graph(g))) {
      v.label = s;
      v.graph = g;
      v.utility = r.max_utility;
      v.certainty = Certainty::Enumerated;
      return v;
    }
  }
  v.label = EfficientShape::Other;
  v.graph = graph_from_code(n, r.efficient_graphs.front());
  v.utility = r.max_utility;
  v.certainty = Certainty::Enumerated;
  return v;
}

}  // namespace

EfficiencyVerdict efficient_graph(const Params& p, std::uint32_t n, bool resolve_with_oracle, unsigned workers) {
  if (n < 2) throw std::invalid_argument("efficiency needs at least two nodes");
  EfficiencyVerdict v;
  v.region = efficiency_region(p);
  auto proven = [&](EfficientShape s) {
    v.label = s;
    v.graph = shape_graph(s, n);
    v.utility = total_utility(v.graph, p);
    v.certainty = Certainty::Proven;
    return v;
  };
  switch (v.region) {
    case EfficiencyRegion::Null: return proven(EfficientShape::Null);
    case EfficiencyRegion::TuranBelowCost:
    case EfficiencyRegion::TuranEqualCost:
    case EfficiencyRegion::TuranAboveCost: return proven(EfficientShape::Turan);
    case EfficiencyRegion::Complete: return proven(EfficientShape::Complete);
    case EfficiencyRegion::Conjectured: break;
  }

  for (EfficientShape s : {EfficientShape::Turan, EfficientShape::Complete}) {
    const Graph g = shape_graph(s, n);
    v.candidates.push_back({s, g, total_utility(g, p)});
  }
  std::stable_sort(v.candidates.begin(), v.candidates.end(), [](const auto& a, const auto& b) {
    if (a.utility != b.utility) return a.utility > b.utility;
    return a.graph.edge_count() < b.graph.edge_count();
  });
  // Complete wins when (delta - c) > n/(n-2) delta^2; on two nodes both
  // shapes are the single edge.
  const Rational gap = p.delta() - p.cost();
  const bool complete_predicted =
      n == 2 || Rational(static_cast<unsigned long>(n - 2)) * gap > Rational(static_cast<unsigned long>(n)) * p.delta() * p.delta();
  v.predicted = complete_predicted ? EfficientShape::Complete : EfficientShape::Turan;

  if (resolve_with_oracle) return from_oracle(p, n, std::move(v), workers);
  v.label = EfficientShape::Conjectured;
  v.graph = v.candidates.front().graph;
  v.utility = v.candidates.front().utility;
  v.certainty = Certainty::Conjectured;
  return v;
}

}  // namespace netform
