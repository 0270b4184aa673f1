#pragma once

// Efficient (utility-sum maximizing) graphs. Five parameter regions have a
// proven winner among Null, Turan and Complete; the remaining band with
// delta > c is only conjectured.

#include "netform/graph.hpp"
#include "netform/payoff.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace netform {

/// Lower bound on the triangle count of any graph with n nodes and e edges:
/// max(0, ceil(n (4e - n^2) / 9)). Throws std::invalid_argument if e > C(n, 2).
std::uint64_t triangle_lower_bound(std::uint32_t n, std::uint64_t e);

/// floor(n^2 / 4), the edge count of the Turan graph.
std::uint64_t turan_edge_count(std::uint32_t n);

enum class EfficientShape { Null, Turan, Complete, Conjectured, Other };

std::string_view shape_name(EfficientShape s);

/// u(null) = 0, u(turan) = 2 floor(n^2/4) (delta - c + delta^2),
/// u(complete) = n (n - 1)(delta - c). The Turan form assumes both sides have
/// at least two nodes (n >= 4); total_utility is authoritative below that.
Rational closed_form_utility(EfficientShape s, const Params& p, std::uint32_t n);

/// Null, Turan or Complete on n nodes.
Graph shape_graph(EfficientShape s, std::uint32_t n);

enum class Certainty { Proven, Conjectured, Enumerated };

std::string_view certainty_name(Certainty c);

struct EfficiencyCandidate {
  EfficientShape shape;
  Graph graph{1};
  Rational utility;
};

enum class EfficiencyRegion { Null, TuranBelowCost, TuranEqualCost, TuranAboveCost, Complete, Conjectured };

/// Which row of the efficiency table (delta, c) falls in. The boundary
/// delta^2 == c - delta counts as Null: Null and Turan tie at utility 0.
EfficiencyRegion efficiency_region(const Params& p);

struct EfficiencyVerdict {
  /// Conjectured when unresolved; Other only for an enumerated maximum that
  /// is none of the three named shapes.
  EfficientShape label = EfficientShape::Null;
  Graph graph{1};
  Rational utility;
  Certainty certainty = Certainty::Proven;
  EfficiencyRegion region = EfficiencyRegion::Null;
  /// Conjectured region only: Turan and Complete ranked by exact utility
  /// (ties: fewer edges first).
  std::vector<EfficiencyCandidate> candidates;
  /// Conjectured region only: the shape the conjectures name for this n.
  std::optional<EfficientShape> predicted;
};

/// n >= 2. With resolve_with_oracle, conjectured cells are settled by
/// exhaustive enumeration (n <= 7, LimitError otherwise).
EfficiencyVerdict efficient_graph(const Params& p, std::uint32_t n, bool resolve_with_oracle = false,
                                  unsigned workers = 0);

}  // namespace netform
