#pragma once

// Localized utility of a node: direct-link benefit minus cost, plus a
// bridging benefit of delta^2 scaled by the node's degree and by the fraction
// of its neighbor pairs that are not linked to each other:
//
//   u_i = d_i (delta - c) + d_i (1 - sigma_i / C(d_i, 2)) delta^2
//
// with the bridging term taken as 0 for d_i <= 1.

#include "netform/graph.hpp"
#include "netform/rational.hpp"

#include <cstdint>
#include <vector>

namespace netform {

class Params {
 public:
  /// Both values must lie in (0, 1); with allow_unit, in (0, 1].
  Params(Rational delta, Rational cost, bool allow_unit = false);

  /// Builds Params accepting 1 as a value when either argument equals 1.
  static Params grid_point(Rational delta, Rational cost);

  const Rational& delta() const { return delta_; }
  const Rational& cost() const { return cost_; }
  bool allow_unit() const { return allow_unit_; }

 private:
  Rational delta_;
  Rational cost_;
  bool allow_unit_;
};

Rational utility_from_counts(std::uint32_t degree, std::uint64_t sigma, const Params& p);
Rational node_utility(const Graph& g, NodeId i, const Params& p);
Rational total_utility(const Graph& g, const Params& p);

enum class DeviationKind { Add, Delete };

struct DeviationGains {
  Rational gain_i;
  Rational gain_j;
  DeviationKind kind;
};

/// Utility change for both endpoints when the pair (i, j) is toggled:
/// a deletion if the edge exists, an addition otherwise.
DeviationGains deviation_gains(const Graph& g, NodeId i, NodeId j, const Params& p);

/// Utilities for every (degree, sigma) reachable on n nodes, multiplied by a
/// common positive integer scale so that comparisons and sums are exact
/// 128-bit integer operations.
class UtilityTable {
 public:
  using Scaled = __int128;

  UtilityTable(const Params& p, std::uint32_t n);

  std::uint32_t node_count() const { return n_; }
  const Params& params() const { return params_; }
  const mpz_class& scale() const { return scale_; }

  Scaled utility(std::uint32_t degree, std::uint64_t sigma) const {
    return values_[offsets_[degree] + sigma];
  }
  Scaled gain(std::uint32_t d_before, std::uint64_t s_before, std::uint32_t d_after,
              std::uint64_t s_after) const {
    return utility(d_after, s_after) - utility(d_before, s_before);
  }

  Scaled node_utility(const Graph& g, NodeId i) const;
  Scaled total_utility(const Graph& g) const;

  Rational to_rational(Scaled value) const;
  Scaled from_rational(const Rational& value) const;

 private:
  Params params_;
  std::uint32_t n_;
  mpz_class scale_;
  std::vector<std::size_t> offsets_;
  std::vector<Scaled> values_;
};

mpz_class to_mpz(UtilityTable::Scaled value);

}  // namespace netform
