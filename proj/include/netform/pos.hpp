#pragma once

// Price of stability: total utility of the best pairwise stable graph over
// that of an efficient graph.

#include "netform/payoff.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace netform {

enum class PosKind { Exact, LowerBound, Undefined };
enum class PosMethod { ClosedForm, Oracle };

std::string_view pos_kind_name(PosKind k);  // EXACT, LB, UNDEF
std::string_view pos_method_name(PosMethod m);

struct PosVerdict {
  PosKind kind = PosKind::Undefined;
  /// Present unless kind is Undefined.
  std::optional<Rational> value;
  PosMethod method = PosMethod::ClosedForm;
  std::optional<Rational> best_stable_utility;
  /// Absent when the efficient graph is only conjectured.
  std::optional<Rational> efficient_utility;
  /// False when the stable side was searched over the standard topologies
  /// only and the bound might be loose.
  bool exhaustive = true;
};

/// 1/2 + 1/(2n).
Rational pos_lower_bound(std::uint32_t n);

/// Regions where the closed form gives exactly 1.
bool pos_is_one_region(const Params& p);
/// delta > c and (delta - c) <= delta^2 < 3 (delta - c).
bool pos_bounded_region(const Params& p);

/// n >= 2; the oracle method needs n <= 7.
PosVerdict price_of_stability(const Params& p, std::uint32_t n, PosMethod method, unsigned workers = 0);

struct PosCell {
  Rational delta;
  Rational cost;
  PosVerdict verdict;
};

/// Interior cells k step for k = 1 .. 1/step - 1 on both axes, row-major by
/// delta then cost. step must divide 1.
std::vector<PosCell> pos_grid(std::uint32_t n, const Rational& step, PosMethod method, unsigned workers = 0);

}  // namespace netform
