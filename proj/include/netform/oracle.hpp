#pragma once

// Exhaustive enumeration of every labeled graph on up to seven nodes. A graph
// is encoded as a bitmask over node pairs in lexicographic order: bit 0 is
// (0,1), bit 1 is (0,2), ..., the last bit is (n-2, n-1).

#include "netform/graph.hpp"
#include "netform/payoff.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netform {

inline constexpr std::uint32_t kOracleMaxNodes = 7;

using GraphCode = std::uint64_t;

std::uint32_t pair_count(std::uint32_t n);
Graph graph_from_code(std::uint32_t n, GraphCode code);
/// Needs C(n, 2) <= 64.
GraphCode code_from_graph(const Graph& g);

struct OracleResult {
  std::uint32_t n = 0;
  Params params{Rational(1, 2), Rational(1, 2)};
  /// Ascending codes of every pairwise stable graph.
  std::vector<GraphCode> stable_graphs;
  /// Empty when no graph is stable.
  std::optional<Rational> max_stable_utility;
  /// Ascending codes of every graph attaining max_utility.
  std::vector<GraphCode> efficient_graphs;
  Rational max_utility;
  /// max_stable_utility / max_utility; empty when max_utility is 0 or the
  /// stable set is empty.
  std::optional<Rational> pos;
  std::uint64_t visited = 0;
};

/// workers == 0 picks the hardware concurrency. Results do not depend on the
/// worker count. Throws LimitError for n > kOracleMaxNodes.
OracleResult enumerate(std::uint32_t n, const Params& p, unsigned workers = 0);

/// One pass over the graphs evaluating every parameter cell; same results as
/// calling enumerate per cell.
std::vector<OracleResult> enumerate_cells(std::uint32_t n, std::span<const Params> cells,
                                          unsigned workers = 0);

/// Header lines starting with '#', then "code=<hex> u=<rational>" for each
/// stable graph.
std::string format_dump(const OracleResult& result);

enum class Claim {
  /// Every closed-form stable topology constructible at n is in the stable set.
  StableTopologies,
  /// In proven efficiency regions the closed-form winner attains the maximum.
  EfficientWinner,
  /// Price of stability is exactly 1 where the closed form says so.
  PosOne,
  /// Price of stability is at least 1/2 + 1/(2n) in the bounded region.
  PosLowerBound,
  /// Conjectured efficiency regions: records whether the predicted winner
  /// attains the maximum. Informational only.
  ConjectureAudit,
};

std::string_view claim_name(Claim c);

struct ClaimCheck {
  Rational delta;
  Rational cost;
  Claim claim;
  bool pass = true;
  std::string detail;
};

struct VerifyReport {
  std::uint32_t n = 0;
  Rational step;
  std::size_t cells = 0;
  std::vector<ClaimCheck> checks;

  std::size_t checked(Claim c) const;
  std::size_t failures(Claim c) const;
  /// Failures over the four scored claims (audit entries excluded).
  std::size_t total_failures() const;
};

/// Checks every cell (delta, cost) with both values in {step, 2 step, ..., 1}.
VerifyReport verify_predictions(std::uint32_t n, const Rational& step, unsigned workers = 0);
/// Same checks on an explicit cell list.
VerifyReport verify_cells(std::uint32_t n, std::span<const Params> cells, unsigned workers = 0);

std::string format_report(const VerifyReport& report);

}  // namespace netform
