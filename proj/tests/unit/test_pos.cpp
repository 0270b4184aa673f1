#include "doctest.h"
#include "support.hpp"

#include "netform/efficiency.hpp"
#include "netform/oracle.hpp"
#include "netform/pos.hpp"
#include "netform/stability.hpp"

#include <stdexcept>

using namespace netform;
using nftest::P;
using nftest::q;

TEST_SUITE("pos") {

TEST_CASE("closed-form examples") {
  const PosVerdict equal = price_of_stability(P("0.5", "0.5"), 10, PosMethod::ClosedForm);
  CHECK(equal.kind == PosKind::Exact);
  CHECK(equal.value == Rational(1));

  const PosVerdict cheap = price_of_stability(P("0.3", "0.05"), 10, PosMethod::ClosedForm);
  CHECK(cheap.kind == PosKind::Exact);
  CHECK(cheap.value == Rational(1));

  const PosVerdict dear = price_of_stability(P("0.1", "0.5"), 10, PosMethod::ClosedForm);
  CHECK(dear.kind == PosKind::Undefined);
  CHECK_FALSE(dear.value.has_value());

  const PosVerdict bounded = price_of_stability(P("0.5", "0.4"), 10, PosMethod::ClosedForm);
  CHECK(bounded.kind == PosKind::LowerBound);
  CHECK(bounded.value == q("0.55"));
  CHECK(bounded.exhaustive);

  CHECK(pos_lower_bound(10) == q("0.55"));
  CHECK(pos_kind_name(PosKind::LowerBound) == "LB");
  CHECK(pos_method_name(PosMethod::Oracle) == "oracle");
  CHECK_THROWS_AS(price_of_stability(P("0.5", "0.5"), 1, PosMethod::ClosedForm), std::invalid_argument);
  CHECK_THROWS_AS(price_of_stability(P("0.5", "0.5"), 8, PosMethod::Oracle), LimitError);
}

TEST_CASE("remaining band reports a non-exhaustive bound") {
  // delta > c, (delta - c) > delta^2 and (delta - c) <= 2 delta^2.
  const Params p = P("0.5", "0.2");
  CHECK_FALSE(pos_is_one_region(p));
  CHECK_FALSE(pos_bounded_region(p));
  const PosVerdict v = price_of_stability(p, 10, PosMethod::ClosedForm);
  CHECK(v.kind == PosKind::LowerBound);
  CHECK_FALSE(v.exhaustive);
  REQUIRE(v.value);
  CHECK(*v.value > 0);
  CHECK(*v.value <= 1);
}

TEST_CASE("regions partition the grid") {
  for (const Params& p : nftest::table_grid()) {
    const PosVerdict v = price_of_stability(p, 10, PosMethod::ClosedForm);
    CHECK_FALSE((pos_is_one_region(p) && pos_bounded_region(p)));
    if (pos_is_one_region(p)) {
      CHECK(v.kind == PosKind::Exact);
      CHECK(v.value == Rational(1));
    } else if (p.delta() < p.cost()) {
      CHECK(v.kind == PosKind::Undefined);
    } else {
      CHECK(v.kind == PosKind::LowerBound);
      CHECK(*v.value > 0);
      CHECK(*v.value <= 1);
    }
  }
}

TEST_CASE("grid shape") {
  const auto grid = pos_grid(10, q("1/20"), PosMethod::ClosedForm);
  REQUIRE(grid.size() == 361);
  CHECK(grid.front().delta == q("0.05"));
  CHECK(grid.front().cost == q("0.05"));
  CHECK(grid[1].cost == q("0.1"));
  CHECK(grid.back().delta == q("0.95"));
  CHECK(grid.back().cost == q("0.95"));

  const auto one = pos_grid(4, q("1/2"), PosMethod::ClosedForm);
  REQUIRE(one.size() == 1);
  CHECK(one[0].verdict.kind == PosKind::Exact);
  CHECK(one[0].verdict.value == Rational(1));

  CHECK_THROWS_AS(pos_grid(10, q("0.3"), PosMethod::ClosedForm), std::invalid_argument);
  CHECK_THROWS_AS(pos_grid(10, q("1"), PosMethod::ClosedForm), std::invalid_argument);
}

TEST_CASE("oracle grid at five nodes") {
  const auto grid = pos_grid(5, q("1/4"), PosMethod::Oracle);
  REQUIRE(grid.size() == 9);
  for (const PosCell& cell : grid) {
    const Params p(cell.delta, cell.cost);
    CHECK(cell.verdict.method == PosMethod::Oracle);
    if (pos_is_one_region(p)) {
      CHECK(cell.verdict.kind == PosKind::Exact);
      CHECK(cell.verdict.value == Rational(1));
    }
  }
}

TEST_CASE("oracle values are sandwiched and meet the closed-form claims on four to six nodes") {
  std::vector<Params> cells;
  for (const Params& p : nftest::table_grid()) cells.push_back(p);
  for (std::uint32_t n = 4; n <= 6; ++n) {
    const auto results = enumerate_cells(n, cells);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const Params& p = cells[k];
      const OracleResult& r = results[k];
      CAPTURE(n);
      CAPTURE(to_string(p.delta()));
      CAPTURE(to_string(p.cost()));
      if (r.max_stable_utility) CHECK(*r.max_stable_utility <= r.max_utility);
      if (r.pos) {
        CHECK(*r.pos > 0);
        CHECK(*r.pos <= 1);
      }
      if (pos_is_one_region(p)) CHECK(r.pos == Rational(1));
      if (pos_bounded_region(p)) {
        REQUIRE(r.pos);
        CHECK(*r.pos >= pos_lower_bound(n));
      }
      if (!predicted_stable_topologies(p).topologies.empty()) CHECK_FALSE(r.stable_graphs.empty());
      if (r.max_utility == 0) CHECK_FALSE(r.pos.has_value());
    }
  }
}

TEST_CASE("oracle method agrees with direct enumeration") {
  const Params p = P("0.6", "0.4");
  const PosVerdict v = price_of_stability(p, 5, PosMethod::Oracle);
  const OracleResult r = enumerate(5, p);
  CHECK(v.kind == PosKind::Exact);
  CHECK(v.value == r.pos);
  CHECK(v.best_stable_utility == r.max_stable_utility);
  CHECK(v.efficient_utility == r.max_utility);
  CHECK(v.method == PosMethod::Oracle);
}

}
