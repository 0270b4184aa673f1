#include "doctest.h"
#include "support.hpp"

#include "netform/efficiency.hpp"
#include "netform/oracle.hpp"

#include <stdexcept>

using namespace netform;
using nftest::P;
using nftest::q;

TEST_SUITE("efficiency") {

TEST_CASE("triangle lower bound") {
  CHECK(triangle_lower_bound(6, 10) == 3);
  CHECK(triangle_lower_bound(6, 9) == 0);
  CHECK(triangle_lower_bound(4, 6) == 4);
  CHECK(triangle_lower_bound(4, 6) == triangle_count(standard_graph(StandardKind::Complete, 4)));
  CHECK(triangle_lower_bound(5, 0) == 0);
  CHECK(triangle_lower_bound(1, 0) == 0);
  CHECK_THROWS_AS(triangle_lower_bound(4, 7), std::invalid_argument);
  // ceil(n (4e - n^2) / 9) by rational arithmetic.
  for (std::uint32_t n = 2; n <= 30; ++n) {
    for (std::uint64_t e = 0; e <= n * (n - 1) / 2; ++e) {
      const long num = static_cast<long>(n) * (4 * static_cast<long>(e) - static_cast<long>(n) * n);
      const mpz_class expect = num <= 0 ? mpz_class(0) : mpz_class((num + 8) / 9);
      CHECK(triangle_lower_bound(n, e) == expect.get_ui());
    }
  }
}

TEST_CASE("Turan edge counts") {
  CHECK(turan_edge_count(5) == 6);
  CHECK(turan_edge_count(10) == 25);
  for (std::uint32_t n = 2; n <= 30; ++n) CHECK(turan_edge_count(n) == turan_graph(n).edge_count());
}

TEST_CASE("closed-form utilities match constructed graphs") {
  for (const Params& p : nftest::table_grid()) {
    for (std::uint32_t n = 4; n <= 12; ++n) {
      for (EfficientShape s : {EfficientShape::Null, EfficientShape::Turan, EfficientShape::Complete})
        CHECK(closed_form_utility(s, p, n) == nftest::ref_total(shape_graph(s, n), p));
    }
  }
  // Below four nodes the Turan graph has a leaf and the closed form no longer applies.
  const Params p = P("0.5", "0.1");
  CHECK(closed_form_utility(EfficientShape::Turan, p, 3) != total_utility(turan_graph(3), p));
  CHECK_THROWS_AS(closed_form_utility(EfficientShape::Other, p, 5), std::invalid_argument);
}

TEST_CASE("verdict examples") {
  const EfficiencyVerdict null = efficient_graph(P("0.1", "0.5"), 10);
  CHECK(null.label == EfficientShape::Null);
  CHECK(null.utility == 0);
  CHECK(null.certainty == Certainty::Proven);

  const EfficiencyVerdict turan = efficient_graph(P("0.5", "0.5"), 10);
  CHECK(turan.label == EfficientShape::Turan);
  CHECK(turan.utility == q("12.5"));
  CHECK(turan.graph == turan_graph(10));
  CHECK(turan.certainty == Certainty::Proven);

  const EfficiencyVerdict complete = efficient_graph(P("0.3", "0.05"), 10);
  CHECK(complete.label == EfficientShape::Complete);
  CHECK(complete.utility == q("22.5"));

  const EfficiencyVerdict small = efficient_graph(P("0.5", "0.1"), 3, true);
  CHECK(small.label == EfficientShape::Complete);
  CHECK(small.utility == q("2.4"));
  CHECK(small.certainty == Certainty::Enumerated);
  REQUIRE(small.predicted);
  CHECK(*small.predicted == EfficientShape::Turan);

  CHECK_THROWS_AS(efficient_graph(P("0.5", "0.1"), 8, true), LimitError);
  CHECK_THROWS_AS(efficient_graph(P("0.5", "0.1"), 1), std::invalid_argument);
}

TEST_CASE("regions and certainty") {
  CHECK(efficiency_region(P("0.1", "0.5")) == EfficiencyRegion::Null);
  CHECK(efficiency_region(P("0.4", "0.56")) == EfficiencyRegion::Null);  // delta^2 == c - delta
  CHECK(efficiency_region(P("0.5", "0.6")) == EfficiencyRegion::TuranBelowCost);
  CHECK(efficiency_region(P("0.5", "0.5")) == EfficiencyRegion::TuranEqualCost);
  CHECK(efficiency_region(P("0.6", "0.5")) == EfficiencyRegion::TuranAboveCost);
  CHECK(efficiency_region(P("0.3", "0.05")) == EfficiencyRegion::Complete);
  CHECK(efficiency_region(P("0.5", "0.1")) == EfficiencyRegion::Conjectured);

  for (const Params& p : nftest::table_grid()) {
    const EfficiencyVerdict v = efficient_graph(p, 10);
    const bool conjectured = v.region == EfficiencyRegion::Conjectured;
    CHECK((v.certainty == Certainty::Conjectured) == conjectured);
    CHECK(v.predicted.has_value() == conjectured);
    CHECK(v.utility == total_utility(v.graph, p));
    if (!conjectured) continue;
    CHECK(v.label == EfficientShape::Conjectured);
    REQUIRE(v.candidates.size() == 2);
    CHECK(v.candidates[0].utility >= v.candidates[1].utility);
    CHECK(v.utility == v.candidates[0].utility);
  }
}

TEST_CASE("conjecture prediction threshold") {
  // (n - 2)(delta - c) > n delta^2 picks Complete.
  const EfficiencyVerdict v = efficient_graph(P("0.5", "0.1"), 10);
  REQUIRE(v.predicted);
  CHECK(*v.predicted == EfficientShape::Complete);
  CHECK(v.candidates[0].shape == EfficientShape::Complete);
  const EfficiencyVerdict w = efficient_graph(P("0.5", "0.3"), 10);
  REQUIRE(w.predicted);
  CHECK(*w.predicted == EfficientShape::Turan);
}

TEST_CASE("no graph beats a proven winner on four to six nodes") {
  std::vector<Params> proven;
  for (const Params& p : nftest::table_grid())
    if (efficiency_region(p) != EfficiencyRegion::Conjectured) proven.push_back(p);
  for (std::uint32_t n = 4; n <= 6; ++n) {
    const auto results = enumerate_cells(n, proven);
    for (std::size_t k = 0; k < proven.size(); ++k) {
      const EfficiencyVerdict v = efficient_graph(proven[k], n);
      CAPTURE(n);
      CAPTURE(to_string(proven[k].delta()));
      CAPTURE(to_string(proven[k].cost()));
      CHECK(v.utility == results[k].max_utility);
    }
  }
}

TEST_CASE("triangle-free graphs stay within the Turan edge count") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (GraphCode code = 0; code < (GraphCode{1} << pair_count(n)); ++code) {
      const Graph g = graph_from_code(n, code);
      const std::uint64_t t = triangle_count(g);
      if (t == 0) CHECK(g.edge_count() <= turan_edge_count(n));
      CHECK(t >= triangle_lower_bound(n, g.edge_count()));
    }
  }
}

}
