#include "doctest.h"
#include "support.hpp"

#include "netform/oracle.hpp"
#include "netform/stability.hpp"

#include <algorithm>

using namespace netform;
using nftest::P;
using nftest::q;

namespace {

bool contains(const std::vector<GraphCode>& codes, GraphCode c) {
  return std::binary_search(codes.begin(), codes.end(), c);
}

bool same(const OracleResult& a, const OracleResult& b) {
  return a.stable_graphs == b.stable_graphs && a.efficient_graphs == b.efficient_graphs &&
         a.max_utility == b.max_utility && a.max_stable_utility == b.max_stable_utility && a.pos == b.pos &&
         a.visited == b.visited;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("codes follow lexicographic pair order") {
  CHECK(pair_count(1) == 0);
  CHECK(pair_count(7) == 21);
  const Graph g = graph_from_code(4, 0b000001);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  CHECK(graph_from_code(4, 0b100000).edges() == std::vector<Edge>{{2, 3}});
  CHECK(graph_from_code(4, 0b000100).edges() == std::vector<Edge>{{0, 3}});
  CHECK_THROWS_AS(graph_from_code(3, 0b1000), std::invalid_argument);
  for (GraphCode c = 0; c < (GraphCode{1} << pair_count(5)); ++c) CHECK(code_from_graph(graph_from_code(5, c)) == c);
  CHECK(code_from_graph(standard_graph(StandardKind::Complete, 7)) == (GraphCode{1} << 21) - 1);
}

TEST_CASE("enumeration visits every labeled graph") {
  for (std::uint32_t n = 1; n <= 6; ++n) CHECK(enumerate(n, P("0.5", "0.3")).visited == (GraphCode{1} << pair_count(n)));
  CHECK(enumerate(4, P("0.2", "0.9")).visited == 64);
  CHECK_THROWS_AS(enumerate(8, P("0.5", "0.5")), LimitError);
  CHECK_THROWS_AS(enumerate(0, P("0.5", "0.5")), std::invalid_argument);
}

TEST_CASE("three nodes at equal benefit and cost") {
  const OracleResult r = enumerate(3, P("0.5", "0.5"));
  CHECK(contains(r.stable_graphs, 0b000));
  CHECK(contains(r.stable_graphs, 0b111));
  for (GraphCode path : {0b011, 0b101, 0b110}) CHECK(contains(r.stable_graphs, path));
}

TEST_CASE("three nodes with cheap links") {
  const OracleResult r = enumerate(3, P("0.5", "0.1"));
  CHECK(r.max_utility == q("2.4"));
  CHECK(r.efficient_graphs == std::vector<GraphCode>{0b111});
}

TEST_CASE("stable and efficient sets match brute force") {
  for (const char* d : {"0.2", "0.5", "0.8"}) {
    for (const char* c : {"0.2", "0.5", "0.8"}) {
      const Params p = P(d, c);
      for (std::uint32_t n = 2; n <= 5; ++n) {
        const OracleResult r = enumerate(n, p);
        std::vector<GraphCode> stable;
        std::vector<GraphCode> best;
        Rational max_u = -1;
        std::optional<Rational> max_stable;
        for (GraphCode code = 0; code < (GraphCode{1} << pair_count(n)); ++code) {
          const Graph g = graph_from_code(n, code);
          const Rational u = nftest::ref_total(g, p);
          if (nftest::ref_stable(g, p)) {
            stable.push_back(code);
            if (!max_stable || u > *max_stable) max_stable = u;
          }
          if (u > max_u) {
            max_u = u;
            best.clear();
          }
          if (u == max_u) best.push_back(code);
        }
        CHECK(r.stable_graphs == stable);
        CHECK(r.efficient_graphs == best);
        CHECK(r.max_utility == max_u);
        CHECK(r.max_stable_utility == max_stable);
        if (max_stable && max_u != 0) CHECK(r.pos == *max_stable / max_u);
      }
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  const Params p = P("0.55", "0.4");
  const OracleResult base = enumerate(6, p, 1);
  for (unsigned w : {2u, 3u, 5u, 8u, 64u}) CHECK(same(enumerate(6, p, w), base));

  const std::vector<Params> cells{P("0.1", "0.5"), P("0.5", "0.5"), P("0.9", "0.2"), P("1", "1")};
  const auto batched = enumerate_cells(5, cells, 3);
  REQUIRE(batched.size() == cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) CHECK(same(batched[k], enumerate(5, cells[k], 1)));
}

TEST_CASE("dump format") {
  const std::string dump = format_dump(enumerate(3, P("0.5", "0.1")));
  CHECK(dump.rfind("# n=3 delta=1/2 cost=1/10 visited=8\n", 0) == 0);
  CHECK(dump.find("# efficient=0x7\n") != std::string::npos);
  CHECK(dump.find("code=0x7 u=12/5\n") != std::string::npos);
}

TEST_CASE("verification report") {
  const VerifyReport five = verify_predictions(5, q("1/20"));
  CHECK(five.cells == 400);
  CHECK(five.checked(Claim::StableTopologies) > 0);
  CHECK(five.failures(Claim::StableTopologies) == 0);
  CHECK(five.failures(Claim::EfficientWinner) == 0);
  CHECK(five.failures(Claim::PosOne) == 0);
  CHECK(five.failures(Claim::PosLowerBound) == 0);
  CHECK(five.total_failures() == 0);

  const std::vector<Params> equal{P("0.5", "0.5")};
  const VerifyReport six = verify_cells(6, equal);
  CHECK(six.checked(Claim::EfficientWinner) == 1);
  CHECK(six.failures(Claim::EfficientWinner) == 0);

  const std::vector<Params> cheap{P("0.5", "0.1")};
  const VerifyReport three = verify_cells(3, cheap);
  REQUIRE(three.checked(Claim::ConjectureAudit) == 1);
  CHECK(three.failures(Claim::ConjectureAudit) == 1);
  CHECK(three.total_failures() == 0);

  const std::string text = format_report(three);
  CHECK(text.find("# conjecture-audit checked=1 failed=1") != std::string::npos);
  CHECK(text.find("delta,cost,claim,result,detail") != std::string::npos);
}

TEST_CASE("equi-tripartite graphs fall outside the stable set where the band is narrower") {
  const std::vector<Params> cell{P("0.3", "0.25")};
  const VerifyReport r = verify_cells(6, cell);
  CHECK(r.failures(Claim::StableTopologies) == 1);
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const ClaimCheck& c) { return !c.pass; });
  REQUIRE(it != r.checks.end());
  CHECK(it->detail.find("CompleteEquiTripartite(2,2,2) witness: add (0,1)") != std::string::npos);
}

}
