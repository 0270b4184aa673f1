#include "doctest.h"
#include "support.hpp"

#include "netform/classifier.hpp"
#include "netform/oracle.hpp"

#include <algorithm>
#include <stdexcept>

using namespace netform;
using nftest::q;

namespace {

Graph worked_example() {
  Graph g(5);
  for (auto [i, j] : std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 4}}) g.add_edge(i, j);
  return g;
}

// Complete tripartite on parts {0,6,7,8}, {1,2,5}, {3,4,9}.
Graph uneven_tripartite() {
  const std::vector<int> part{0, 1, 1, 2, 2, 1, 0, 0, 0, 2};
  Graph g(10);
  for (NodeId i = 0; i < 10; ++i)
    for (NodeId j = i + 1; j < 10; ++j)
      if (part[i] != part[j]) g.add_edge(i, j);
  return g;
}

// Non-adjacency is an equivalence relation with at least `k` classes.
bool is_complete_multipartite(const Graph& g, std::uint32_t k) {
  const std::uint32_t n = g.node_count();
  std::vector<int> cls(n, -1);
  int classes = 0;
  for (NodeId i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (NodeId j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) cls[j] = classes;
    ++classes;
  }
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (g.has_edge(i, j) == (cls[i] == cls[j])) return false;
  return static_cast<std::uint32_t>(classes) >= k;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("mean squared deviation") {
  const std::vector<std::uint32_t> v{4, 3, 3, 2, 2};
  CHECK(msd(v, std::vector<std::uint32_t>(5, 3)) == q("0.6"));
  CHECK(msd(v, std::vector<std::uint32_t>(5, 0)) == q("8.4"));
  CHECK(msd(v, v) == 0);
  CHECK_THROWS_AS(msd(v, std::vector<std::uint32_t>(4, 0)), std::invalid_argument);
}

TEST_CASE("ideal shared order") {
  CHECK(ideal_shared_order(std::vector<std::uint32_t>{3, 2, 1, 1, 1}) == 2);
  CHECK(ideal_shared_order(std::vector<std::uint32_t>{4, 3, 3, 2, 2}) == 3);
  CHECK(ideal_shared_order(std::vector<std::uint32_t>{2, 2, 2}) == 2);
  CHECK(ideal_shared_order(std::vector<std::uint32_t>{1, 0}) == 1);
  CHECK_THROWS_AS(ideal_shared_order(std::vector<std::uint32_t>{}), std::invalid_argument);
}

TEST_CASE("greedy coloring") {
  const Coloring t = greedy_color(turan_graph(10));
  CHECK(t.k == 2);
  REQUIRE(t.classes.size() == 2);
  CHECK(t.classes[0].size() == 5);
  CHECK(t.classes[1].size() == 5);
  CHECK(greedy_color(standard_graph(StandardKind::Complete, 4)).k == 4);
  CHECK(greedy_color(empty_graph(5)).k == 1);

  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const Graph g = random_graph(12, nftest::frac(k % 11, 10), rng);
    const Coloring c = greedy_color(g);
    CHECK(c.classes.size() == c.k);
    std::size_t covered = 0;
    for (const auto& cls : c.classes) {
      covered += cls.size();
      for (NodeId a : cls)
        for (NodeId b : cls)
          if (a != b) CHECK_FALSE(g.has_edge(a, b));
    }
    CHECK(covered == 12);
  }
}

TEST_CASE("worked example with four MSDs") {
  const Classification c = classify(worked_example());
  CHECK(c.tau == q("1.6"));
  REQUIRE(c.near_scores.size() == 4);
  CHECK(c.near_scores[0].label == ClassLabel::NearNull);
  CHECK(c.near_scores[0].msd == q("8.4"));
  CHECK(c.near_scores[1].msd == q("2"));
  CHECK(c.near_scores[2].msd == q("0.6"));
  CHECK(c.near_scores[3].msd == q("2"));
  CHECK(c.primary == ClassLabel::NearShared);
}

TEST_CASE("regular Turan graph ranks as Turan") {
  const Classification c = classify(turan_graph(10));
  CHECK(c.primary == ClassLabel::Turan);
  CHECK(c.matches(ClassLabel::Shared));
  CHECK(c.matches(ClassLabel::Turan));
  CHECK(c.matches(ClassLabel::BipartiteComplete));
}

TEST_CASE("tripartite example ranks as k-partite complete") {
  const Classification c = classify(uneven_tripartite());
  CHECK(c.primary == ClassLabel::KPartiteComplete);
  CHECK(c.colors == 3);
  CHECK_FALSE(c.matches(ClassLabel::EquiKPartiteComplete));
}

TEST_CASE("exact shapes") {
  CHECK(classify(empty_graph(6)).primary == ClassLabel::Null);
  CHECK(classify(standard_graph(StandardKind::Complete, 6)).primary == ClassLabel::Complete);
  CHECK(classify(standard_graph(StandardKind::Star, 6)).primary == ClassLabel::Star);
  CHECK(classify(complete_bipartite(6, 4)).primary == ClassLabel::BipartiteComplete);
  CHECK(classify(complete_multipartite(std::vector<std::uint32_t>{4, 4, 4})).primary ==
        ClassLabel::EquiKPartiteComplete);
  CHECK(classify(standard_graph(StandardKind::Cycle, 8)).primary == ClassLabel::Shared);
  // K2 is complete, a star and Turan at once; Null/Complete rank first.
  CHECK(classify(standard_graph(StandardKind::Complete, 2)).primary == ClassLabel::Complete);
  CHECK_THROWS_AS(classify(empty_graph(1)), std::invalid_argument);
}

TEST_CASE("label names and aliases") {
  CHECK(label_name(ClassLabel::NearShared) == "NEAR-SHARED");
  CHECK(label_name(ClassLabel::Turan) == "TURAN");
  for (ClassLabel l : all_labels()) CHECK(parse_label(label_name(l)) == l);
  CHECK(parse_label("TUR_GRA") == ClassLabel::Turan);
  CHECK(parse_label("biparcomp") == ClassLabel::BipartiteComplete);
  CHECK(parse_label("BI-PARTITE-COMPLETE") == ClassLabel::BipartiteComplete);
  CHECK(parse_label("NRSHARED") == ClassLabel::NearShared);
  CHECK(parse_label("KPARCOMP") == ClassLabel::KPartiteComplete);
  CHECK_FALSE(parse_label("triangle").has_value());
  CHECK(all_labels().size() == kLabelCount);
}

TEST_CASE("classification properties on random and exhaustive graphs") {
  std::vector<Graph> graphs;
  Rng rng(17);
  for (std::uint32_t n = 2; n <= 16; ++n)
    for (int k = 0; k <= 20; ++k) graphs.push_back(random_graph(n, nftest::frac(k, 20), rng));
  for (GraphCode code = 0; code < (GraphCode{1} << pair_count(5)); ++code) graphs.push_back(graph_from_code(5, code));

  for (const Graph& g : graphs) {
    const std::uint32_t n = g.node_count();
    const Classification c = classify(g);
    const auto deg = sorted_degree_vector(g);
    if (c.primary != ClassLabel::Unclassified) CHECK(c.matches(c.primary));
    CHECK((c.primary == ClassLabel::Null) == (g.edge_count() == 0));
    CHECK((c.primary == ClassLabel::Complete) == (g.edge_count() == n * (n - 1) / 2));

    std::vector<std::uint32_t> star(n, 1);
    star[0] = n - 1;
    if (c.primary == ClassLabel::Star) CHECK(deg == star);
    if (c.matches(ClassLabel::Turan)) {
      std::vector<std::uint8_t> side;
      REQUIRE(two_color(g, side));
      const auto a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
      CHECK(g.edge_count() == a * (n - a));
      CHECK((a > n - a ? a - (n - a) : (n - a) - a) <= 1);
    }
    if (c.matches(ClassLabel::KPartiteComplete)) CHECK(is_complete_multipartite(g, 3));
    if (c.matches(ClassLabel::BipartiteComplete)) CHECK(is_complete_multipartite(g, 2));

    const bool near = c.primary == ClassLabel::NearNull || c.primary == ClassLabel::NearStar ||
                      c.primary == ClassLabel::NearShared || c.primary == ClassLabel::NearComplete;
    if (near) {
      const auto it = std::find_if(c.near_scores.begin(), c.near_scores.end(),
                                   [&](const NearScore& s) { return s.label == c.primary; });
      REQUIRE(it != c.near_scores.end());
      CHECK(it->msd < c.tau);
      for (const NearScore& s : c.near_scores) CHECK(it->msd <= s.msd);
    }
  }
}

}
