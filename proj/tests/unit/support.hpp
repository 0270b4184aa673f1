#pragma once

// Reference models shared by the suites. They work from an adjacency matrix
// and plain loops so that they share no code with the bitmask routines they
// check.

#include "netform/graph.hpp"
#include "netform/payoff.hpp"
#include "netform/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace nftest {

using netform::Graph;
using netform::Params;
using netform::Rational;

inline Rational q(std::string_view text) { return netform::parse_rational(text); }

inline Params P(std::string_view delta, std::string_view cost) {
  return Params::grid_point(q(delta), q(cost));
}

/// 0.05, 0.10, ..., 1 as exact twentieths.
/// a/b in canonical form; GMP's two-argument constructor leaves it reduced-or-not.
inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline std::vector<Rational> table_axis() {
  std::vector<Rational> out;
  for (int k = 1; k <= 20; ++k) out.push_back(frac(k, 20));
  return out;
}

/// Every (delta, cost) pair of the default grid.
inline std::vector<Params> table_grid() {
  std::vector<Params> out;
  for (const Rational& d : table_axis()) {
    for (const Rational& c : table_axis()) out.push_back(Params::grid_point(d, c));
  }
  return out;
}

struct RefGraph {
  std::uint32_t n;
  std::vector<std::vector<bool>> adj;

  explicit RefGraph(const Graph& g) : n(g.node_count()), adj(n, std::vector<bool>(n, false)) {
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i != j) adj[i][j] = g.has_edge(i, j);
      }
    }
  }

  std::uint32_t degree(std::uint32_t i) const {
    std::uint32_t d = 0;
    for (std::uint32_t j = 0; j < n; ++j) d += adj[i][j] ? 1 : 0;
    return d;
  }

  std::uint64_t links_among_neighbors(std::uint32_t i) const {
    std::uint64_t s = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        if (adj[i][a] && adj[i][b] && adj[a][b]) ++s;
      }
    }
    return s;
  }

  std::uint64_t triangles() const {
    std::uint64_t t = 0;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        for (std::uint32_t c = b + 1; c < n; ++c)
          if (adj[a][b] && adj[b][c] && adj[a][c]) ++t;
    return t;
  }

  /// Paths a-m-b counted once per unordered endpoint pair and middle node.
  std::uint64_t connected_triples() const {
    std::uint64_t t = 0;
    for (std::uint32_t m = 0; m < n; ++m)
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
          if (a != m && b != m && adj[m][a] && adj[m][b]) ++t;
    return t;
  }

  Rational utility(std::uint32_t i, const Rational& delta, const Rational& cost) const {
    const std::uint32_t d = degree(i);
    Rational u = Rational(d) * (delta - cost);
    if (d >= 2) {
      const Rational pairs(static_cast<unsigned long>(d) * (d - 1) / 2);
      u += Rational(d) * (1 - Rational(links_among_neighbors(i)) / pairs) * delta * delta;
    }
    u.canonicalize();
    return u;
  }

  Rational total(const Rational& delta, const Rational& cost) const {
    Rational sum = 0;
    for (std::uint32_t i = 0; i < n; ++i) sum += utility(i, delta, cost);
    return sum;
  }
};

inline Rational ref_utility(const Graph& g, std::uint32_t i, const Params& p) {
  return RefGraph(g).utility(i, p.delta(), p.cost());
}

inline Rational ref_total(const Graph& g, const Params& p) { return RefGraph(g).total(p.delta(), p.cost()); }

/// Pairwise stability straight from the definition, recomputing utilities on
/// the modified graph for every pair.
inline bool ref_stable(const Graph& g, const Params& p) {
  const std::uint32_t n = g.node_count();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.has_edge(i, j)) {
        if (ref_utility(g.without_edge(i, j), i, p) > ref_utility(g, i, p)) return false;
      } else {
        const Graph h = g.with_edge(i, j);
        if (ref_utility(h, i, p) > ref_utility(g, i, p) && ref_utility(h, j, p) >= ref_utility(g, j, p))
          return false;
      }
    }
  }
  return true;
}

}  // namespace nftest
