#pragma once

// Undirected simple labeled graphs on at most 64 nodes, stored as one
// adjacency bitmask per node. Graph is a small value type; copies are cheap
// and mutation only ever touches an explicitly owned copy.

#include "netform/errors.hpp"
#include "netform/random.hpp"
#include "netform/rational.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netform {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

inline constexpr std::uint32_t kMaxNodes = 64;

class Graph {
 public:
  /// Edgeless graph on n nodes; 1 <= n <= kMaxNodes.
  explicit Graph(std::uint32_t n);

  std::uint32_t node_count() const { return n_; }
  std::size_t edge_count() const;

  bool has_edge(NodeId i, NodeId j) const;
  std::uint64_t neighbor_mask(NodeId i) const { return rows_[i]; }
  std::uint32_t degree(NodeId i) const { return static_cast<std::uint32_t>(std::popcount(rows_[i])); }
  std::uint32_t common_neighbors(NodeId i, NodeId j) const {
    return static_cast<std::uint32_t>(std::popcount(rows_[i] & rows_[j]));
  }

  void add_edge(NodeId i, NodeId j);
  void remove_edge(NodeId i, NodeId j);
  /// Adds the edge if absent, removes it if present.
  void toggle_edge(NodeId i, NodeId j);

  Graph with_edge(NodeId i, NodeId j) const;
  Graph without_edge(NodeId i, NodeId j) const;

  /// Edges as (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check_pair(NodeId i, NodeId j) const;

  std::uint32_t n_;
  std::array<std::uint64_t, kMaxNodes> rows_{};
};

enum class StandardKind { Complete, Star, Cycle, Wheel };

Graph empty_graph(std::uint32_t n);
/// Star hub is node 0; the wheel is hub 0 joined to a cycle on 1..n-1.
Graph standard_graph(StandardKind kind, std::uint32_t n);
/// Consecutive node blocks of the given sizes, joined across blocks.
Graph complete_multipartite(std::span<const std::uint32_t> sizes);
Graph complete_bipartite(std::uint32_t a, std::uint32_t b);
/// Complete bipartite with parts ceil(n/2) and floor(n/2).
Graph turan_graph(std::uint32_t n);
/// Exactly round-half-up(density * C(n,2)) edges chosen uniformly at random.
Graph random_graph(std::uint32_t n, Rational density, Rng& rng);

// Structural queries.
std::uint32_t degree(const Graph& g, NodeId i);
/// Number of edges with both endpoints in the neighborhood of i.
std::uint64_t sigma(const Graph& g, NodeId i);
std::uint64_t triangle_count(const Graph& g);
/// Number of paths of length two, i.e. sum over nodes of C(d_i, 2).
std::uint64_t connected_triples(const Graph& g);
/// 3 * triangles / connected triples; 0 when there are no connected triples.
Rational clustering_coefficient(const Graph& g);
std::vector<std::uint32_t> sorted_degree_vector(const Graph& g);

/// Fixed-size digest of the labeled edge set.
using StateKey = std::array<std::uint64_t, 2>;
StateKey canonical_state_key(const Graph& g);

/// Two-coloring by breadth-first search. Returns false when an odd cycle
/// exists; otherwise side[i] is 0 or 1 for every node.
bool two_color(const Graph& g, std::vector<std::uint8_t>& side);

// Edge-list text: "n <count>" then "i j" lines with i < j, sorted.
std::string format_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

inline std::uint64_t choose2(std::uint64_t d) { return d * (d - (d > 0 ? 1 : 0)) / 2; }

}  // namespace netform
