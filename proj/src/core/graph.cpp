#include "netform/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace netform {

Graph::Graph(std::uint32_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("graph must have at least one node");
  if (n > kMaxNodes) {
    throw LimitError("graph size " + std::to_string(n) + " exceeds the " +
                     std::to_string(kMaxNodes) + "-node limit");
  }
}

void Graph::check_pair(NodeId i, NodeId j) const {
  if (i >= n_ || j >= n_) {
    throw std::out_of_range("node pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") out of range for n = " + std::to_string(n_));
  }
  if (i == j) throw std::invalid_argument("self-loop at node " + std::to_string(i));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint32_t i = 0; i < n_; ++i) twice += static_cast<std::size_t>(std::popcount(rows_[i]));
  return twice / 2;
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  check_pair(i, j);
  return (rows_[i] >> j) & 1U;
}

void Graph::add_edge(NodeId i, NodeId j) {
  check_pair(i, j);
  rows_[i] |= std::uint64_t{1} << j;
  rows_[j] |= std::uint64_t{1} << i;
}

void Graph::remove_edge(NodeId i, NodeId j) {
  check_pair(i, j);
  rows_[i] &= ~(std::uint64_t{1} << j);
  rows_[j] &= ~(std::uint64_t{1} << i);
}

void Graph::toggle_edge(NodeId i, NodeId j) {
  check_pair(i, j);
  rows_[i] ^= std::uint64_t{1} << j;
  rows_[j] ^= std::uint64_t{1} << i;
}

Graph Graph::with_edge(NodeId i, NodeId j) const {
  Graph copy = *this;
  copy.add_edge(i, j);
  return copy;
}

Graph Graph::without_edge(NodeId i, NodeId j) const {
  Graph copy = *this;
  copy.remove_edge(i, j);
  return copy;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (NodeId i = 0; i < n_; ++i) {
    std::uint64_t upper = (i + 1 < 64) ? rows_[i] >> (i + 1) : 0;
    while (upper != 0) {
      const auto offset = static_cast<NodeId>(std::countr_zero(upper));
      out.emplace_back(i, i + 1 + offset);
      upper &= upper - 1;
    }
  }
  return out;
}

Graph empty_graph(std::uint32_t n) { return Graph(n); }

Graph standard_graph(StandardKind kind, std::uint32_t n) {
  switch (kind) {
    case StandardKind::Complete: {
      if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
      Graph g(n);
      for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) g.add_edge(i, j);
      return g;
    }
    case StandardKind::Star: {
      if (n < 2) throw std::invalid_argument("star graph needs n >= 2");
      Graph g(n);
      for (NodeId j = 1; j < n; ++j) g.add_edge(0, j);
      return g;
    }
    case StandardKind::Cycle: {
      if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
      Graph g(n);
      for (NodeId i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      return g;
    }
    case StandardKind::Wheel: {
      if (n < 4) throw std::invalid_argument("wheel graph needs n >= 4");
      Graph g(n);
      const std::uint32_t rim = n - 1;
      for (NodeId k = 0; k < rim; ++k) {
        g.add_edge(0, 1 + k);
        g.add_edge(1 + k, 1 + (k + 1) % rim);
      }
      return g;
    }
  }
  throw std::invalid_argument("unknown standard graph kind");
}

Graph complete_multipartite(std::span<const std::uint32_t> sizes) {
  if (sizes.empty()) throw std::invalid_argument("partition list is empty");
  std::uint64_t total = 0;
  for (std::uint32_t s : sizes) {
    if (s == 0) throw std::invalid_argument("partition of size zero");
    total += s;
  }
  if (total > kMaxNodes) throw LimitError("partition sizes sum beyond the node limit");
  Graph g(static_cast<std::uint32_t>(total));
  std::vector<std::uint32_t> block(total);
  std::uint32_t next = 0;
  for (std::uint32_t b = 0; b < sizes.size(); ++b)
    for (std::uint32_t k = 0; k < sizes[b]; ++k) block[next++] = b;
  for (NodeId i = 0; i < total; ++i)
    for (NodeId j = i + 1; j < total; ++j)
      if (block[i] != block[j]) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(std::uint32_t a, std::uint32_t b) {
  const std::array<std::uint32_t, 2> sizes{a, b};
  return complete_multipartite(sizes);
}

Graph turan_graph(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("Turan graph needs n >= 2");
  return complete_bipartite((n + 1) / 2, n / 2);
}

Graph random_graph(std::uint32_t n, Rational density, Rng& rng) {
  density.canonicalize();
  if (density < 0 || density > 1) throw std::invalid_argument("density must lie in [0, 1]");
  Graph g(n);
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const auto target = static_cast<std::size_t>(
      round_half_up(density * Rational(static_cast<unsigned long>(pairs.size()))).get_ui());
  // partial Fisher-Yates: the first `target` slots become a uniform sample
  for (std::size_t k = 0; k < target; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(uniform_below(rng, pairs.size() - k));
    std::swap(pairs[k], pairs[pick]);
    g.add_edge(pairs[k].first, pairs[k].second);
  }
  return g;
}

std::uint32_t degree(const Graph& g, NodeId i) {
  if (i >= g.node_count()) throw std::out_of_range("node " + std::to_string(i) + " out of range");
  return g.degree(i);
}

std::uint64_t sigma(const Graph& g, NodeId i) {
  if (i >= g.node_count()) throw std::out_of_range("node " + std::to_string(i) + " out of range");
  const std::uint64_t nbrs = g.neighbor_mask(i);
  std::uint64_t twice = 0;
  std::uint64_t rest = nbrs;
  while (rest != 0) {
    const auto k = static_cast<NodeId>(std::countr_zero(rest));
    twice += static_cast<std::uint64_t>(std::popcount(g.neighbor_mask(k) & nbrs));
    rest &= rest - 1;
  }
  return twice / 2;
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t total = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) total += sigma(g, i);
  return total / 3;
}

std::uint64_t connected_triples(const Graph& g) {
  std::uint64_t total = 0;
  for (NodeId i = 0; i < g.node_count(); ++i) total += choose2(g.degree(i));
  return total;
}

Rational clustering_coefficient(const Graph& g) {
  const std::uint64_t triples = connected_triples(g);
  if (triples == 0) return Rational(0);
  Rational c(static_cast<unsigned long>(3 * triangle_count(g)), static_cast<unsigned long>(triples));
  c.canonicalize();
  return c;
}

std::vector<std::uint32_t> sorted_degree_vector(const Graph& g) {
  std::vector<std::uint32_t> degrees(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) degrees[i] = g.degree(i);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

StateKey canonical_state_key(const Graph& g) {
  // Two independently seeded SplitMix64 chains over (n, rows).
  std::uint64_t a = splitmix64(0x243F6A8885A308D3ULL ^ g.node_count());
  std::uint64_t b = splitmix64(0x13198A2E03707344ULL ^ g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::uint64_t row = g.neighbor_mask(i);
    a = splitmix64(a ^ row);
    b = splitmix64(std::rotl(b, 23) + row + 0xA4093822299F31D0ULL);
  }
  return {a, b};
}

bool two_color(const Graph& g, std::vector<std::uint8_t>& side) {
  constexpr std::uint8_t kUnset = 2;
  side.assign(g.node_count(), kUnset);
  std::deque<NodeId> queue;
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (side[start] != kUnset) continue;
    side[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      std::uint64_t rest = g.neighbor_mask(v);
      while (rest != 0) {
        const auto w = static_cast<NodeId>(std::countr_zero(rest));
        rest &= rest - 1;
        if (side[w] == kUnset) {
          side[w] = static_cast<std::uint8_t>(1 - side[v]);
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.node_count() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

namespace {

bool parse_uint(std::string_view token, std::uint64_t& value) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::optional<Graph> graph;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("edge list line " + std::to_string(line_no) + ": " + why);
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!graph) {
      std::uint64_t n = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_uint(tokens[1], n)) {
        throw fail("expected header 'n <count>'");
      }
      if (n == 0 || n > kMaxNodes) throw fail("node count " + std::to_string(n) + " outside [1, 64]");
      graph.emplace(static_cast<std::uint32_t>(n));
      continue;
    }
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    if (tokens.size() != 2 || !parse_uint(tokens[0], i) || !parse_uint(tokens[1], j)) {
      throw fail("expected 'i j'");
    }
    if (i >= graph->node_count() || j >= graph->node_count()) throw fail("node id out of range");
    if (i == j) throw fail("self-loop");
    const auto a = static_cast<NodeId>(i);
    const auto b = static_cast<NodeId>(j);
    if (graph->has_edge(a, b)) throw fail("duplicate edge");
    graph->add_edge(a, b);
  }
  if (!graph) throw ParseError("edge list is empty");
  return *graph;
}

}  // namespace netform
