#include "netform/stability.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace netform {

namespace {

std::vector<std::uint64_t> all_sigmas(const Graph& g) {
  std::vector<std::uint64_t> out(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) out[i] = sigma(g, i);
  return out;
}

std::string sizes_name(std::string_view base, std::span<const std::uint32_t> sizes) {
  std::string out(base);
  out += '(';
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(sizes[k]);
  }
  out += ')';
  return out;
}

}  // namespace

StabilityReport is_pairwise_stable(const Graph& g, const Params& p) {
  return is_pairwise_stable(g, UtilityTable(p, g.node_count()));
}

StabilityReport is_pairwise_stable(const Graph& g, const UtilityTable& table) {
  if (table.node_count() != g.node_count()) throw std::invalid_argument("utility table size mismatch");
  const auto sig = all_sigmas(g);
  const std::uint32_t n = g.node_count();
  for (NodeId i = 0; i < n; ++i) {
    const std::uint32_t di = g.degree(i);
    for (NodeId j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::uint32_t shared = g.common_neighbors(i, j);
      const std::uint32_t dj = g.degree(j);
      if (g.has_edge(i, j)) {
        const auto gi = table.gain(di, sig[i], di - 1, sig[i] - shared);
        if (gi > 0) {
          const auto gj = table.gain(dj, sig[j], dj - 1, sig[j] - shared);
          return {false, Deviation{DeviationKind::Delete, i, j, table.to_rational(gi), table.to_rational(gj)}};
        }
      } else {
        const auto gi = table.gain(di, sig[i], di + 1, sig[i] + shared);
        if (gi <= 0) continue;
        const auto gj = table.gain(dj, sig[j], dj + 1, sig[j] + shared);
        if (gj >= 0) {
          return {false, Deviation{DeviationKind::Add, i, j, table.to_rational(gi), table.to_rational(gj)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool is_pairwise_stable_fast(const Graph& g, const UtilityTable& table,
                             std::span<const std::uint64_t> sig) {
  const std::uint32_t n = g.node_count();
  for (NodeId i = 0; i < n; ++i) {
    const std::uint32_t di = g.degree(i);
    const std::uint64_t row = g.neighbor_mask(i);
    for (NodeId j = i + 1; j < n; ++j) {
      const std::uint32_t shared = g.common_neighbors(i, j);
      const std::uint32_t dj = g.degree(j);
      if ((row >> j) & 1U) {
        if (table.gain(di, sig[i], di - 1, sig[i] - shared) > 0) return false;
        if (table.gain(dj, sig[j], dj - 1, sig[j] - shared) > 0) return false;
      } else {
        const auto gi = table.gain(di, sig[i], di + 1, sig[i] + shared);
        const auto gj = table.gain(dj, sig[j], dj + 1, sig[j] + shared);
        if ((gi > 0 && gj >= 0) || (gj > 0 && gi >= 0)) return false;
      }
    }
  }
  return true;
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::R1a: return "1a";
    case Region::R1b: return "1b";
    case Region::R1c: return "1c";
    case Region::R2: return "2";
    case Region::R3a: return "3a";
    case Region::R3b: return "3b";
    case Region::R3c: return "3c";
    case Region::R3d: return "3d";
  }
  return "?";
}

std::string_view topology_name(StableTopology t) {
  switch (t) {
    case StableTopology::Complete: return "Complete";
    case StableTopology::Null: return "Null";
    case StableTopology::Cycle: return "Cycle";
    case StableTopology::CompleteBipartite: return "CompleteBipartite";
    case StableTopology::CompleteEquiTripartite: return "CompleteEquiTripartite";
    case StableTopology::CompleteEquiKPartite: return "CompleteEquiKPartite";
  }
  return "?";
}

bool RegionPrediction::predicts(StableTopology t) const {
  return std::find(topologies.begin(), topologies.end(), t) != topologies.end();
}

RegionPrediction predicted_stable_topologies(const Params& p) {
  using T = StableTopology;
  const Rational sq = p.delta() * p.delta();
  const Rational two_thirds_sq = Rational(2, 3) * sq;
  RegionPrediction out;
  std::vector<T> topo;
  auto add = [&](Region r, std::initializer_list<T> ts) {
    out.regions.push_back(r);
    topo.insert(topo.end(), ts);
  };

  if (p.delta() > p.cost()) {
    const Rational gap = p.delta() - p.cost();
    if (gap >= sq) add(Region::R1a, {T::Complete});
    if (gap <= sq) add(Region::R1b, {T::Complete, T::CompleteBipartite});
    if (gap < two_thirds_sq) add(Region::R1c, {T::CompleteEquiTripartite, T::Complete, T::CompleteBipartite});
  } else if (p.delta() == p.cost()) {
    add(Region::R2, {T::Complete, T::Null, T::CompleteBipartite, T::CompleteEquiKPartite});
  } else {
    const Rational gap = p.cost() - p.delta();
    if (gap > 2 * sq) add(Region::R3a, {T::Null});
    if (gap <= sq) add(Region::R3b, {T::CompleteBipartite, T::Null});
    if (sq <= gap && gap <= 2 * sq) add(Region::R3c, {T::Cycle, T::Null});
    if (gap < two_thirds_sq) add(Region::R3d, {T::CompleteEquiTripartite, T::Null, T::CompleteBipartite});
  }
  std::sort(topo.begin(), topo.end());
  topo.erase(std::unique(topo.begin(), topo.end()), topo.end());
  out.topologies = std::move(topo);
  return out;
}

std::vector<TopologyInstance> topology_instances(StableTopology t, std::uint32_t n) {
  std::vector<TopologyInstance> out;
  switch (t) {
    case StableTopology::Complete:
      if (n >= 2) out.push_back({"Complete(" + std::to_string(n) + ")", standard_graph(StandardKind::Complete, n)});
      break;
    case StableTopology::Null:
      out.push_back({"Null(" + std::to_string(n) + ")", empty_graph(n)});
      break;
    case StableTopology::Cycle:
      if (n >= 4) out.push_back({"Cycle(" + std::to_string(n) + ")", standard_graph(StandardKind::Cycle, n)});
      break;
    case StableTopology::CompleteBipartite:
      for (std::uint32_t b = 2; b <= n / 2; ++b) {
        const std::array<std::uint32_t, 2> sizes{n - b, b};
        out.push_back({sizes_name("CompleteBipartite", sizes), complete_multipartite(sizes)});
      }
      break;
    case StableTopology::CompleteEquiTripartite:
      if (n % 3 == 0) {
        const std::array<std::uint32_t, 3> sizes{n / 3, n / 3, n / 3};
        out.push_back({sizes_name("CompleteEquiTripartite", sizes), complete_multipartite(sizes)});
      }
      break;
    case StableTopology::CompleteEquiKPartite:
      for (std::uint32_t k = 3; k <= n; ++k) {
        if (n % k != 0) continue;
        const std::vector<std::uint32_t> sizes(k, n / k);
        out.push_back({sizes_name("CompleteEquiKPartite", sizes), complete_multipartite(sizes)});
      }
      break;
  }
  return out;
}


Action best_response(const Graph& g, NodeId i, const Params& p, Rng& rng, bool allow_indifferent_adds) {
  return best_response(g, i, UtilityTable(p, g.node_count()), rng, allow_indifferent_adds);
}

Action best_response(const Graph& g, NodeId i, const UtilityTable& table, Rng& rng,
                     bool allow_indifferent_adds) {
  const std::uint32_t n = g.node_count();
  if (i >= n) throw std::out_of_range("node " + std::to_string(i) + " out of range");
  if (table.node_count() != n) throw std::invalid_argument("utility table size mismatch");

  const std::uint32_t di = g.degree(i);
  const std::uint64_t si = sigma(g, i);
  const std::uint64_t row = g.neighbor_mask(i);

  struct Candidate {
    Action::Kind kind;
    NodeId partner;
    UtilityTable::Scaled gain;
  };
  std::array<Candidate, kMaxNodes> candidates;
  std::size_t count = 0;
  for (NodeId j = 0; j < n; ++j) {
    if (j == i) continue;
    const std::uint32_t shared = g.common_neighbors(i, j);
    if ((row >> j) & 1U) {
      candidates[count++] = {Action::Kind::Delete, j, table.gain(di, si, di - 1, si - shared)};
    } else {
      const auto gi = table.gain(di, si, di + 1, si + shared);
      // consent is only worth checking for additions that could be chosen
      if (gi < 0 || (gi == 0 && !allow_indifferent_adds)) continue;
      const std::uint32_t dj = g.degree(j);
      const std::uint64_t sj = sigma(g, j);
      if (table.gain(dj, sj, dj + 1, sj + shared) >= 0) candidates[count++] = {Action::Kind::Add, j, gi};
    }
  }
  if (count == 0) return {};

  UtilityTable::Scaled best = candidates[0].gain;
  for (std::size_t k = 1; k < count; ++k) best = std::max(best, candidates[k].gain);
  if (best < 0) return {};

  std::array<std::size_t, kMaxNodes> ties;
  std::size_t tie_count = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (candidates[k].gain != best) continue;
    if (best == 0 && candidates[k].kind != Action::Kind::Add) continue;
    ties[tie_count++] = k;
  }
  if (best == 0 && (!allow_indifferent_adds || tie_count == 0)) return {};

  const std::size_t pick = tie_count == 1 ? 0 : static_cast<std::size_t>(uniform_below(rng, tie_count));
  const Candidate& c = candidates[ties[pick]];
  return Action{c.kind, c.partner, c.gain};
}

}  // namespace netform
