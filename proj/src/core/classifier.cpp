#include "netform/classifier.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netform {

namespace {

constexpr std::array<ClassLabel, kLabelCount> kLabels = {
    ClassLabel::Null,         ClassLabel::Star,
    ClassLabel::Shared,       ClassLabel::Complete,
    ClassLabel::NearNull,     ClassLabel::NearStar,
    ClassLabel::NearShared,   ClassLabel::NearComplete,
    ClassLabel::BipartiteComplete, ClassLabel::Turan,
    ClassLabel::EquiKPartiteComplete, ClassLabel::EquiKPartite,
    ClassLabel::KPartiteComplete, ClassLabel::KPartite,
    ClassLabel::Unclassified,
};

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

std::string_view label_name(ClassLabel label) {
  switch (label) {
    case ClassLabel::Null: return "NULL";
    case ClassLabel::Star: return "STAR";
    case ClassLabel::Shared: return "SHARED";
    case ClassLabel::Complete: return "COMPLETE";
    case ClassLabel::NearNull: return "NEAR-NULL";
    case ClassLabel::NearStar: return "NEAR-STAR";
    case ClassLabel::NearShared: return "NEAR-SHARED";
    case ClassLabel::NearComplete: return "NEAR-COMPLETE";
    // spelled as in the published taxonomy table
    case ClassLabel::BipartiteComplete: return "BI-PARTITITE-COMPLETE";
    case ClassLabel::Turan: return "TURAN";
    case ClassLabel::EquiKPartiteComplete: return "EQUI-K-PARTITE-COMPLETE";
    case ClassLabel::EquiKPartite: return "EQUI-K-PARTITE";
    case ClassLabel::KPartiteComplete: return "K-PARTITE-COMPLETE";
    case ClassLabel::KPartite: return "K-PARTITE";
    case ClassLabel::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

std::optional<ClassLabel> parse_label(std::string_view text) {
  const std::string key = upper(text);
  for (ClassLabel l : kLabels) {
    if (key == label_name(l)) return l;
  }
  if (key == "BI-PARTITE-COMPLETE" || key == "BIPARCOMP") return ClassLabel::BipartiteComplete;
  if (key == "TUR_GRA") return ClassLabel::Turan;
  if (key == "NRSHARED") return ClassLabel::NearShared;
  if (key == "KPARCOMP") return ClassLabel::KPartiteComplete;
  return std::nullopt;
}

std::span<const ClassLabel> all_labels() { return kLabels; }

Rational msd(std::span<const std::uint32_t> observed, std::span<const std::uint32_t> ideal) {
  if (observed.size() != ideal.size()) throw std::invalid_argument("MSD needs sequences of equal length");
  if (observed.empty()) return Rational(0);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    const std::int64_t diff = static_cast<std::int64_t>(observed[k]) - static_cast<std::int64_t>(ideal[k]);
    total += static_cast<std::uint64_t>(diff * diff);
  }
  Rational out(static_cast<unsigned long>(total), static_cast<unsigned long>(observed.size()));
  out.canonicalize();
  return out;
}

std::uint32_t ideal_shared_order(std::span<const std::uint32_t> degrees) {
  if (degrees.empty()) throw std::invalid_argument("degree sequence is empty");
  const std::uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
  Rational mean(static_cast<unsigned long>(sum), static_cast<unsigned long>(degrees.size()));
  mean.canonicalize();
  return static_cast<std::uint32_t>(round_half_up(mean).get_ui());
}

Coloring greedy_color(const Graph& g) {
  const std::uint32_t n = g.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  std::vector<std::uint32_t> color(n, 0);
  std::vector<bool> colored(n, false);
  Coloring out;
  for (NodeId v : order) {
    std::uint64_t used = 0;
    std::uint64_t rest = g.neighbor_mask(v);
    while (rest != 0) {
      const auto w = static_cast<NodeId>(std::countr_zero(rest));
      rest &= rest - 1;
      if (colored[w]) used |= std::uint64_t{1} << color[w];
    }
    const auto c = static_cast<std::uint32_t>(std::countr_one(used));
    color[v] = c;
    colored[v] = true;
    if (c >= out.classes.size()) out.classes.resize(c + 1);
    out.classes[c].push_back(v);
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  out.k = static_cast<std::uint32_t>(out.classes.size());
  return out;
}

bool Classification::matches(ClassLabel label) const {
  return std::find(all_matches.begin(), all_matches.end(), label) != all_matches.end();
}

Classification classify(const Graph& g, const ClassifierConfig& cfg) {
  const std::uint32_t n = g.node_count();
  if (n < 2) throw std::invalid_argument("classification needs at least two nodes");
  const std::size_t e = g.edge_count();
  const auto degrees = sorted_degree_vector(g);

  Classification out;
  out.tau = cfg.tau_fraction * Rational(static_cast<unsigned long>((n - 1) * (n - 1)));
  std::array<bool, kLabelCount> hit{};
  auto mark = [&](ClassLabel l) { hit[static_cast<std::size_t>(l)] = true; };
  auto has = [&](ClassLabel l) { return hit[static_cast<std::size_t>(l)]; };

  if (e == 0) mark(ClassLabel::Null);
  if (degrees.back() == n - 1) mark(ClassLabel::Complete);
  if (degrees.front() == degrees.back()) mark(ClassLabel::Shared);
  std::vector<std::uint32_t> star_ideal(n, 1);
  star_ideal[0] = n - 1;
  if (degrees == star_ideal) mark(ClassLabel::Star);

  std::vector<std::uint8_t> side;
  if (two_color(g, side)) {
    const auto a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
    const std::size_t b = n - a;
    if (a > 0 && b > 0 && e == a * b) {
      mark(ClassLabel::BipartiteComplete);
      if ((a > b ? a - b : b - a) <= 1) mark(ClassLabel::Turan);
    }
  }

  const Coloring coloring = greedy_color(g);
  out.colors = coloring.k;
  if (coloring.k >= 3) {
    mark(ClassLabel::KPartite);
    const std::size_t first = coloring.classes.front().size();
    const bool equal = std::all_of(coloring.classes.begin(), coloring.classes.end(),
                                   [&](const auto& c) { return c.size() == first; });
    std::size_t cross = 0;
    std::size_t seen = 0;
    for (const auto& cls : coloring.classes) {
      cross += seen * cls.size();
      seen += cls.size();
    }
    // classes are independent sets, so e == cross means every cross pair is an edge
    const bool complete = e == cross;
    if (equal) mark(ClassLabel::EquiKPartite);
    if (complete) mark(ClassLabel::KPartiteComplete);
    if (complete && equal) mark(ClassLabel::EquiKPartiteComplete);
  }

  const std::uint32_t shared_order = ideal_shared_order(degrees);
  const std::array<std::pair<ClassLabel, std::vector<std::uint32_t>>, 4> ideals = {{
      {ClassLabel::NearNull, std::vector<std::uint32_t>(n, 0)},
      {ClassLabel::NearStar, star_ideal},
      {ClassLabel::NearShared, std::vector<std::uint32_t>(n, shared_order)},
      {ClassLabel::NearComplete, std::vector<std::uint32_t>(n, n - 1)},
  }};
  std::optional<NearScore> best_near;
  const bool exact_basic = has(ClassLabel::Null) || has(ClassLabel::Star) || has(ClassLabel::Shared) ||
                           has(ClassLabel::Complete);
  for (const auto& [label, ideal] : ideals) {
    NearScore score{label, msd(degrees, ideal)};
    if (!exact_basic && score.msd < out.tau) {
      mark(label);
      if (!best_near || score.msd < best_near->msd) best_near = score;
    }
    out.near_scores.push_back(std::move(score));
  }

  for (ClassLabel l : kLabels) {
    if (has(l)) out.all_matches.push_back(l);
  }

  // General k-partite labels rank below the MSD family: they only describe a
  // graph that is not close to any of the four ideal shapes.
  constexpr std::array<ClassLabel, 8> kExactOrder = {
      ClassLabel::Null,         ClassLabel::Complete,          ClassLabel::Star,
      ClassLabel::Turan,        ClassLabel::BipartiteComplete, ClassLabel::EquiKPartiteComplete,
      ClassLabel::KPartiteComplete, ClassLabel::Shared,
  };
  for (ClassLabel l : kExactOrder) {
    if (has(l)) {
      out.primary = l;
      return out;
    }
  }
  if (best_near) {
    out.primary = best_near->label;
  } else if (has(ClassLabel::EquiKPartite)) {
    out.primary = ClassLabel::EquiKPartite;
  } else if (has(ClassLabel::KPartite)) {
    out.primary = ClassLabel::KPartite;
  }
  return out;
}

}  // namespace netform
