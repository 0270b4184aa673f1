#pragma once

// Taxonomy of final network shapes. Exact structural tests come first; graphs
// matching none of Null/Star/Shared/Complete are compared against the four
// ideal degree vectors by mean squared deviation (MSD) with threshold
// tau = tau_fraction * (n - 1)^2; a greedy coloring then detects k-partite
// structure (k >= 3).

#include "netform/graph.hpp"
#include "netform/rational.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace netform {

// Listing order doubles as the modal-class tie-break order.
enum class ClassLabel {
  Null,
  Star,
  Shared,
  Complete,
  NearNull,
  NearStar,
  NearShared,
  NearComplete,
  BipartiteComplete,
  Turan,
  EquiKPartiteComplete,
  EquiKPartite,
  KPartiteComplete,
  KPartite,
  Unclassified,
};

inline constexpr std::size_t kLabelCount = 15;

/// Serialized name, e.g. "NEAR-SHARED", "TURAN".
std::string_view label_name(ClassLabel label);
/// Accepts serialized names, "BI-PARTITE-COMPLETE", and the short plot
/// aliases TUR_GRA, BIPARCOMP, NRSHARED, KPARCOMP (case-insensitive).
std::optional<ClassLabel> parse_label(std::string_view text);
std::span<const ClassLabel> all_labels();

struct ClassifierConfig {
  Rational tau_fraction{1, 10};
};

/// Mean of squared componentwise differences; sequences must match in length.
Rational msd(std::span<const std::uint32_t> observed, std::span<const std::uint32_t> ideal);

/// Mean degree rounded half up.
std::uint32_t ideal_shared_order(std::span<const std::uint32_t> degrees);

struct Coloring {
  std::uint32_t k = 0;
  /// Color classes in color order; each is an independent set.
  std::vector<std::vector<NodeId>> classes;
};

/// Greedy coloring visiting nodes by descending degree, ties by index.
Coloring greedy_color(const Graph& g);

struct NearScore {
  ClassLabel label;
  Rational msd;
};

struct Classification {
  ClassLabel primary = ClassLabel::Unclassified;
  /// Every passing test, in enum order.
  std::vector<ClassLabel> all_matches;
  /// MSD against the Null, Star, Shared and Complete ideals, in that order.
  std::vector<NearScore> near_scores;
  Rational tau;
  std::uint32_t colors = 0;

  bool matches(ClassLabel label) const;
};

/// n >= 2.
Classification classify(const Graph& g, const ClassifierConfig& cfg = {});

}  // namespace netform
