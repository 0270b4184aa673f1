#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace netform {

// mt19937_64's output sequence is fixed by the standard; the helpers below
// avoid std::uniform_int_distribution and std::shuffle, whose algorithms are
// implementation-defined, so seeded results match across toolchains.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-run seed: SplitMix64 chained over (master, cell, repetition).
constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t cell_index,
                                        std::uint64_t repetition) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ cell_index);
  h = splitmix64(h ^ (repetition * 0xD1B54A32D192ED03ULL));
  return h;
}

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

/// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t k = items.size(); k > 1; --k) {
    const std::size_t pick = static_cast<std::size_t>(uniform_below(rng, k));
    using std::swap;
    swap(items[k - 1], items[pick]);
  }
}

}  // namespace netform
