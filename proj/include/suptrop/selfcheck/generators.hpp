#pragma once

// Seeded random instances for the property suites.

#include <cstddef>
#include <random>

#include "suptrop/io.hpp"
#include "suptrop/lie.hpp"
#include "suptrop/matrix.hpp"

namespace suptrop::selfcheck {

using Rng = std::mt19937_64;

inline constexpr int kMinValue = -20;
inline constexpr int kMaxValue = 20;

/// Uniform over the integers in [-20, 20] and ε.
ExtReal random_ext_real(Rng& rng);
/// Independent random slots.
SuperScalar random_scalar(Rng& rng);
/// A non-ε entry: real, ghost, ghost-part-only or general pair, equally likely.
SuperScalar random_entry(Rng& rng);

Permutation random_permutation(Rng& rng, std::size_t n);

/// Each cell non-ε with probability `density`.
SuperMatrix random_matrix(Rng& rng, std::size_t n, double density);
/// Strictly upper with the given density, then relabeled by `order`.
SuperMatrix random_dag_matrix(Rng& rng, std::size_t n, double density, const Permutation& order);
/// Non-ε entries drawn as plain reals a + iε.
SuperMatrix random_real_dag_matrix(Rng& rng, std::size_t n, double density, const Permutation& order);

/// All generators acyclic under one shared hidden labeling.
SuperSystem random_nilpotent_system(Rng& rng, std::size_t n, std::size_t count, double density);
SuperSystem random_system(Rng& rng, std::size_t n, std::size_t count, double density);

/// Bracket/sum/power tree over generator indices [0, generator_count), depth <= max_depth.
BracketWord random_word(Rng& rng, std::size_t generator_count, std::size_t max_depth);

double random_density(Rng& rng, double lo = 0.1, double hi = 0.9);
std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi);

}  // namespace suptrop::selfcheck
