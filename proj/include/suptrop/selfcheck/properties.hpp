#pragma once

// Randomized property suites, shared by the unit tests, the acceptance
// binary and `suptrop selftest`. Every suite is deterministic for a seed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace suptrop::selfcheck {

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// Free-form breakdown of the sampled instances.
  std::string note;
  double seconds = 0.0;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Scalars.
PropertyReport scalar_semiring_laws(std::uint64_t seed, std::size_t triples);
PropertyReport ghost_ideal_laws(std::uint64_t seed, std::size_t cases);

// Matrices.
PropertyReport matrix_semiring_laws(std::uint64_t seed, std::size_t cases);
PropertyReport walk_expansion(std::uint64_t seed, std::size_t cases);
PropertyReport bracket_identities(std::uint64_t seed, std::size_t cases);

// Graphs.
PropertyReport nilpotency_equivalence(std::uint64_t seed, std::size_t per_dimension);
PropertyReport topological_order_validity(std::uint64_t seed, std::size_t cases);
PropertyReport reachability_against_walks(std::uint64_t seed, std::size_t cases);
PropertyReport cycle_mean_against_enumeration(std::uint64_t seed, std::size_t cases);
PropertyReport longest_path_consistency(std::uint64_t seed, std::size_t cases);

// Lie engine.
PropertyReport element_nilpotency(std::uint64_t seed, std::size_t elements);
/// {two-way obstruction/certificate consistency, triangularization round trip},
/// evaluated on the same systems.
std::pair<PropertyReport, PropertyReport> decide_consistency(std::uint64_t seed, std::size_t systems);
PropertyReport oracle_equivalence(std::uint64_t seed, std::size_t systems);
PropertyReport lower_central_series_termination(std::uint64_t seed, std::size_t systems);
PropertyReport conjugation_equivariance(std::uint64_t seed, std::size_t systems);

/// Every suite at its default size.
std::vector<PropertyReport> run_all(std::uint64_t seed);

}  // namespace suptrop::selfcheck
