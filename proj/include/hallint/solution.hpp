#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hallint/group.hpp"

namespace hallint {

// A witness that k conjugates of a subgroup H intersect in a prescribed
// target: H ∩ H^{c_1} ∩ … ∩ H^{c_{k-1}} (the first conjugator is implicitly
// the identity).
struct TupleSolution {
  unsigned k = 0;
  std::vector<Perm> conjugators;  // k-1 entries
  Group intersection;
  bool target_met = false;
  // Coset numbers (c_1..c_{k-1} as points of the coset action) when the
  // witness came out of a coset-space search.
  std::optional<std::vector<unsigned>> coset_indices;
};

// Orbit census of a group acting coordinatewise on k-tuples of cosets.
struct OrbitReport {
  std::uint64_t orbit_count = 0;
  std::uint64_t max_orbit_size = 0;
  std::uint64_t min_orbit_size = 0;
  std::uint64_t total_tuples = 0;
  // True when no orbit is regular for the abstract acting group, i.e. every
  // tuple has a nontrivial stabilizer.
  bool all_stabilizers_nontrivial = false;
};

}  // namespace hallint
