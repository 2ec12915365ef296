#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hallint/group.hpp"
#include "hallint/solution.hpp"

namespace hallint {

struct FindTupleOptions {
  unsigned k = 2;              // number of subgroups intersected (k-1 conjugators)
  std::uint64_t budget = 2000; // random tuples sampled before the exhaustive sweep
  std::uint64_t seed = 0;
  // When set, conjugators are drawn from (and swept over) this subgroup
  // instead of the whole acting group.
  std::optional<Group> conjugator_source;
  // Exhaustive sweep runs only when the tuple space is at most this large.
  std::uint64_t exhaustive_cap = 10'000'000;
};

struct FindTupleResult {
  std::optional<TupleSolution> solution;
  // True when the answer is final: a verified solution, or a completed
  // exhaustive sweep proving none exists.  A miss after budget exhaustion
  // alone is inconclusive.
  bool conclusive = false;
  std::uint64_t attempts = 0;  // tuples whose intersection was evaluated
};

// Search for conjugators c_1..c_{k-1} with H ∩ H^{c_1} ∩ … ∩ H^{c_{k-1}}
// equal to target.  Requires H ≤ G, target normal in G and contained in H,
// k ≥ 2.  Seeded random sampling first, then (within the size cap) an
// exhaustive sweep over canonical coset representatives returning the
// lexicographically least solution.
FindTupleResult find_tuple(const Group& g, const Group& h, const Group& target,
                           const FindTupleOptions& opts);

// Census of G-orbits on k-tuples of cosets of H under the coordinatewise
// action, via union-find over the full tuple space (|G:H|^k ≤ cap).
// all_stabilizers_nontrivial == every orbit size < |G|, which holds exactly
// when no k conjugates of H (one per tuple slot) intersect trivially.
OrbitReport prove_no_tuple(const Group& g, const Group& h, unsigned k,
                           std::uint64_t cap = 100'000'000);

// All (k-1)-tuples of coset indices c with H ∩ H^{rep_{c_1}} ∩ … trivial,
// in lexicographic order.  Requires H self-normalizing in G (so conjugates
// correspond to cosets) and |G:H|^{k-1} ≤ cap.  Two-fold intersections
// H ∩ H^{rep_c} are precomputed once per coset and folded with early exit.
std::vector<std::vector<unsigned>> enumerate_solutions(const Group& g, const Group& h, unsigned k,
                                                       std::uint64_t cap = 10'000'000);

// Decomposition of a solution set (as produced by enumerate_solutions)
// into orbits of H acting coordinatewise on coset indices.
OrbitReport count_solution_orbits(const Group& g, const Group& h,
                                  const std::vector<std::vector<unsigned>>& solutions);

// H ∩ H^{rep_{c_1}} ∩ … for a tuple of coset indices: the setwise stabilizer
// of the coset tuple (1, c_1, …).  Requires H self-normalizing.
Group stabilizer_of_tuple(const Group& g, const Group& h, const std::vector<unsigned>& coset_tuple);

// H ∩ H^{x_1} ∩ … for explicit conjugators.
Group stabilizer_of_tuple(const Group& g, const Group& h, const std::vector<Perm>& conjugators);

}  // namespace hallint
