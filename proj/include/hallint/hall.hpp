#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hallint/group.hpp"

namespace hallint {

// A set of primes, used to carve pi-parts out of group orders.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<unsigned> primes);

  // Parse "2,3" / "2 3" / "{2,3}" into a prime set.
  static PrimeSet parse(const std::string& text);

  bool contains(unsigned p) const { return primes_.count(p) != 0; }
  bool empty() const { return primes_.empty(); }
  const std::set<unsigned>& primes() const { return primes_; }
  std::string to_string() const;

 private:
  std::set<unsigned> primes_;
};

// Largest divisor of n whose prime factors all lie in pi.
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi);

// The set of primes dividing n.
PrimeSet primes_of(std::uint64_t n);

// True when every prime factor of n lies in pi.
bool is_pi_number(std::uint64_t n, const PrimeSet& pi);

// True when |H| is the full pi-part of |G| and H <= G.
bool is_hall_subgroup(const Group& g, const Group& h, const PrimeSet& pi);

// Largest normal pi-subgroup of g, computed as the normal core of a given
// pi-Hall subgroup h of g.
Group o_pi(const Group& g, const Group& h, const PrimeSet& pi, std::uint64_t seed = 0);

// A Sylow p-subgroup of g, built by seeded random ascent.  Deterministic for
// a fixed seed; throws std::runtime_error if the restart budget is exhausted
// (does not happen for the catalog-scale groups this tool targets).
Group sylow(const Group& g, unsigned p, std::uint64_t seed = 0);

// Smallest normal subgroup of g containing s.
Group normal_closure(const Group& g, const Group& s);

// Derived series g = G^(0) >= G^(1) >= ... down to the first repetition.
// The returned vector starts with g itself.
std::vector<Group> derived_series(const Group& g);

// Number of steps until the derived series reaches the trivial group;
// 0 for the trivial group, 1 for nontrivial abelian groups.
// Throws std::invalid_argument when g is not solvable.
unsigned derived_length(const Group& g);

bool is_solvable(const Group& g);

}  // namespace hallint
