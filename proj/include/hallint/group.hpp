#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hallint/perm.hpp"
#include "hallint/stab_chain.hpp"

namespace hallint {

// A permutation group given by generators, with a lazily built stabilizer
// chain shared between copies of the handle.  Handles are immutable once
// constructed; the chain is built on first use and cached.
class Group {
public:
  Group(unsigned degree, std::vector<Perm> gens);

  unsigned degree() const;
  const std::vector<Perm>& generators() const;
  const StabChain& chain() const;

  std::uint64_t order() const;
  bool contains(const Perm& g) const;
  bool is_trivial() const { return order() == 1; }

  // Orbit of a 1-based point, ascending.
  std::vector<unsigned> orbit(unsigned point) const;
  // All orbits, each ascending, ordered by smallest member.
  std::vector<std::vector<unsigned>> orbits() const;

  std::vector<Perm> elements(std::uint64_t cap = 2'000'000) const;
  Perm random_element(std::mt19937_64& rng) const;

  bool is_subgroup_of(const Group& g) const;
  // Equal as sets of permutations.
  bool same_group_as(const Group& other) const;
  // x^-1 * this * x.
  Group conjugated_by(const Perm& x) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Convenience constructor from cycle notation.
Group group_from_cycles(unsigned degree, const std::vector<std::string>& cycles);

Group trivial_group(unsigned degree);

// Group generated by the union of both generator lists.
Group join(const Group& a, const Group& b);
Group join(const Group& a, const Perm& extra);

}  // namespace hallint
