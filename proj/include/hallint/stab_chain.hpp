#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hallint/perm.hpp"

namespace hallint {

// One level of a stabilizer chain: the orbit of the base point under the
// strong generators fixing all earlier base points, with a transversal of
// coset representatives (transversal[j] maps base_point to orbit[j]).
struct ChainLevel {
  unsigned base_point = 0;
  std::vector<Perm> gens;
  std::vector<unsigned> orbit;      // discovery order, orbit[0] == base_point
  std::vector<int> orbit_index;     // indexed by point-1, -1 outside the orbit
  std::vector<Perm> transversal;

  bool in_orbit(unsigned point) const { return orbit_index[point - 1] >= 0; }
  const Perm& rep_to(unsigned point) const {
    return transversal[static_cast<std::size_t>(orbit_index[point - 1])];
  }
};

// Base and strong generating set built with the deterministic Schreier-Sims
// procedure.  With no base hint, base points are chosen as the smallest
// moved point at each level.  A forced base keeps every listed point as a
// level, possibly with a one-point orbit, in the given order.
class StabChain {
public:
  static StabChain build(unsigned degree, const std::vector<Perm>& gens);
  static StabChain build_with_base(unsigned degree, const std::vector<Perm>& gens,
                                   const std::vector<unsigned>& base);

  unsigned degree() const { return degree_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<unsigned> base() const;

  std::uint64_t order() const;
  bool contains(const Perm& g) const;

  // Strip g through the chain from the given level.  Returns the residue;
  // *stop_level receives the level where stripping failed, or levels().size()
  // when the residue fixes every base point.
  Perm sift(const Perm& g, std::size_t from_level = 0,
            std::size_t* stop_level = nullptr) const;

  // Every group element, in a fixed deterministic order.  Throws when the
  // order exceeds cap.
  std::vector<Perm> elements(std::uint64_t cap) const;

  // Uniformly random element: one transversal representative per level.
  Perm random_element(std::mt19937_64& rng) const;

private:
  unsigned degree_ = 0;
  std::vector<ChainLevel> levels_;

  void insert_generator(const Perm& g);
  void update_orbit(std::size_t level);
  void complete();
};

}  // namespace hallint
