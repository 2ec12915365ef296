#pragma once

#include <unordered_map>
#include <vector>

#include "hallint/group.hpp"

namespace hallint {

// The action of G by right multiplication on the right cosets of H.  Cosets
// are numbered deterministically: coset H is number 1, the rest follow in
// breadth-first order over G's generators.  Each coset is identified by its
// canonical representative, the element of Hg with the lexicographically
// least image vector.
class CosetAction {
public:
  CosetAction(const Group& g, const Group& h);

  unsigned index() const { return static_cast<unsigned>(reps_.size()); }
  const Group& group() const { return g_; }
  const Group& subgroup() const { return h_; }

  // Image group on index() points; faithful iff the core of H is trivial.
  const Group& image() const { return image_; }
  const std::vector<Perm>& generator_images() const { return gen_images_; }
  bool faithful() const;

  // 1-based number of the coset Hg.
  unsigned coset_of(const Perm& g) const;
  const Perm& representative(unsigned coset) const { return reps_[coset - 1]; }

  // Induced permutation of the cosets, for any g in G.
  Perm image_of(const Perm& g) const;

private:
  Group g_;
  Group h_;
  StabChain hchain_;  // natural full base, for canonical representatives
  std::vector<Perm> reps_;
  std::unordered_map<Perm, unsigned, PermHash> coset_id_;
  std::vector<Perm> gen_images_;
  Group image_;

  Perm canonical_rep(Perm x) const;
};

}  // namespace hallint
