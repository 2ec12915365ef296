#pragma once

#include <cstdint>
#include <vector>

#include "hallint/group.hpp"

namespace hallint {

// A ∩ B by backtrack search over a common full base, ordered so that points
// moved by both groups come first.
Group intersect(const Group& a, const Group& b);

// Left fold of binary intersections, stopping early at the trivial group.
Group intersect_many(const std::vector<Group>& groups);

// Largest normal subgroup of G contained in H: iterated intersection with
// generator conjugates until the result is invariant.
Group normal_core(const Group& g, const Group& h, std::uint64_t seed = 0);

// Centralizer of an element, via orbit-stabilizer on the conjugation action.
Group centralizer(const Group& g, const Perm& a);

// Conjugacy class of a in G, as an explicit sorted list.  Throws when the
// class grows beyond cap.
std::vector<Perm> conjugacy_class(const Group& g, const Perm& a,
                                  std::uint64_t cap = 1'000'000);

bool is_normal(const Group& g, const Group& n);

// N_G(H) == H, decided by counting cosets fixed by H in the coset action.
bool is_self_normalizing(const Group& g, const Group& h);

}  // namespace hallint
