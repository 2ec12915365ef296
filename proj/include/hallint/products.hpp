#pragma once

#include <array>
#include <string>
#include <vector>

#include "hallint/group.hpp"
#include "hallint/hall.hpp"
#include "hallint/partition.hpp"
#include "hallint/solution.hpp"

namespace hallint {

// G₁ × … × G_r acting on disjoint point blocks, in the given order.
struct DirectProduct {
  Group whole;
  std::vector<Group> factors;
  std::vector<unsigned> offsets;  // offsets[i] = first point of factor i, minus 1

  // Element of the product acting as p on coordinate i (0-based), trivially
  // elsewhere.
  Perm embed(std::size_t coordinate, const Perm& p) const;
  // Subgroup of the product: s ≤ factor i moved onto its block.
  Group embed_group(std::size_t coordinate, const Group& s) const;
};

DirectProduct direct_product(const std::vector<Group>& factors);

// A ≀ L in its imprimitive action: deg(L) blocks of size deg(A); block i
// covers points (i-1)·deg(A)+1 … i·deg(A); the top group permutes blocks.
struct WreathProduct {
  Group whole;
  Group factor;  // A
  Group top;     // L
  unsigned blocks = 0;
  unsigned block_size = 0;

  Perm embed_base(unsigned block, const Perm& p) const;  // 1-based block
  Perm embed_top(const Perm& s) const;                   // s on deg(L) points
};

WreathProduct wreath_product(const Group& a, const Group& l);

// (H1 × … × H1):L inside A≀L.  Requires H1 a pi-Hall subgroup of A and L a
// solvable pi-group; the result is then a pi-Hall subgroup of the wreath
// product (verified).
Group hall_in_wreath(const WreathProduct& w, const Group& h1, const PrimeSet& pi);

// Combine one verified tuple solution per factor into a solution for the
// direct product: slot j's conjugator is the product of the embedded
// per-factor slot-j conjugators.  subgroups[i] is the subgroup of factor i
// that solutions[i] intersects.
TupleSolution combine_direct_solutions(const DirectProduct& dp, const std::vector<Group>& subgroups,
                                       const std::vector<TupleSolution>& solutions);

// Desk-scale assembly of a five-fold trivial-intersection witness in A≀L:
// all blocks share the same factor data; block i uses the quadruple selected
// by its partition class.  Requires p asymmetric for L and every quadruple a
// five-fold trivial-intersection witness for h1 in a.  The result's
// intersection is recomputed from scratch and must come out trivial.
struct AssemblyResult {
  WreathProduct product;
  Group hall;
  TupleSolution solution;
};

AssemblyResult assemble_wreath_solution(const Group& a, const Group& h1, const Group& l,
                                        const PrimeSet& pi, const PointPartition& p,
                                        const std::vector<std::array<Perm, 4>>& quadruples);

// Text form of an assembly instance: catalog names for the factor and top
// groups, cycle notation for everything else.  Lines are `key = value`, with
// '#' comments; hall_gens and quadruple entries are ';'-separated.
struct AssemblyScenario {
  std::string factor;
  std::vector<std::string> hall_gens;
  std::string top;
  std::string pi;
  std::string partition;
  std::array<std::array<std::string, 4>, 5> quads;
};

AssemblyScenario parse_scenario(const std::string& text);

}  // namespace hallint
