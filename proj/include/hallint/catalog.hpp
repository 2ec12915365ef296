#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallint/group.hpp"
#include "hallint/hall.hpp"
#include "hallint/products.hpp"

namespace hallint {

// Standard families, constructed from generators rather than shipped as data.
Group symmetric_group(unsigned n);
Group alternating_group(unsigned n);
Group cyclic_group(unsigned n);   // regular action on n points
Group dihedral_group(unsigned n); // degree n, order 2n, n >= 3

struct CatalogEntry {
  std::string name;
  Group group;                    // ambient group
  std::optional<Group> subgroup;  // distinguished subgroup for pair entries
  std::optional<PrimeSet> pi;     // primes for which the subgroup is Hall
  std::string note;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);

// Command-argument resolution: a catalog name or a .grp file path.  Pair
// entries resolve to their distinguished subgroup (the ambient group has its
// own name).
Group resolve_group(const std::string& name_or_path);

// Transitive solvable catalog groups of degree at most 10.
const std::vector<std::string>& solvable_partition_sweep();

// Catalog pair entries whose ambient group is solvable, for k=3 Hall sweeps.
const std::vector<std::string>& hall_pair_sweep();

// Solvable catalog groups for per-prime Sylow sweeps.
const std::vector<std::string>& solvable_group_sweep();

// Frobenius groups as (whole, kernel, complement) triples with abelian
// complement acting fixed-point-freely.
struct FrobeniusInstance {
  std::string name;
  Group whole;
  Group kernel;
  Group complement;
};
const std::vector<FrobeniusInstance>& frobenius_complement_instances();

// Resolve a parsed scenario's names against the catalog and assemble it.
AssemblyResult run_scenario(const AssemblyScenario& sc);

}  // namespace hallint
