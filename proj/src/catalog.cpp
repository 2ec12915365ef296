#include "hallint/catalog.hpp"

#include <stdexcept>

#include "hallint/grp_io.hpp"

namespace hallint {

Group symmetric_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  if (n == 1) return trivial_group(1);
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = i + 2;
  cycle[n - 1] = 1;
  std::vector<Perm> gens{parse_perm("(1,2)", n)};
  if (n > 2) gens.emplace_back(std::move(cycle));
  return Group(n, std::move(gens));
}

Group alternating_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  if (n <= 2) return trivial_group(n);
  if (n == 3) return Group(3, {parse_perm("(1,2,3)", 3)});
  std::vector<Perm> gens{parse_perm("(1,2,3)", n)};
  if (n % 2 == 1) {
    std::vector<unsigned> c(n);  // (1,2,...,n), even for odd n
    for (unsigned i = 0; i < n; ++i) c[i] = i + 2;
    c[n - 1] = 1;
    gens.emplace_back(std::move(c));
  } else {
    std::vector<unsigned> c(n);  // (2,3,...,n), even for even n
    c[0] = 1;
    for (unsigned i = 1; i < n; ++i) c[i] = i + 2;
    c[n - 1] = 2;
    gens.emplace_back(std::move(c));
  }
  return Group(n, std::move(gens));
}

Group cyclic_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  if (n == 1) return trivial_group(1);
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = i + 2;
  cycle[n - 1] = 1;
  return Group(n, {Perm(std::move(cycle))});
}

Group dihedral_group(unsigned n) {
  if (n < 3) throw std::invalid_argument("dihedral degree must be at least 3");
  std::vector<unsigned> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n + 1;
    refl[i] = n - i;
  }
  return Group(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

namespace {

Perm perm_power(const Perm& p, unsigned e) {
  Perm r(p.degree());
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto plain = [&](std::string name, Group g, std::string note) {
    entries.push_back({std::move(name), std::move(g), std::nullopt, std::nullopt, std::move(note)});
  };
  auto pair = [&](std::string name, Group g, Group h, PrimeSet pi, std::string note) {
    entries.push_back({std::move(name), std::move(g), std::move(h), std::move(pi), std::move(note)});
  };

  for (unsigned n = 2; n <= 12; ++n)
    plain("sym" + std::to_string(n), symmetric_group(n), "symmetric group, natural action");
  for (unsigned n = 3; n <= 12; ++n)
    plain("alt" + std::to_string(n), alternating_group(n), "alternating group, natural action");
  for (unsigned n = 1; n <= 12; ++n)
    plain("cyc" + std::to_string(n), cyclic_group(n), "cyclic group, regular action");
  plain("c5_regular", cyclic_group(5), "cyclic group of order 5, regular action");
  for (unsigned n = 3; n <= 12; ++n)
    plain("dih" + std::to_string(n), dihedral_group(n), "dihedral group on polygon vertices");
  plain("dih15", dihedral_group(15), "dihedral group on polygon vertices");

  plain("frob20", Group(5, {parse_perm("(1,2,3,4,5)", 5), parse_perm("(1,2,4,3)", 5)}),
        "Frobenius group of order 20: affine maps of the 5-point line");
  plain("frob21", Group(7, {parse_perm("(1,2,3,4,5,6,7)", 7), parse_perm("(1,2,4)(3,6,5)", 7)}),
        "Frobenius group of order 21: translations and squaring on 7 points");
  plain("frob42", Group(7, {parse_perm("(1,2,3,4,5,6,7)", 7), parse_perm("(1,3,2,6,4,5)", 7)}),
        "Frobenius group of order 42: full affine group of the 7-point line");
  plain("agl1_8",
        Group(8, {parse_perm("(1,2)(3,4)(5,6)(7,8)", 8), parse_perm("(1,3)(2,4)(5,7)(6,8)", 8),
                  parse_perm("(1,5)(2,6)(3,7)(4,8)", 8), parse_perm("(2,3,5,4,7,8,6)", 8)}),
        "affine group of the 8-element field, order 56");
  plain("agl1_9",
        Group(9, {parse_perm("(1,2,3)(4,5,6)(7,8,9)", 9), parse_perm("(1,4,7)(2,5,8)(3,6,9)", 9),
                  parse_perm("(2,5,7,8,3,9,4,6)", 9)}),
        "affine group of the 9-element field, order 72");

  plain("s3_wr_s2", wreath_product(symmetric_group(3), symmetric_group(2)).whole,
        "wreath product on two blocks of three points, order 72");
  plain("c2_wr_c5", wreath_product(cyclic_group(2), cyclic_group(5)).whole,
        "wreath product on five blocks of two points, order 160");
  plain("c5_wr_c2", wreath_product(cyclic_group(5), cyclic_group(2)).whole,
        "wreath product on two blocks of five points, order 50");

  pair("s5_hall", symmetric_group(5),
       Group(5, {parse_perm("(1,2)", 5), parse_perm("(1,2,3,4)", 5)}), PrimeSet({2, 3}),
       "degree-5 symmetric group with the stabilizer of point 5");
  pair("s7_hall", symmetric_group(7),
       Group(7, {parse_perm("(1,2)", 7), parse_perm("(1,2,3)", 7), parse_perm("(4,5)", 7),
                 parse_perm("(4,5,6,7)", 7)}),
       PrimeSet({2, 3}), "degree-7 symmetric group with the block pair {1,2,3} / {4,5,6,7}");
  pair("s8_hall", symmetric_group(8),
       Group(8, {parse_perm("(1,2,3,4)", 8), parse_perm("(1,2)", 8),
                 parse_perm("(1,5)(2,6)(3,7)(4,8)", 8)}),
       PrimeSet({2, 3}), "degree-8 symmetric group with its block-swap subgroup of order 1152");
  pair("a4_in_a5", alternating_group(5),
       Group(5, {parse_perm("(1,2,3)", 5), parse_perm("(1,2)(3,4)", 5)}), PrimeSet({2, 3}),
       "degree-5 alternating group with the stabilizer of point 5");
  pair("s4_sylow2", symmetric_group(4),
       Group(4, {parse_perm("(1,2,3,4)", 4), parse_perm("(1,3)", 4)}), PrimeSet({2}),
       "degree-4 symmetric group with a Sylow 2-subgroup");

  {
    Group f42(7, {parse_perm("(1,2,3,4,5,6,7)", 7), parse_perm("(1,3,2,6,4,5)", 7)});
    pair("f42_hall23", f42, Group(7, {parse_perm("(1,3,2,6,4,5)", 7)}), PrimeSet({2, 3}),
         "order-42 Frobenius group with its point-stabilizer of order 6");
    pair("f42_hall37", f42,
         Group(7, {parse_perm("(1,2,3,4,5,6,7)", 7), parse_perm("(1,2,4)(3,6,5)", 7)}),
         PrimeSet({3, 7}), "order-42 Frobenius group with its subgroup of order 21");
    pair("f42_hall27", f42,
         Group(7, {parse_perm("(1,2,3,4,5,6,7)", 7), parse_perm("(1,6)(2,5)(3,4)", 7)}),
         PrimeSet({2, 7}), "order-42 Frobenius group with its subgroup of order 14");
  }
  {
    Group d15 = dihedral_group(15);
    Perm r = d15.generators()[0];
    Perm s = d15.generators()[1];
    pair("d15_hall23", d15, Group(15, {perm_power(r, 5), s}), PrimeSet({2, 3}),
         "order-30 dihedral group with its triangle subgroup of order 6");
    pair("d15_hall25", d15, Group(15, {perm_power(r, 3), s}), PrimeSet({2, 5}),
         "order-30 dihedral group with its pentagon subgroup of order 10");
    pair("d15_hall35", d15, Group(15, {r}), PrimeSet({3, 5}),
         "order-30 dihedral group with its rotation subgroup of order 15");
  }

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Group resolve_group(const std::string& name_or_path) {
  if (name_or_path.find('/') != std::string::npos ||
      name_or_path.find('\\') != std::string::npos ||
      (name_or_path.size() > 4 && name_or_path.compare(name_or_path.size() - 4, 4, ".grp") == 0))
    return read_grp(name_or_path);
  if (const CatalogEntry* e = catalog_find(name_or_path))
    return e->subgroup ? *e->subgroup : e->group;
  throw std::invalid_argument("unknown group name: " + name_or_path);
}

const std::vector<std::string>& solvable_partition_sweep() {
  static const std::vector<std::string> names = {
      "cyc2",   "cyc3",   "cyc4",   "cyc5",   "cyc6",    "cyc7",    "cyc8",
      "cyc9",   "cyc10",  "dih3",   "dih4",   "dih5",    "dih6",    "dih7",
      "dih8",   "dih9",   "dih10",  "sym2",   "sym3",    "sym4",    "alt3",
      "alt4",   "frob20", "frob21", "frob42", "agl1_8",  "agl1_9",  "s3_wr_s2",
      "c2_wr_c5", "c5_wr_c2"};
  return names;
}

const std::vector<std::string>& hall_pair_sweep() {
  static const std::vector<std::string> names = {"f42_hall23", "f42_hall37", "f42_hall27",
                                                 "d15_hall23", "d15_hall25", "d15_hall35",
                                                 "s4_sylow2"};
  return names;
}

const std::vector<std::string>& solvable_group_sweep() {
  static const std::vector<std::string> names = {
      "cyc6",   "cyc12",  "dih3",   "dih4",   "dih5",     "dih6",     "dih10",
      "dih12",  "dih15",  "sym2",   "sym3",   "sym4",     "alt4",     "frob20",
      "frob21", "frob42", "agl1_8", "agl1_9", "s3_wr_s2", "c2_wr_c5", "c5_wr_c2"};
  return names;
}

const std::vector<FrobeniusInstance>& frobenius_complement_instances() {
  static const std::vector<FrobeniusInstance> instances = [] {
    std::vector<FrobeniusInstance> out;
    auto add = [&](std::string name, unsigned degree, std::vector<std::string> kernel_gens,
                   std::string complement_gen) {
      std::vector<Perm> kg;
      for (const std::string& s : kernel_gens) kg.push_back(parse_perm(s, degree));
      Perm cg = parse_perm(complement_gen, degree);
      std::vector<Perm> wg = kg;
      wg.push_back(cg);
      out.push_back({std::move(name), Group(degree, wg), Group(degree, kg), Group(degree, {cg})});
    };
    add("frob20", 5, {"(1,2,3,4,5)"}, "(1,2,4,3)");
    add("frob21", 7, {"(1,2,3,4,5,6,7)"}, "(1,2,4)(3,6,5)");
    add("frob42", 7, {"(1,2,3,4,5,6,7)"}, "(1,3,2,6,4,5)");
    add("agl1_8", 8, {"(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)"},
        "(2,3,5,4,7,8,6)");
    add("agl1_9", 9, {"(1,2,3)(4,5,6)(7,8,9)", "(1,4,7)(2,5,8)(3,6,9)"}, "(2,5,7,8,3,9,4,6)");
    return out;
  }();
  return instances;
}

AssemblyResult run_scenario(const AssemblyScenario& sc) {
  Group factor = resolve_group(sc.factor);
  Group top = resolve_group(sc.top);
  std::vector<Perm> hall_gens;
  for (const std::string& s : sc.hall_gens) hall_gens.push_back(parse_perm(s, factor.degree()));
  Group hall(factor.degree(), std::move(hall_gens));
  PrimeSet pi = PrimeSet::parse(sc.pi);
  PointPartition partition = PointPartition::parse(sc.partition, top.degree());
  std::vector<std::array<Perm, 4>> quads;
  for (const auto& quad : sc.quads) {
    std::array<Perm, 4> q{Perm(1), Perm(1), Perm(1), Perm(1)};
    for (unsigned i = 0; i < 4; ++i) q[i] = parse_perm(quad[i], factor.degree());
    quads.push_back(std::move(q));
  }
  return assemble_wreath_solution(factor, hall, top, pi, partition, quads);
}

}  // namespace hallint
