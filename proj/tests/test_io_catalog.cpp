#include <cstdio>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "hallint/catalog.hpp"
#include "hallint/grp_io.hpp"
#include "hallint/report.hpp"
#include "hallint/subgroup.hpp"

using namespace hallint;

TEST_CASE("group files round trip") {
  Group g = group_from_cycles(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"});
  std::string text = format_grp(g);
  Group back = parse_grp(text);
  CHECK(back.degree() == 6);
  CHECK(back.same_group_as(g));

  Group t = parse_grp("# nothing but a degree\ndegree 4\n");
  CHECK(t.degree() == 4);
  CHECK(t.is_trivial());

  const char* path = "io_roundtrip_tmp.grp";
  write_grp(path, g);
  Group from_file = read_grp(path);
  CHECK(from_file.same_group_as(g));
  std::remove(path);
}

TEST_CASE("group file parse errors") {
  CHECK_THROWS_AS(parse_grp("gen (1,2)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grp("degree 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grp("degree x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grp("degree 4\ndegree 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grp("degree 4\nfoo (1,2)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grp("degree 4\ngen (1,9)\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grp(""), std::invalid_argument);
  CHECK_THROWS_AS(read_grp("no_such_file_anywhere.grp"), std::runtime_error);
}

TEST_CASE("report format and fingerprints") {
  RunReport rep;
  rep.add("command", "order");
  rep.add("order", std::uint64_t{24});
  rep.add("conclusive", true);
  CHECK(rep.to_string() == "command: order\norder: 24\nconclusive: true\n");

  CHECK(fnv1a_hex("").size() == 16);
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));

  Group g = symmetric_group(4);
  std::string fp = group_fingerprint(g);
  CHECK(fp == group_fingerprint(symmetric_group(4)));
  CHECK(fp != group_fingerprint(symmetric_group(5)));
  CHECK(fp.find("degree=4") != std::string::npos);
  CHECK(fp.find("order=24") != std::string::npos);
}

TEST_CASE("standard families have the right orders") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(2).order() == 2);
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(2).order() == 1);
  CHECK(alternating_group(3).order() == 3);
  CHECK(alternating_group(6).order() == 360);
  CHECK(alternating_group(7).order() == 2520);
  CHECK_FALSE(alternating_group(6).contains(parse_perm("(1,2)", 6)));
  CHECK(alternating_group(6).contains(parse_perm("(1,2,3)", 6)));
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(cyclic_group(12).orbit(1).size() == 12);
  CHECK(dihedral_group(3).order() == 6);
  CHECK(dihedral_group(10).order() == 20);
  CHECK_THROWS_AS(dihedral_group(2), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_group(0), std::invalid_argument);
}

TEST_CASE("catalog entries are coherent") {
  std::set<std::string> names;
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    CHECK(names.insert(e.name).second);  // unique names
    CHECK(e.group.degree() >= 1);
    if (e.subgroup) {
      REQUIRE(e.pi.has_value());
      CHECK(e.subgroup->is_subgroup_of(e.group));
      CHECK(is_hall_subgroup(e.group, *e.subgroup, *e.pi));
    }
  }
  CHECK(names.count("sym8") == 1);
  CHECK(names.count("s8_hall") == 1);
  CHECK(names.count("c5_regular") == 1);
}

TEST_CASE("name resolution prefers the distinguished subgroup") {
  CHECK(resolve_group("sym8").order() == 40320);
  CHECK(resolve_group("s8_hall").order() == 1152);
  CHECK(resolve_group("frob20").order() == 20);
  CHECK_THROWS_AS(resolve_group("nope_not_a_group"), std::invalid_argument);

  const char* path = "resolve_tmp.grp";
  write_grp(path, cyclic_group(7));
  CHECK(resolve_group(path).order() == 7);
  std::remove(path);
}

TEST_CASE("sweep lists resolve and satisfy their advertised properties") {
  for (const std::string& name : solvable_partition_sweep()) {
    CAPTURE(name);
    Group g = resolve_group(name);
    CHECK(g.degree() <= 10);
    CHECK(is_solvable(g));
    CHECK(g.orbit(1).size() == g.degree());  // transitive
  }
  for (const std::string& name : solvable_group_sweep()) {
    CAPTURE(name);
    CHECK(is_solvable(resolve_group(name)));
  }
  for (const std::string& name : hall_pair_sweep()) {
    CAPTURE(name);
    const CatalogEntry* e = catalog_find(name);
    REQUIRE(e != nullptr);
    REQUIRE(e->subgroup.has_value());
    CHECK(is_solvable(e->group));
    CHECK(is_hall_subgroup(e->group, *e->subgroup, *e->pi));
  }
}

TEST_CASE("Frobenius instances decompose as kernel and complement") {
  for (const FrobeniusInstance& fi : frobenius_complement_instances()) {
    CAPTURE(fi.name);
    CHECK(fi.kernel.is_subgroup_of(fi.whole));
    CHECK(fi.complement.is_subgroup_of(fi.whole));
    CHECK(is_normal(fi.whole, fi.kernel));
    CHECK(intersect(fi.kernel, fi.complement).is_trivial());
    CHECK(fi.kernel.order() * fi.complement.order() == fi.whole.order());
    CHECK(derived_length(fi.complement) <= 1);  // abelian
    // Fixed-point-free action: no nontrivial complement element commutes
    // with a nontrivial kernel element.
    for (const Perm& c : fi.complement.elements()) {
      if (c.is_identity()) continue;
      for (const Perm& k : fi.kernel.elements()) {
        if (k.is_identity()) continue;
        CHECK(conjugate(k, c) != k);
      }
    }
  }
}

TEST_CASE("named wreath entries land on the expected orders") {
  CHECK(resolve_group("s3_wr_s2").order() == 72);
  CHECK(resolve_group("c2_wr_c5").order() == 160);
  CHECK(resolve_group("c5_wr_c2").order() == 50);
  CHECK(resolve_group("agl1_8").order() == 56);
  CHECK(resolve_group("agl1_9").order() == 72);
  CHECK(resolve_group("frob21").order() == 21);
  CHECK(resolve_group("frob42").order() == 42);
  CHECK(resolve_group("dih15").order() == 30);
  CHECK(resolve_group("d15_hall35").order() == 15);
  CHECK(resolve_group("f42_hall23").order() == 6);
}
