#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "hallint/subgroup.hpp"
#include "oracles.hpp"

using namespace hallint;

namespace {
Group s4() { return group_from_cycles(4, {"(1,2)", "(1,2,3,4)"}); }
Group a4() { return group_from_cycles(4, {"(1,2,3)", "(2,3,4)"}); }
Group v4() { return group_from_cycles(4, {"(1,2)(3,4)", "(1,3)(2,4)"}); }
Group d4() { return group_from_cycles(4, {"(1,2,3,4)", "(1,3)"}); }
}  // namespace

TEST_CASE("intersection of two point stabilizers in S4") {
  Group stab4 = group_from_cycles(4, {"(1,2)", "(1,2,3)"});
  Group stab3 = group_from_cycles(4, {"(1,2)", "(1,2,4)"});
  Group i = intersect(stab4, stab3);
  CHECK(i.order() == 2);
  CHECK(i.contains(parse_perm("(1,2)", 4)));
}

TEST_CASE("intersect agrees with the element-set oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    Group a = oracle::random_group(6, 2000, rng);
    Group b = oracle::random_group(6, 2000, rng);
    Group i = intersect(a, b);
    auto brute = oracle::intersect_sets(oracle::elements_of(a), oracle::elements_of(b));
    CHECK(i.order() == brute.size());
    for (const Perm& p : brute) CHECK(i.contains(p));
    CHECK(std::gcd(a.order(), b.order()) % i.order() == 0);
  }
}

TEST_CASE("intersect_many folds left and stops at trivial") {
  Group g1 = group_from_cycles(5, {"(1,2)", "(1,2,3,4)"});   // stab(5)
  Group g2 = g1.conjugated_by(parse_perm("(5,1)", 5));       // stab(1)
  Group g3 = g1.conjugated_by(parse_perm("(5,2)", 5));       // stab(2)
  Group g4 = g1.conjugated_by(parse_perm("(5,3)", 5));       // stab(3)
  CHECK(intersect_many({g1, g2, g3}).order() == 2);
  CHECK(intersect_many({g1, g2, g3, g4}).is_trivial());
  CHECK(intersect_many({g1}).order() == 24);
  CHECK_THROWS_AS(intersect_many({}), std::invalid_argument);
}

TEST_CASE("normal core picks out the largest normal subgroup inside") {
  CHECK(normal_core(s4(), a4()).same_group_as(a4()));
  CHECK(normal_core(s4(), v4()).same_group_as(v4()));
  CHECK(normal_core(s4(), d4()).same_group_as(v4()));
  Group stab4 = group_from_cycles(4, {"(1,2)", "(1,2,3)"});
  CHECK(normal_core(s4(), stab4).is_trivial());
  CHECK(normal_core(s4(), s4()).same_group_as(s4()));
}

TEST_CASE("normal core agrees with the oracle on random instances") {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 10) {
    Group g = oracle::random_group(5, 1000, rng);
    auto g_elems = oracle::elements_of(g);
    // Pick a random subgroup: close a couple of random members.
    std::vector<Perm> sub_gens{g_elems[rng() % g_elems.size()],
                               g_elems[rng() % g_elems.size()]};
    Group h(5, sub_gens);
    auto brute = oracle::normal_core_set(g_elems, oracle::elements_of(h));
    Group c = normal_core(g, h, rng());
    CHECK(c.order() == brute.size());
    for (const Perm& p : brute) CHECK(c.contains(p));
    ++done;
  }
}

TEST_CASE("centralizer and conjugacy class satisfy the counting identity") {
  Group g = s4();
  Perm t = parse_perm("(1,2)", 4);
  Group c = centralizer(g, t);
  CHECK(c.order() == 4);
  CHECK(c.contains(parse_perm("(3,4)", 4)));
  auto cls = conjugacy_class(g, t);
  CHECK(cls.size() == 6);
  CHECK(cls.size() * c.order() == g.order());
  CHECK(std::is_sorted(cls.begin(), cls.end()));
  CHECK_THROWS_AS(conjugacy_class(g, t, 3), std::runtime_error);
  CHECK_THROWS_AS(centralizer(g, Perm(5)), std::invalid_argument);
  CHECK_THROWS_AS(conjugacy_class(g, parse_perm("(1,2)", 5)), std::invalid_argument);
}

TEST_CASE("centralizer and class agree with the oracle") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    Group g = oracle::random_group(6, 2000, rng);
    auto elems = oracle::elements_of(g);
    Perm a = elems[rng() % elems.size()];
    auto brute_c = oracle::centralizer_set(elems, a);
    Group c = centralizer(g, a);
    CHECK(c.order() == brute_c.size());
    auto brute_cls = oracle::class_set(elems, a);
    auto cls = conjugacy_class(g, a);
    CHECK(cls.size() == brute_cls.size());
    CHECK(std::equal(cls.begin(), cls.end(), brute_cls.begin()));
    CHECK(cls.size() * c.order() == g.order());
  }
}

TEST_CASE("normality and self-normalization") {
  CHECK(is_normal(s4(), a4()));
  CHECK(is_normal(s4(), v4()));
  CHECK_FALSE(is_normal(s4(), d4()));
  CHECK(is_normal(s4(), trivial_group(4)));
  CHECK(is_normal(s4(), s4()));

  Group stab4 = group_from_cycles(4, {"(1,2)", "(1,2,3)"});
  CHECK(is_self_normalizing(s4(), stab4));
  CHECK(is_self_normalizing(s4(), d4()));
  CHECK_FALSE(is_self_normalizing(s4(), v4()));
  CHECK_FALSE(is_self_normalizing(s4(), group_from_cycles(4, {"(1,2)"})));
  CHECK(is_self_normalizing(s4(), s4()));
}

TEST_CASE("subgroup preconditions are enforced") {
  Group c2 = group_from_cycles(4, {"(1,2)"});
  CHECK_THROWS_AS(normal_core(a4(), c2), std::invalid_argument);
  CHECK_THROWS_AS(is_normal(a4(), c2), std::invalid_argument);
  CHECK_THROWS_AS(is_self_normalizing(a4(), c2), std::invalid_argument);
  CHECK_THROWS_AS(intersect(s4(), Group(5, {parse_perm("(1,2)", 5)})), std::invalid_argument);
}
