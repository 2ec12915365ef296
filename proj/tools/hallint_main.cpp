#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hallint/catalog.hpp"
#include "hallint/coset.hpp"
#include "hallint/grp_io.hpp"
#include "hallint/hall.hpp"
#include "hallint/partition.hpp"
#include "hallint/products.hpp"
#include "hallint/report.hpp"
#include "hallint/search.hpp"
#include "hallint/subgroup.hpp"

namespace {

using namespace hallint;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

int emit(RunReport& rep, Clock::time_point t0, int code) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  rep.add("wall_time_ms", static_cast<std::uint64_t>(ms));
  std::cout << rep.to_string();
  return code;
}

void echo_group(RunReport& rep, const std::string& key, const std::string& name, const Group& g) {
  rep.add(key, name + " " + group_fingerprint(g));
}

struct Args {
  std::string group, subgroup, from, pi, target, scenario;
  unsigned k = 2;
  unsigned prime = 2;
  unsigned max_parts = 5;
  unsigned max_degree = 10;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 2000;
  bool solvable_sweep = false;
};

int cmd_order(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  RunReport rep;
  rep.add("command", "order");
  echo_group(rep, "input.group", a.group, g);
  rep.add("order", g.order());
  rep.add("degree", static_cast<std::uint64_t>(g.degree()));
  return emit(rep, t0, kExitOk);
}

int cmd_intersect(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group h = resolve_group(a.subgroup);
  Group i = intersect(g, h);
  RunReport rep;
  rep.add("command", "intersect");
  echo_group(rep, "input.group", a.group, g);
  echo_group(rep, "input.subgroup", a.subgroup, h);
  rep.add("intersection.order", i.order());
  return emit(rep, t0, kExitOk);
}

int cmd_core(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group h = resolve_group(a.subgroup);
  Group c = normal_core(g, h, a.seed);
  RunReport rep;
  rep.add("command", "core");
  rep.add("seed", a.seed);
  echo_group(rep, "input.group", a.group, g);
  echo_group(rep, "input.subgroup", a.subgroup, h);
  rep.add("core.order", c.order());
  return emit(rep, t0, kExitOk);
}

int cmd_opi(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group h = resolve_group(a.subgroup);
  PrimeSet pi = PrimeSet::parse(a.pi);
  Group c = o_pi(g, h, pi, a.seed);
  RunReport rep;
  rep.add("command", "opi");
  rep.add("seed", a.seed);
  rep.add("pi", pi.to_string());
  echo_group(rep, "input.group", a.group, g);
  echo_group(rep, "input.subgroup", a.subgroup, h);
  rep.add("opi.order", c.order());
  return emit(rep, t0, kExitOk);
}

int cmd_sylow(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group s = sylow(g, a.prime, a.seed);
  RunReport rep;
  rep.add("command", "sylow");
  rep.add("seed", a.seed);
  rep.add("p", static_cast<std::uint64_t>(a.prime));
  echo_group(rep, "input.group", a.group, g);
  rep.add("sylow.order", s.order());
  return emit(rep, t0, kExitOk);
}

int cmd_find_tuple(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group h = resolve_group(a.subgroup);
  Group target = trivial_group(g.degree());
  if (!a.pi.empty()) {
    target = o_pi(g, h, PrimeSet::parse(a.pi), a.seed);
  } else if (!a.target.empty()) {
    target = resolve_group(a.target);
  }
  FindTupleOptions opts;
  opts.k = a.k;
  opts.budget = a.budget;
  opts.seed = a.seed;
  if (!a.from.empty()) opts.conjugator_source = resolve_group(a.from);
  FindTupleResult res = find_tuple(g, h, target, opts);

  RunReport rep;
  rep.add("command", "find-tuple");
  rep.add("seed", a.seed);
  rep.add("k", static_cast<std::uint64_t>(a.k));
  echo_group(rep, "input.group", a.group, g);
  echo_group(rep, "input.subgroup", a.subgroup, h);
  if (!a.from.empty()) rep.add("input.from", a.from);
  rep.add("target.order", target.order());
  rep.add("attempts", res.attempts);
  rep.add("conclusive", res.conclusive);
  if (res.solution) {
    rep.add("result", "found");
    const TupleSolution& sol = *res.solution;
    for (std::size_t i = 0; i < sol.conjugators.size(); ++i)
      rep.add("conjugator." + std::to_string(i + 1), cycle_string(sol.conjugators[i]));
    if (sol.coset_indices)
      for (std::size_t i = 0; i < sol.coset_indices->size(); ++i)
        rep.add("coset." + std::to_string(i + 1),
                static_cast<std::uint64_t>((*sol.coset_indices)[i]));
    rep.add("intersection.order", sol.intersection.order());
    rep.add("target_met", sol.target_met);
    return emit(rep, t0, kExitOk);
  }
  rep.add("result", "none");
  return emit(rep, t0, res.conclusive ? kExitOk : kExitInconclusive);
}

int cmd_prove_min(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group h = resolve_group(a.subgroup);
  OrbitReport rep_orbits = prove_no_tuple(g, h, a.k);
  RunReport rep;
  rep.add("command", "prove-min");
  rep.add("k", static_cast<std::uint64_t>(a.k));
  echo_group(rep, "input.group", a.group, g);
  echo_group(rep, "input.subgroup", a.subgroup, h);
  rep.add("total_tuples", rep_orbits.total_tuples);
  rep.add("orbit_count", rep_orbits.orbit_count);
  rep.add("max_orbit_size", rep_orbits.max_orbit_size);
  rep.add("min_orbit_size", rep_orbits.min_orbit_size);
  rep.add("verdict", rep_orbits.all_stabilizers_nontrivial ? "no-free-tuple" : "free-tuple-exists");
  return emit(rep, t0, kExitOk);
}

int cmd_enumerate(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group h = resolve_group(a.subgroup);
  auto solutions = enumerate_solutions(g, h, a.k);
  RunReport rep;
  rep.add("command", "enumerate");
  rep.add("k", static_cast<std::uint64_t>(a.k));
  echo_group(rep, "input.group", a.group, g);
  echo_group(rep, "input.subgroup", a.subgroup, h);
  rep.add("solution_count", static_cast<std::uint64_t>(solutions.size()));
  return emit(rep, t0, kExitOk);
}

int cmd_orbits(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  Group h = resolve_group(a.subgroup);
  auto solutions = enumerate_solutions(g, h, a.k);
  OrbitReport census = count_solution_orbits(g, h, solutions);
  RunReport rep;
  rep.add("command", "orbits");
  rep.add("k", static_cast<std::uint64_t>(a.k));
  echo_group(rep, "input.group", a.group, g);
  echo_group(rep, "input.subgroup", a.subgroup, h);
  rep.add("solution_count", static_cast<std::uint64_t>(solutions.size()));
  rep.add("orbit_count", census.orbit_count);
  rep.add("max_orbit_size", census.max_orbit_size);
  rep.add("min_orbit_size", census.min_orbit_size);
  rep.add("orb_condition", census.orbit_count >= 5);
  return emit(rep, t0, kExitOk);
}

int distinguish_one(const Args& a) {
  auto t0 = Clock::now();
  Group g = resolve_group(a.group);
  PartitionSearchOptions opts;
  opts.max_parts = a.max_parts;
  opts.seed = a.seed;
  opts.workers = a.workers;
  opts.budget = a.budget;
  PartitionSearchResult res = find_asymmetric_partition(g, opts);
  RunReport rep;
  rep.add("command", "distinguish");
  rep.add("seed", a.seed);
  rep.add("max_parts", static_cast<std::uint64_t>(a.max_parts));
  echo_group(rep, "input.group", a.group, g);
  rep.add("examined", res.examined);
  rep.add("exhaustive", res.exhaustive);
  int code = kExitInconclusive;
  if (res.status == SearchStatus::found) {
    rep.add("status", "found");
    rep.add("partition", "parts " + res.partition->to_string());
    rep.add("num_parts", static_cast<std::uint64_t>(res.partition->num_parts()));
    code = kExitOk;
  } else if (res.status == SearchStatus::none) {
    rep.add("status", "none");
    code = kExitOk;  // proved nonexistence within the class bound
  } else {
    rep.add("status", "inconclusive");
  }
  return emit(rep, t0, code);
}

int distinguish_sweep(const Args& a) {
  auto t0 = Clock::now();
  RunReport rep;
  rep.add("command", "distinguish");
  rep.add("sweep", "solvable");
  rep.add("max_parts", static_cast<std::uint64_t>(a.max_parts));
  rep.add("max_degree", static_cast<std::uint64_t>(a.max_degree));
  unsigned count = 0, found = 0;
  std::string failures;
  for (const std::string& name : solvable_partition_sweep()) {
    Group g = resolve_group(name);
    if (g.degree() > a.max_degree) continue;
    ++count;
    PartitionSearchOptions opts;
    opts.max_parts = a.max_parts;
    opts.seed = a.seed;
    opts.workers = a.workers;
    PartitionSearchResult res = find_asymmetric_partition(g, opts);
    if (res.status == SearchStatus::found) {
      ++found;
    } else {
      if (!failures.empty()) failures += ",";
      failures += name;
    }
  }
  rep.add("sweep.count", static_cast<std::uint64_t>(count));
  rep.add("sweep.found", static_cast<std::uint64_t>(found));
  if (!failures.empty()) rep.add("sweep.failures", failures);
  rep.add("status", failures.empty() ? "ok" : "failed");
  return emit(rep, t0, failures.empty() ? kExitOk : kExitInconclusive);
}

int cmd_assemble(const Args& a) {
  auto t0 = Clock::now();
  std::ifstream in(a.scenario);
  if (!in) throw std::runtime_error("cannot open scenario file: " + a.scenario);
  std::ostringstream buf;
  buf << in.rdbuf();
  AssemblyScenario sc = parse_scenario(buf.str());
  AssemblyResult res = run_scenario(sc);
  RunReport rep;
  rep.add("command", "assemble");
  rep.add("input.scenario", a.scenario);
  rep.add("factor", sc.factor);
  rep.add("top", sc.top);
  rep.add("pi", sc.pi);
  rep.add("group.order", res.product.whole.order());
  rep.add("hall.order", res.hall.order());
  rep.add("index", res.product.whole.order() / res.hall.order());
  for (std::size_t i = 0; i < res.solution.conjugators.size(); ++i)
    rep.add("conjugator." + std::to_string(i + 1), cycle_string(res.solution.conjugators[i]));
  rep.add("intersection.order", res.solution.intersection.order());
  rep.add("status", "verified");
  return emit(rep, t0, kExitOk);
}

int cmd_catalog() {
  for (const CatalogEntry& e : catalog()) {
    std::cout << e.name << "  degree=" << e.group.degree() << " order=" << e.group.order();
    if (e.subgroup) std::cout << " subgroup.order=" << e.subgroup->order();
    if (e.pi) std::cout << " pi=" << e.pi->to_string();
    std::cout << "  " << e.note << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation-group toolkit for Hall-subgroup intersection experiments"};
  app.require_subcommand(1);
  Args a;

  auto* order = app.add_subcommand("order", "order of a group");
  order->add_option("group", a.group)->required();

  auto* inter = app.add_subcommand("intersect", "intersection of two groups");
  inter->add_option("group", a.group)->required();
  inter->add_option("subgroup", a.subgroup)->required();

  auto* core = app.add_subcommand("core", "normal core of a subgroup");
  core->add_option("group", a.group)->required();
  core->add_option("subgroup", a.subgroup)->required();
  core->add_option("--seed", a.seed);

  auto* opi = app.add_subcommand("opi", "largest normal pi-subgroup, via a pi-Hall subgroup");
  opi->add_option("group", a.group)->required();
  opi->add_option("subgroup", a.subgroup)->required();
  opi->add_option("--pi", a.pi)->required();
  opi->add_option("--seed", a.seed);

  auto* syl = app.add_subcommand("sylow", "a Sylow p-subgroup");
  syl->add_option("group", a.group)->required();
  syl->add_option("-p,--prime", a.prime)->required();
  syl->add_option("--seed", a.seed);

  auto* find = app.add_subcommand("find-tuple", "search for conjugates meeting in a target");
  find->add_option("group", a.group)->required();
  find->add_option("subgroup", a.subgroup)->required();
  find->add_option("-k", a.k)->required();
  find->add_option("--pi", a.pi);
  find->add_option("--target", a.target);
  find->add_option("--from", a.from);
  find->add_option("--budget", a.budget);
  find->add_option("--seed", a.seed);

  auto* prove = app.add_subcommand("prove-min", "orbit census over coset tuples");
  prove->add_option("group", a.group)->required();
  prove->add_option("subgroup", a.subgroup)->required();
  prove->add_option("-k", a.k)->required();

  auto* enumerate = app.add_subcommand("enumerate", "all trivial-intersection coset tuples");
  enumerate->add_option("group", a.group)->required();
  enumerate->add_option("subgroup", a.subgroup)->required();
  enumerate->add_option("-k", a.k)->required();

  auto* orbits = app.add_subcommand("orbits", "subgroup orbits on the solution set");
  orbits->add_option("group", a.group)->required();
  orbits->add_option("subgroup", a.subgroup)->required();
  orbits->add_option("-k", a.k)->required();

  auto* dist = app.add_subcommand("distinguish", "search for an asymmetric partition");
  dist->add_option("group", a.group);
  dist->add_flag("--solvable-sweep", a.solvable_sweep);
  dist->add_option("--max-parts", a.max_parts);
  dist->add_option("--max-degree", a.max_degree);
  dist->add_option("--seed", a.seed);
  dist->add_option("--budget", a.budget);
  dist->add_option("--workers", a.workers);

  auto* assemble = app.add_subcommand("assemble", "assemble and verify a wreath scenario");
  assemble->add_option("scenario", a.scenario)->required();

  auto* cat = app.add_subcommand("catalog", "list named groups");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(order)) return cmd_order(a);
    if (app.got_subcommand(inter)) return cmd_intersect(a);
    if (app.got_subcommand(core)) return cmd_core(a);
    if (app.got_subcommand(opi)) return cmd_opi(a);
    if (app.got_subcommand(syl)) return cmd_sylow(a);
    if (app.got_subcommand(find)) return cmd_find_tuple(a);
    if (app.got_subcommand(prove)) return cmd_prove_min(a);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(a);
    if (app.got_subcommand(orbits)) return cmd_orbits(a);
    if (app.got_subcommand(dist)) {
      if (a.solvable_sweep) {
        if (!a.group.empty())
          throw std::invalid_argument("--solvable-sweep does not take a group argument");
        return distinguish_sweep(a);
      }
      if (a.group.empty())
        throw std::invalid_argument("distinguish needs a group name or --solvable-sweep");
      return distinguish_one(a);
    }
    if (app.got_subcommand(assemble)) return cmd_assemble(a);
    if (app.got_subcommand(cat)) return cmd_catalog();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  std::cerr << "error: no command\n";
  return kExitError;
}
