#include "hallint/search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hallint/coset.hpp"
#include "hallint/subgroup.hpp"

namespace hallint {

namespace {

void check_pair(const Group& g, const Group& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("degree mismatch");
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup of the acting group");
}

// m^e with a ceiling; returns cap+1 on overflow past cap.
std::uint64_t bounded_pow(std::uint64_t m, unsigned e, std::uint64_t cap) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > cap / std::max<std::uint64_t>(m, 1)) return cap + 1;
    r *= m;
    if (r > cap) return cap + 1;
  }
  return r;
}

using PermSet = std::unordered_set<Perm, PermHash>;

// Shared machinery for coset-indexed sweeps: canonical representatives and
// the two-fold intersections H ∩ H^{rep_c}, held as element sets so deeper
// folds are plain membership filters.
struct CosetFold {
  CosetAction action;
  std::vector<Perm> h_elements;    // ascending
  std::vector<PermSet> two_fold;   // two_fold[c-1] = elements of H ∩ H^{rep_c}

  CosetFold(const Group& g, const Group& h) : action(g, h) {
    h_elements = h.elements();
    std::sort(h_elements.begin(), h_elements.end());
    const unsigned m = action.index();
    two_fold.reserve(m);
    for (unsigned c = 1; c <= m; ++c) {
      PermSet set;
      if (c == 1) {
        set.insert(h_elements.begin(), h_elements.end());
      } else {
        Group j = intersect(h, h.conjugated_by(action.representative(c)));
        std::vector<Perm> elems = j.elements();
        set.insert(elems.begin(), elems.end());
      }
      two_fold.push_back(std::move(set));
    }
  }

  std::vector<Perm> filter(const std::vector<Perm>& in, unsigned c) const {
    if (c == 1) return in;
    const PermSet& set = two_fold[c - 1];
    std::vector<Perm> out;
    out.reserve(std::min(in.size(), set.size()));
    for (const Perm& x : in)
      if (set.count(x)) out.push_back(x);
    return out;
  }
};

}  // namespace

Group stabilizer_of_tuple(const Group& g, const Group& h, const std::vector<Perm>& conjugators) {
  check_pair(g, h);
  std::vector<Group> parts{h};
  for (const Perm& x : conjugators) {
    if (!g.contains(x)) throw std::invalid_argument("conjugator not in the acting group");
    parts.push_back(h.conjugated_by(x));
  }
  return intersect_many(parts);
}

Group stabilizer_of_tuple(const Group& g, const Group& h, const std::vector<unsigned>& coset_tuple) {
  check_pair(g, h);
  if (!is_self_normalizing(g, h))
    throw std::invalid_argument("subgroup is not self-normalizing");
  CosetAction action(g, h);
  std::vector<Perm> conjugators;
  conjugators.reserve(coset_tuple.size());
  for (unsigned c : coset_tuple) {
    if (c == 0 || c > action.index()) throw std::invalid_argument("coset index out of range");
    conjugators.push_back(action.representative(c));
  }
  return stabilizer_of_tuple(g, h, conjugators);
}

namespace {

// Fold H against conjugates one at a time, stopping as soon as the running
// intersection reaches the target order (it can never drop below: the
// target is normal and lies in every conjugate of H).
std::optional<Group> fold_to_target(const Group& h, const std::vector<Perm>& conjugators,
                                    std::uint64_t target_order) {
  Group acc = h;
  for (const Perm& x : conjugators) {
    if (acc.order() == target_order) return acc;
    acc = intersect(acc, h.conjugated_by(x));
  }
  if (acc.order() == target_order) return acc;
  return std::nullopt;
}

TupleSolution verified_solution(const Group& g, const Group& h, const Group& target, unsigned k,
                                std::vector<Perm> conjugators,
                                std::optional<std::vector<unsigned>> cosets) {
  std::vector<Group> parts{h};
  for (const Perm& x : conjugators) parts.push_back(h.conjugated_by(x));
  Group intersection = intersect_many(parts);
  if (intersection.order() != target.order() || !target.is_subgroup_of(intersection))
    throw std::logic_error("tuple intersection failed verification against the target");
  TupleSolution sol{k, std::move(conjugators), std::move(intersection), true, std::move(cosets)};
  (void)g;
  return sol;
}

// Exhaustive sweep over coset-representative conjugators in lexicographic
// order of coset indices.  Element-set folding keeps the inner loops cheap.
struct CosetSweep {
  const Group& h;
  const CosetFold& fold;
  std::uint64_t target_order;
  unsigned slots;  // k-1
  std::uint64_t leaves_examined = 0;

  std::optional<std::vector<unsigned>> run() {
    std::vector<unsigned> tuple;
    if (dfs(h.elements(), tuple)) return tuple;
    return std::nullopt;
  }

  bool dfs(const std::vector<Perm>& acc, std::vector<unsigned>& tuple) {
    if (acc.size() == target_order) {
      // Lexicographically least completion: pad with coset 1 (identity).
      while (tuple.size() < slots) tuple.push_back(1);
      return true;
    }
    if (tuple.size() == slots) return false;
    const unsigned m = fold.action.index();
    for (unsigned c = 1; c <= m; ++c) {
      tuple.push_back(c);
      std::vector<Perm> next = fold.filter(acc, c);
      if (tuple.size() == slots) ++leaves_examined;
      if (dfs(next, tuple)) return true;
      tuple.pop_back();
    }
    return false;
  }
};

}  // namespace

FindTupleResult find_tuple(const Group& g, const Group& h, const Group& target,
                           const FindTupleOptions& opts) {
  check_pair(g, h);
  if (opts.k < 2) throw std::invalid_argument("k must be at least 2");
  if (!target.is_subgroup_of(h)) throw std::invalid_argument("target must lie in the subgroup");
  if (!is_normal(g, target)) throw std::invalid_argument("target must be normal in the acting group");
  if (opts.conjugator_source && !opts.conjugator_source->is_subgroup_of(g))
    throw std::invalid_argument("conjugator source is not a subgroup of the acting group");

  const unsigned slots = opts.k - 1;
  const std::uint64_t target_order = target.order();
  FindTupleResult result;

  // Phase 1: seeded random sampling.
  std::mt19937_64 rng(opts.seed);
  const Group& source = opts.conjugator_source ? *opts.conjugator_source : g;
  for (std::uint64_t attempt = 0; attempt < opts.budget; ++attempt) {
    std::vector<Perm> conjugators;
    conjugators.reserve(slots);
    for (unsigned i = 0; i < slots; ++i) conjugators.push_back(source.random_element(rng));
    ++result.attempts;
    if (fold_to_target(h, conjugators, target_order)) {
      result.solution =
          verified_solution(g, h, target, opts.k, std::move(conjugators), std::nullopt);
      result.conclusive = true;
      return result;
    }
  }

  // Phase 2: exhaustive sweep, lexicographically least solution.
  if (opts.conjugator_source) {
    const Group& s = *opts.conjugator_source;
    if (bounded_pow(s.order(), slots, opts.exhaustive_cap) > opts.exhaustive_cap) return result;
    std::vector<Perm> elems = s.elements();
    std::sort(elems.begin(), elems.end());
    std::vector<unsigned> odo(slots, 0);
    while (true) {
      std::vector<Perm> conjugators;
      conjugators.reserve(slots);
      for (unsigned i = 0; i < slots; ++i) conjugators.push_back(elems[odo[i]]);
      ++result.attempts;
      if (fold_to_target(h, conjugators, target_order)) {
        result.solution =
            verified_solution(g, h, target, opts.k, std::move(conjugators), std::nullopt);
        result.conclusive = true;
        return result;
      }
      // Odometer, last slot fastest.
      unsigned i = slots;
      while (i > 0 && ++odo[i - 1] == elems.size()) odo[--i] = 0;
      if (i == 0) break;
    }
    result.conclusive = true;  // swept everything: proved nonexistence
    return result;
  }

  const std::uint64_t m = g.order() / h.order();
  if (bounded_pow(m, slots, opts.exhaustive_cap) > opts.exhaustive_cap) return result;
  CosetFold fold(g, h);
  CosetSweep sweep{h, fold, target_order, slots};
  if (auto tuple = sweep.run()) {
    std::vector<Perm> conjugators;
    conjugators.reserve(slots);
    for (unsigned c : *tuple) conjugators.push_back(fold.action.representative(c));
    result.attempts += sweep.leaves_examined;
    result.solution = verified_solution(g, h, target, opts.k, std::move(conjugators), *tuple);
    result.conclusive = true;
    return result;
  }
  result.attempts += sweep.leaves_examined;
  result.conclusive = true;
  return result;
}

OrbitReport prove_no_tuple(const Group& g, const Group& h, unsigned k, std::uint64_t cap) {
  check_pair(g, h);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::uint64_t m = g.order() / h.order();
  const std::uint64_t total = bounded_pow(m, k, cap);
  if (total > cap) throw std::runtime_error("tuple space too large");
  CosetAction action(g, h);

  // Coordinatewise generator action on mixed-radix encoded tuples.
  std::vector<std::vector<std::uint32_t>> tables;
  for (const Perm& img : action.generator_images()) {
    std::vector<std::uint32_t> t(m);
    for (unsigned c = 1; c <= m; ++c) t[c - 1] = img[c] - 1;
    tables.push_back(std::move(t));
  }

  // Union-find, roots hold -(orbit size).
  std::vector<std::int32_t> parent(total, -1);
  auto find = [&](std::uint32_t x) {
    while (parent[x] >= 0) {
      if (parent[parent[x]] >= 0) parent[x] = parent[parent[x]];
      x = static_cast<std::uint32_t>(parent[x]);
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (parent[a] > parent[b]) std::swap(a, b);
    parent[a] += parent[b];
    parent[b] = static_cast<std::int32_t>(a);
  };

  for (std::uint64_t s = 0; s < total; ++s) {
    for (const auto& t : tables) {
      std::uint64_t v = 0, x = s, mul = 1;
      for (unsigned i = 0; i < k; ++i) {
        v += static_cast<std::uint64_t>(t[x % m]) * mul;
        x /= m;
        mul *= m;
      }
      unite(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(v));
    }
  }

  OrbitReport report;
  report.total_tuples = total;
  report.min_orbit_size = total;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (parent[s] >= 0) continue;
    std::uint64_t size = static_cast<std::uint64_t>(-parent[s]);
    ++report.orbit_count;
    report.max_orbit_size = std::max(report.max_orbit_size, size);
    report.min_orbit_size = std::min(report.min_orbit_size, size);
  }
  if (report.orbit_count == 0) report.min_orbit_size = 0;
  report.all_stabilizers_nontrivial = report.max_orbit_size < g.order();
  return report;
}

namespace {

void append_completions(std::vector<std::vector<unsigned>>& out, std::vector<unsigned>& tuple,
                        unsigned slots, unsigned m) {
  // All extensions of the current prefix, in lexicographic order.
  if (tuple.size() == slots) {
    out.push_back(tuple);
    return;
  }
  for (unsigned c = 1; c <= m; ++c) {
    tuple.push_back(c);
    append_completions(out, tuple, slots, m);
    tuple.pop_back();
  }
}

void enumerate_dfs(const CosetFold& fold, const std::vector<Perm>& acc, unsigned slots,
                   std::vector<unsigned>& tuple, std::vector<std::vector<unsigned>>& out) {
  if (acc.size() == 1) {
    // Already trivial: every completion is a solution.
    append_completions(out, tuple, slots, fold.action.index());
    return;
  }
  if (tuple.size() == slots) return;
  const unsigned m = fold.action.index();
  for (unsigned c = 1; c <= m; ++c) {
    tuple.push_back(c);
    std::vector<Perm> next = fold.filter(acc, c);
    enumerate_dfs(fold, next, slots, tuple, out);
    tuple.pop_back();
  }
}

}  // namespace

std::vector<std::vector<unsigned>> enumerate_solutions(const Group& g, const Group& h, unsigned k,
                                                       std::uint64_t cap) {
  check_pair(g, h);
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (!is_self_normalizing(g, h))
    throw std::invalid_argument("subgroup is not self-normalizing");
  if (bounded_pow(g.order() / h.order(), k - 1, cap) > cap)
    throw std::runtime_error("tuple space too large");
  CosetFold fold(g, h);
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> tuple;
  enumerate_dfs(fold, fold.h_elements, k - 1, tuple, out);
  return out;
}

OrbitReport count_solution_orbits(const Group& g, const Group& h,
                                  const std::vector<std::vector<unsigned>>& solutions) {
  OrbitReport report;
  if (solutions.empty()) return report;
  check_pair(g, h);
  const unsigned slots = static_cast<unsigned>(solutions.front().size());
  for (const auto& t : solutions)
    if (t.size() != slots) throw std::invalid_argument("ragged solution set");

  CosetAction action(g, h);
  const std::uint64_t m = action.index();
  std::vector<std::vector<std::uint32_t>> tables;
  for (const Perm& x : h.generators()) {
    Perm img = action.image_of(x);
    std::vector<std::uint32_t> t(m);
    for (unsigned c = 1; c <= m; ++c) t[c - 1] = img[c] - 1;
    tables.push_back(std::move(t));
  }

  auto encode = [&](const std::vector<unsigned>& tuple) {
    std::uint64_t v = 0, mul = 1;
    for (unsigned c : tuple) {
      v += static_cast<std::uint64_t>(c - 1) * mul;
      mul *= m;
    }
    return v;
  };

  std::unordered_map<std::uint64_t, std::uint32_t> position;
  position.reserve(solutions.size() * 2);
  for (std::uint32_t i = 0; i < solutions.size(); ++i) position.emplace(encode(solutions[i]), i);

  std::vector<char> visited(solutions.size(), 0);
  report.total_tuples = solutions.size();
  report.min_orbit_size = solutions.size();
  for (std::uint32_t start = 0; start < solutions.size(); ++start) {
    if (visited[start]) continue;
    std::uint64_t size = 0;
    std::vector<std::uint32_t> stack{start};
    visited[start] = 1;
    while (!stack.empty()) {
      std::uint32_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& t : tables) {
        std::uint64_t v = 0, x = encode(solutions[cur]), mul = 1;
        for (unsigned i = 0; i < slots; ++i) {
          v += static_cast<std::uint64_t>(t[x % m]) * mul;
          x /= m;
          mul *= m;
        }
        auto it = position.find(v);
        if (it == position.end())
          throw std::invalid_argument("solution set is not closed under the subgroup action");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          stack.push_back(it->second);
        }
      }
    }
    ++report.orbit_count;
    report.max_orbit_size = std::max(report.max_orbit_size, size);
    report.min_orbit_size = std::min(report.min_orbit_size, size);
  }
  report.all_stabilizers_nontrivial = report.max_orbit_size < h.order();
  return report;
}

}  // namespace hallint
