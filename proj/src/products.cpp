#include "hallint/products.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hallint/subgroup.hpp"

namespace hallint {

Perm DirectProduct::embed(std::size_t coordinate, const Perm& p) const {
  if (coordinate >= factors.size()) throw std::invalid_argument("coordinate out of range");
  if (p.degree() != factors[coordinate].degree())
    throw std::invalid_argument("degree mismatch in coordinate embedding");
  const unsigned off = offsets[coordinate];
  std::vector<unsigned> img(whole.degree());
  for (unsigned i = 1; i <= whole.degree(); ++i) img[i - 1] = i;
  for (unsigned i = 1; i <= p.degree(); ++i) img[off + i - 1] = off + p[i];
  return Perm(std::move(img));
}

Group DirectProduct::embed_group(std::size_t coordinate, const Group& s) const {
  std::vector<Perm> gens;
  gens.reserve(s.generators().size());
  for (const Perm& x : s.generators()) gens.push_back(embed(coordinate, x));
  return Group(whole.degree(), std::move(gens));
}

DirectProduct direct_product(const std::vector<Group>& factors) {
  if (factors.empty()) throw std::invalid_argument("direct product needs at least one factor");
  DirectProduct dp{trivial_group(1), factors, {}};
  unsigned degree = 0;
  for (const Group& f : factors) {
    dp.offsets.push_back(degree);
    degree += f.degree();
  }
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const unsigned off = dp.offsets[i];
    for (const Perm& x : factors[i].generators()) {
      std::vector<unsigned> img(degree);
      for (unsigned j = 1; j <= degree; ++j) img[j - 1] = j;
      for (unsigned j = 1; j <= x.degree(); ++j) img[off + j - 1] = off + x[j];
      gens.emplace_back(std::move(img));
    }
  }
  dp.whole = Group(degree, std::move(gens));
  return dp;
}

Perm WreathProduct::embed_base(unsigned block, const Perm& p) const {
  if (block == 0 || block > blocks) throw std::invalid_argument("block out of range");
  if (p.degree() != block_size) throw std::invalid_argument("degree mismatch in block embedding");
  const unsigned off = (block - 1) * block_size;
  std::vector<unsigned> img(whole.degree());
  for (unsigned i = 1; i <= whole.degree(); ++i) img[i - 1] = i;
  for (unsigned i = 1; i <= block_size; ++i) img[off + i - 1] = off + p[i];
  return Perm(std::move(img));
}

Perm WreathProduct::embed_top(const Perm& s) const {
  if (s.degree() != blocks) throw std::invalid_argument("degree mismatch in top embedding");
  std::vector<unsigned> img(whole.degree());
  for (unsigned b = 1; b <= blocks; ++b)
    for (unsigned j = 1; j <= block_size; ++j)
      img[(b - 1) * block_size + j - 1] = (s[b] - 1) * block_size + j;
  return Perm(std::move(img));
}

WreathProduct wreath_product(const Group& a, const Group& l) {
  WreathProduct w{trivial_group(1), a, l, l.degree(), a.degree()};
  const unsigned degree = w.blocks * w.block_size;
  w.whole = trivial_group(degree);  // placeholder until generators are built
  std::vector<Perm> gens;
  for (unsigned b = 1; b <= w.blocks; ++b)
    for (const Perm& x : a.generators()) gens.push_back(w.embed_base(b, x));
  for (const Perm& s : l.generators()) gens.push_back(w.embed_top(s));
  w.whole = Group(degree, std::move(gens));
  return w;
}

Group hall_in_wreath(const WreathProduct& w, const Group& h1, const PrimeSet& pi) {
  if (!is_hall_subgroup(w.factor, h1, pi))
    throw std::invalid_argument("factor subgroup is not a Hall subgroup for the given primes");
  if (!is_pi_number(w.top.order(), pi))
    throw std::invalid_argument("top group order must be a pi-number");
  if (!is_solvable(w.top)) throw std::invalid_argument("top group is not solvable");
  std::vector<Perm> gens;
  for (unsigned b = 1; b <= w.blocks; ++b)
    for (const Perm& x : h1.generators()) gens.push_back(w.embed_base(b, x));
  for (const Perm& s : w.top.generators()) gens.push_back(w.embed_top(s));
  Group hall(w.whole.degree(), std::move(gens));
  if (!is_hall_subgroup(w.whole, hall, pi))
    throw std::logic_error("wreath Hall subgroup failed verification");
  return hall;
}

TupleSolution combine_direct_solutions(const DirectProduct& dp, const std::vector<Group>& subgroups,
                                       const std::vector<TupleSolution>& solutions) {
  const std::size_t r = dp.factors.size();
  if (subgroups.size() != r || solutions.size() != r)
    throw std::invalid_argument("one subgroup and one solution per factor required");
  const unsigned k = solutions.front().k;
  for (const TupleSolution& s : solutions) {
    if (s.k != k) throw std::invalid_argument("factor solutions must share k");
    if (s.conjugators.size() + 1 != k)
      throw std::invalid_argument("solution conjugator count does not match its k");
  }

  std::vector<Perm> conjugators;
  for (unsigned slot = 0; slot + 1 < k; ++slot) {
    Perm x(dp.whole.degree());
    for (std::size_t i = 0; i < r; ++i) x = x * dp.embed(i, solutions[i].conjugators[slot]);
    conjugators.push_back(std::move(x));
  }

  Group h = dp.embed_group(0, subgroups[0]);
  for (std::size_t i = 1; i < r; ++i) h = join(h, dp.embed_group(i, subgroups[i]));

  std::vector<Group> parts{h};
  for (const Perm& x : conjugators) parts.push_back(h.conjugated_by(x));
  Group intersection = intersect_many(parts);

  // The combined intersection must be the product of the per-factor ones.
  Group expected = dp.embed_group(0, solutions[0].intersection);
  for (std::size_t i = 1; i < r; ++i) expected = join(expected, dp.embed_group(i, solutions[i].intersection));
  if (!intersection.same_group_as(expected))
    throw std::logic_error("combined solution failed verification");

  bool target_met = true;
  for (const TupleSolution& s : solutions) target_met = target_met && s.target_met;
  return TupleSolution{k, std::move(conjugators), std::move(intersection), target_met, std::nullopt};
}

AssemblyResult assemble_wreath_solution(const Group& a, const Group& h1, const Group& l,
                                        const PrimeSet& pi, const PointPartition& p,
                                        const std::vector<std::array<Perm, 4>>& quadruples) {
  if (p.degree() != l.degree())
    throw std::invalid_argument("partition degree must match the top group degree");
  if (!is_asymmetric(l, p)) throw std::invalid_argument("partition not asymmetric");
  if (quadruples.size() < p.num_parts())
    throw std::invalid_argument("not enough quadruples for the partition classes");

  // Every supplied quadruple must be a five-fold trivial-intersection
  // witness in the factor.
  for (const auto& quad : quadruples) {
    std::vector<Group> parts{h1};
    for (const Perm& x : quad) {
      if (!a.contains(x)) throw std::invalid_argument("conjugator not in the factor group");
      parts.push_back(h1.conjugated_by(x));
    }
    if (!intersect_many(parts).is_trivial())
      throw std::invalid_argument("per-factor quadruple does not give a trivial intersection");
  }

  WreathProduct w = wreath_product(a, l);
  Group hall = hall_in_wreath(w, h1, pi);

  // Block i draws its conjugator column from the quadruple of its class.
  std::vector<Perm> conjugators;
  for (unsigned slot = 0; slot < 4; ++slot) {
    Perm x(w.whole.degree());
    for (unsigned b = 1; b <= w.blocks; ++b) {
      unsigned cls = p.label_of(b);  // 0-based
      x = x * w.embed_base(b, quadruples[cls][slot]);
    }
    conjugators.push_back(std::move(x));
  }

  std::vector<Group> parts{hall};
  for (const Perm& x : conjugators) parts.push_back(hall.conjugated_by(x));
  Group intersection = intersect_many(parts);
  if (!intersection.is_trivial()) throw std::logic_error("assembled intersection is not trivial");

  TupleSolution sol{5, std::move(conjugators), std::move(intersection), true, std::nullopt};
  return AssemblyResult{std::move(w), std::move(hall), std::move(sol)};
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

AssemblyScenario parse_scenario(const std::string& text) {
  AssemblyScenario sc;
  std::vector<bool> have(5, false);
  bool have_factor = false, have_hall = false, have_top = false, have_pi = false,
       have_partition = false;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed scenario line: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "factor") {
      sc.factor = value;
      have_factor = true;
    } else if (key == "hall_gens") {
      sc.hall_gens = split_list(value);
      have_hall = true;
    } else if (key == "top") {
      sc.top = value;
      have_top = true;
    } else if (key == "pi") {
      sc.pi = value;
      have_pi = true;
    } else if (key == "partition") {
      sc.partition = value;
      have_partition = true;
    } else if (key.size() == 5 && key.compare(0, 4, "quad") == 0 && key[4] >= '1' &&
               key[4] <= '5') {
      unsigned idx = static_cast<unsigned>(key[4] - '1');
      std::vector<std::string> entries = split_list(value);
      if (entries.size() != 4)
        throw std::invalid_argument("quadruple must list four permutations: " + key);
      for (unsigned i = 0; i < 4; ++i) sc.quads[idx][i] = entries[i];
      have[idx] = true;
    } else {
      throw std::invalid_argument("unknown scenario key: " + key);
    }
  }
  if (!have_factor) throw std::invalid_argument("missing scenario key: factor");
  if (!have_hall) throw std::invalid_argument("missing scenario key: hall_gens");
  if (!have_top) throw std::invalid_argument("missing scenario key: top");
  if (!have_pi) throw std::invalid_argument("missing scenario key: pi");
  if (!have_partition) throw std::invalid_argument("missing scenario key: partition");
  for (unsigned i = 0; i < 5; ++i)
    if (!have[i])
      throw std::invalid_argument("missing scenario key: quad" + std::to_string(i + 1));
  return sc;
}

}  // namespace hallint
