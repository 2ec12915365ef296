#include "hallint/stab_chain.hpp"

#include <cassert>
#include <stdexcept>

namespace hallint {

StabChain StabChain::build(unsigned degree, const std::vector<Perm>& gens) {
  return build_with_base(degree, gens, {});
}

StabChain StabChain::build_with_base(unsigned degree, const std::vector<Perm>& gens,
                                     const std::vector<unsigned>& base) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  StabChain chain;
  chain.degree_ = degree;
  for (unsigned b : base) {
    if (b < 1 || b > degree) throw std::invalid_argument("base point out of range");
    ChainLevel level;
    level.base_point = b;
    chain.levels_.push_back(std::move(level));
  }
  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    chain.insert_generator(g);
  }
  chain.complete();
  return chain;
}

// A generator belongs to every level whose earlier base points it fixes.
void StabChain::insert_generator(const Perm& g) {
  if (g.is_identity()) return;
  std::size_t l = 0;
  for (;;) {
    if (l == levels_.size()) {
      ChainLevel level;
      level.base_point = g.smallest_moved_point();
      levels_.push_back(std::move(level));
    }
    levels_[l].gens.push_back(g);
    if (g.moves(levels_[l].base_point)) break;
    ++l;
  }
}

void StabChain::update_orbit(std::size_t li) {
  ChainLevel& level = levels_[li];
  level.orbit.clear();
  level.orbit_index.assign(degree_, -1);
  level.transversal.clear();
  level.orbit.push_back(level.base_point);
  level.orbit_index[level.base_point - 1] = 0;
  level.transversal.push_back(Perm(degree_));
  for (std::size_t j = 0; j < level.orbit.size(); ++j) {
    unsigned p = level.orbit[j];
    for (const Perm& s : level.gens) {
      unsigned q = s[p];
      if (level.orbit_index[q - 1] < 0) {
        level.orbit_index[q - 1] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(q);
        level.transversal.push_back(level.transversal[j] * s);
      }
    }
  }
}

Perm StabChain::sift(const Perm& g, std::size_t from_level, std::size_t* stop_level) const {
  Perm r = g;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    unsigned q = r[level.base_point];
    if (!level.in_orbit(q)) {
      if (stop_level) *stop_level = l;
      return r;
    }
    r = r * level.rep_to(q).inverse();
  }
  if (stop_level) *stop_level = levels_.size();
  return r;
}

// Deterministic Schreier-Sims: verify each level's Schreier generators strip
// to the identity, adding residues as new strong generators (and new base
// points when a residue fixes the whole base) until the chain is closed.
void StabChain::complete() {
  if (levels_.empty()) return;
  for (std::size_t l = 0; l < levels_.size(); ++l) update_orbit(l);
  std::size_t i = levels_.size();
  --i;
  for (;;) {
    update_orbit(i);
    bool clean = true;
    ChainLevel& level = levels_[i];
    for (std::size_t j = 0; clean && j < level.orbit.size(); ++j) {
      for (const Perm& s : level.gens) {
        unsigned q = s[level.orbit[j]];
        Perm schreier = level.transversal[j] * s * level.rep_to(q).inverse();
        if (schreier.is_identity()) continue;
        std::size_t stop = 0;
        Perm residue = sift(schreier, i + 1, &stop);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          ChainLevel fresh;
          fresh.base_point = residue.smallest_moved_point();
          fresh.orbit_index.assign(degree_, -1);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = i + 1; l <= stop; ++l) levels_[l].gens.push_back(residue);
        for (std::size_t l = i + 1; l <= stop; ++l) update_orbit(l);
        i = stop;
        clean = false;
        break;
      }
    }
    if (clean) {
      if (i == 0) break;
      --i;
    }
  }
}

std::vector<unsigned> StabChain::base() const {
  std::vector<unsigned> b;
  b.reserve(levels_.size());
  for (const ChainLevel& level : levels_) b.push_back(level.base_point);
  return b;
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const ChainLevel& level : levels_) n *= level.orbit.size();
  return n;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  std::size_t stop = 0;
  Perm r = sift(g, 0, &stop);
  return stop == levels_.size() && r.is_identity();
}

std::vector<Perm> StabChain::elements(std::uint64_t cap) const {
  if (order() > cap) throw std::runtime_error("group too large to enumerate");
  std::vector<Perm> result{Perm(degree_)};
  // Walk levels deepest-first so each element is stabilizer-part * coset rep.
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(result.size() * levels_[l].transversal.size());
    for (const Perm& u : levels_[l].transversal)
      for (const Perm& h : result) next.push_back(h * u);
    result = std::move(next);
  }
  return result;
}

Perm StabChain::random_element(std::mt19937_64& rng) const {
  Perm r(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& tr = levels_[l].transversal;
    r = r * tr[static_cast<std::size_t>(rng() % tr.size())];
  }
  return r;
}

}  // namespace hallint
