#include "hallint/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace hallint {

struct Group::Impl {
  unsigned degree = 0;
  std::vector<Perm> gens;
  mutable std::unique_ptr<StabChain> chain;
};

Group::Group(unsigned degree, std::vector<Perm> gens) : impl_(std::make_shared<Impl>()) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  impl_->degree = degree;
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) impl_->gens.push_back(g);
  }
  if (impl_->gens.empty()) impl_->gens.push_back(Perm(degree));
}

unsigned Group::degree() const { return impl_->degree; }

const std::vector<Perm>& Group::generators() const { return impl_->gens; }

const StabChain& Group::chain() const {
  if (!impl_->chain)
    impl_->chain = std::make_unique<StabChain>(StabChain::build(impl_->degree, impl_->gens));
  return *impl_->chain;
}

std::uint64_t Group::order() const { return chain().order(); }

bool Group::contains(const Perm& g) const {
  if (g.degree() != impl_->degree) return false;
  return chain().contains(g);
}

std::vector<unsigned> Group::orbit(unsigned point) const {
  if (point < 1 || point > impl_->degree) throw std::invalid_argument("point out of range");
  std::vector<bool> seen(impl_->degree, false);
  std::vector<unsigned> queue{point};
  seen[point - 1] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : impl_->gens) {
      unsigned q = g[queue[i]];
      if (!seen[q - 1]) {
        seen[q - 1] = true;
        queue.push_back(q);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<unsigned>> Group::orbits() const {
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> seen(impl_->degree, false);
  for (unsigned p = 1; p <= impl_->degree; ++p) {
    if (seen[p - 1]) continue;
    auto orb = orbit(p);
    for (unsigned q : orb) seen[q - 1] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

std::vector<Perm> Group::elements(std::uint64_t cap) const { return chain().elements(cap); }

Perm Group::random_element(std::mt19937_64& rng) const { return chain().random_element(rng); }

bool Group::is_subgroup_of(const Group& g) const {
  if (degree() != g.degree()) return false;
  for (const Perm& x : generators())
    if (!g.contains(x)) return false;
  return true;
}

bool Group::same_group_as(const Group& other) const {
  return degree() == other.degree() && order() == other.order() && is_subgroup_of(other);
}

Group Group::conjugated_by(const Perm& x) const {
  std::vector<Perm> gens;
  gens.reserve(impl_->gens.size());
  for (const Perm& g : impl_->gens) gens.push_back(conjugate(g, x));
  return Group(impl_->degree, std::move(gens));
}

Group group_from_cycles(unsigned degree, const std::vector<std::string>& cycles) {
  std::vector<Perm> gens;
  gens.reserve(cycles.size());
  for (const std::string& c : cycles) gens.push_back(parse_perm(c, degree));
  return Group(degree, std::move(gens));
}

Group trivial_group(unsigned degree) { return Group(degree, {}); }

Group join(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in join");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group(a.degree(), std::move(gens));
}

Group join(const Group& a, const Perm& extra) {
  std::vector<Perm> gens = a.generators();
  gens.push_back(extra);
  return Group(a.degree(), std::move(gens));
}

}  // namespace hallint
