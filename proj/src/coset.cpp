#include "hallint/coset.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace hallint {

namespace {

std::vector<unsigned> natural_base(unsigned degree) {
  std::vector<unsigned> base(degree);
  std::iota(base.begin(), base.end(), 1u);
  return base;
}

}  // namespace

// Greedy minimization over the chain levels: with base (1,...,n) the choice
// at level i fixes the image of point i, and the remaining freedom is
// exactly the next stabilizer, so the result is the least element of Hx.
Perm CosetAction::canonical_rep(Perm x) const {
  for (const ChainLevel& level : hchain_.levels()) {
    unsigned best_point = 0;
    unsigned best_image = 0;
    for (unsigned p : level.orbit) {
      unsigned q = x[p];
      if (best_point == 0 || q < best_image) {
        best_point = p;
        best_image = q;
      }
    }
    if (best_point != level.base_point) x = level.rep_to(best_point) * x;
  }
  return x;
}

CosetAction::CosetAction(const Group& g, const Group& h)
    : g_(g),
      h_(h),
      hchain_(StabChain::build_with_base(g.degree(), h.generators(), natural_base(g.degree()))),
      image_(trivial_group(1)) {
  if (g.degree() != h.degree()) throw std::invalid_argument("degree mismatch");
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup of the acting group");

  reps_.push_back(canonical_rep(Perm(g.degree())));
  coset_id_.emplace(reps_.front(), 1u);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const Perm& gen : g_.generators()) {
      Perm rep = canonical_rep(reps_[i] * gen);
      if (coset_id_.emplace(rep, static_cast<unsigned>(reps_.size()) + 1).second)
        reps_.push_back(std::move(rep));
    }
  }

  gen_images_.reserve(g_.generators().size());
  for (const Perm& gen : g_.generators()) gen_images_.push_back(image_of(gen));
  image_ = Group(index(), gen_images_);

  assert(static_cast<std::uint64_t>(index()) * h_.order() == g_.order());
}

unsigned CosetAction::coset_of(const Perm& g) const {
  if (!g_.contains(g)) throw std::invalid_argument("element not in the acting group");
  auto it = coset_id_.find(canonical_rep(g));
  assert(it != coset_id_.end());
  return it->second;
}

Perm CosetAction::image_of(const Perm& g) const {
  std::vector<unsigned> img(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    auto it = coset_id_.find(canonical_rep(reps_[c] * g));
    assert(it != coset_id_.end());
    img[c] = it->second;
  }
  return Perm(std::move(img));
}

bool CosetAction::faithful() const { return image_.order() == g_.order(); }

}  // namespace hallint
