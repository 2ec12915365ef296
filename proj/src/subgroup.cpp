#include "hallint/subgroup.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "hallint/coset.hpp"

namespace hallint {

namespace {

std::vector<bool> moved_points(const Group& g) {
  std::vector<bool> moved(g.degree(), false);
  for (const Perm& x : g.generators())
    for (unsigned p = 1; p <= g.degree(); ++p)
      if (x.moves(p)) moved[p - 1] = true;
  return moved;
}

struct IntersectSearch {
  const StabChain& ca;
  const StabChain& cb;
  std::vector<std::vector<unsigned>> orbits_a;  // per level, points ascending
  std::vector<Perm> found;
  Group known;

  IntersectSearch(const StabChain& a, const StabChain& b, unsigned degree)
      : ca(a), cb(b), known(trivial_group(degree)) {
    orbits_a.reserve(ca.levels().size());
    for (const ChainLevel& level : ca.levels()) {
      std::vector<unsigned> pts = level.orbit;
      std::sort(pts.begin(), pts.end());
      orbits_a.push_back(std::move(pts));
    }
  }

  // ta runs over elements of A level by level; tb tracks the unique element
  // of B with the same base images.  With a full common base, matching
  // images on every point forces ta == tb at the leaves.
  void dfs(std::size_t level, const Perm& ta, const Perm& tb, const Perm& tb_inv) {
    if (level == ca.levels().size()) {
      assert(ta == tb);
      if (!known.contains(ta)) {
        found.push_back(ta);
        known = join(known, ta);
      }
      return;
    }
    const ChainLevel& la = ca.levels()[level];
    const ChainLevel& lb = cb.levels()[level];
    for (unsigned p : orbits_a[level]) {
      unsigned q = ta[p];
      unsigned r = tb_inv[q];
      if (!lb.in_orbit(r)) continue;
      const Perm& u = la.rep_to(p);
      const Perm& v = lb.rep_to(r);
      dfs(level + 1, u * ta, v * tb, tb_inv * v.inverse());
    }
  }
};

}  // namespace

Group intersect(const Group& a, const Group& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  unsigned n = a.degree();

  std::vector<bool> ma = moved_points(a);
  std::vector<bool> mb = moved_points(b);
  std::vector<unsigned> base;
  base.reserve(n);
  for (unsigned p = 1; p <= n; ++p)
    if (ma[p - 1] && mb[p - 1]) base.push_back(p);
  for (unsigned p = 1; p <= n; ++p)
    if (!(ma[p - 1] && mb[p - 1])) base.push_back(p);

  StabChain ca = StabChain::build_with_base(n, a.generators(), base);
  StabChain cb = StabChain::build_with_base(n, b.generators(), base);

  IntersectSearch search(ca, cb, n);
  Perm id(n);
  search.dfs(0, id, id, id);
  return Group(n, std::move(search.found));
}

Group intersect_many(const std::vector<Group>& groups) {
  if (groups.empty()) throw std::invalid_argument("empty intersection list");
  Group result = groups.front();
  for (std::size_t i = 1; i < groups.size(); ++i) {
    if (result.is_trivial()) break;
    result = intersect(result, groups[i]);
  }
  return result;
}

Group normal_core(const Group& g, const Group& h, std::uint64_t seed) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup");
  Group k = h;
  // A few random conjugates first usually shrink the candidate quickly.
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 4 && !k.is_trivial(); ++i) {
    Group kx = k.conjugated_by(g.random_element(rng));
    if (!kx.is_subgroup_of(k)) k = intersect(k, kx);
  }
  // Intersect with generator conjugates until invariant; invariance under
  // generators gives normality, and the core survives every step.
  bool stable = false;
  while (!stable) {
    stable = true;
    for (const Perm& x : g.generators()) {
      Group kx = k.conjugated_by(x);
      if (!kx.is_subgroup_of(k)) {
        k = intersect(k, kx);
        stable = false;
        break;
      }
    }
  }
  assert(is_normal(g, k));
  return k;
}

Group centralizer(const Group& g, const Perm& a) {
  if (!g.contains(a)) throw std::invalid_argument("element not in the group");
  // Orbit of a under conjugation; Schreier generators fix a, so they
  // generate the stabilizer, which is the centralizer.
  std::unordered_map<Perm, Perm, PermHash> to_rep;  // class member -> conjugator
  std::deque<Perm> queue;
  to_rep.emplace(a, Perm(g.degree()));
  queue.push_back(a);
  Group cent = trivial_group(g.degree());
  while (!queue.empty()) {
    Perm m = std::move(queue.front());
    queue.pop_front();
    const Perm u = to_rep.at(m);
    for (const Perm& x : g.generators()) {
      Perm mx = conjugate(m, x);
      auto it = to_rep.find(mx);
      if (it == to_rep.end()) {
        to_rep.emplace(mx, u * x);
        queue.push_back(std::move(mx));
      } else {
        Perm schreier = u * x * it->second.inverse();
        if (!cent.contains(schreier)) cent = join(cent, schreier);
      }
    }
  }
  return cent;
}

std::vector<Perm> conjugacy_class(const Group& g, const Perm& a, std::uint64_t cap) {
  if (!g.contains(a)) throw std::invalid_argument("element not in the group");
  std::vector<Perm> members{a};
  std::unordered_map<Perm, bool, PermHash> seen;
  seen.emplace(a, true);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const Perm& x : g.generators()) {
      Perm mx = conjugate(members[i], x);
      if (seen.emplace(mx, true).second) {
        if (members.size() + 1 > cap) throw std::runtime_error("conjugacy class cap exceeded");
        members.push_back(std::move(mx));
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_normal(const Group& g, const Group& n) {
  if (!n.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup");
  for (const Perm& x : g.generators())
    for (const Perm& y : n.generators())
      if (!n.contains(conjugate(y, x))) return false;
  return true;
}

bool is_self_normalizing(const Group& g, const Group& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup");
  // Cosets fixed pointwise by the H-action are exactly those inside N_G(H).
  CosetAction action(g, h);
  std::vector<Perm> h_images;
  h_images.reserve(h.generators().size());
  for (const Perm& x : h.generators()) h_images.push_back(action.image_of(x));
  unsigned fixed = 0;
  for (unsigned c = 1; c <= action.index(); ++c) {
    bool all = true;
    for (const Perm& img : h_images)
      if (img[c] != c) {
        all = false;
        break;
      }
    if (all) ++fixed;
  }
  return fixed == 1;
}

}  // namespace hallint
