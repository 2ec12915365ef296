#include "hallint/hall.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hallint/subgroup.hpp"

namespace hallint {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeSet::PrimeSet(std::vector<unsigned> primes) {
  for (unsigned p : primes) {
    if (!is_prime(p)) throw std::invalid_argument("prime set entry is not prime");
    primes_.insert(p);
  }
}

PrimeSet PrimeSet::parse(const std::string& text) {
  std::vector<unsigned> primes;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    primes.push_back(static_cast<unsigned>(std::stoul(digits)));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '\t') {
      flush();
    } else {
      throw std::invalid_argument("malformed prime set");
    }
  }
  flush();
  if (primes.empty()) throw std::invalid_argument("empty prime set");
  return PrimeSet(std::move(primes));
}

std::string PrimeSet::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (unsigned p : primes_) {
    if (!first) out << ',';
    out << p;
    first = false;
  }
  return out.str();
}

std::uint64_t pi_part(std::uint64_t n, const PrimeSet& pi) {
  if (n == 0) throw std::invalid_argument("pi-part of zero is undefined");
  std::uint64_t part = 1;
  for (unsigned p : pi.primes()) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

PrimeSet primes_of(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("prime support of zero is undefined");
  std::vector<unsigned> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<unsigned>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(static_cast<unsigned>(n));
  return PrimeSet(std::move(primes));
}

bool is_pi_number(std::uint64_t n, const PrimeSet& pi) {
  if (n == 0) throw std::invalid_argument("pi-part of zero is undefined");
  return pi_part(n, pi) == n;
}

bool is_hall_subgroup(const Group& g, const Group& h, const PrimeSet& pi) {
  if (!h.is_subgroup_of(g)) return false;
  return h.order() == pi_part(g.order(), pi);
}

Group o_pi(const Group& g, const Group& h, const PrimeSet& pi, std::uint64_t seed) {
  if (!is_hall_subgroup(g, h, pi))
    throw std::invalid_argument("subgroup is not a Hall subgroup for the given primes");
  // The core of a pi-Hall subgroup is the largest normal pi-subgroup: any
  // normal pi-subgroup lies in some conjugate of every pi-Hall subgroup,
  // hence in all of them, hence in the core.
  return normal_core(g, h, seed);
}

namespace {

// Multiplicity of p in n.
unsigned valuation(std::uint64_t n, unsigned p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// The p-part of g: for an element of order p^a * m with gcd(p, m) = 1,
// g^m has order p^a.
Perm p_element_of(const Perm& g, unsigned p) {
  std::uint64_t o = g.order();
  std::uint64_t m = o;
  while (m % p == 0) m /= p;
  Perm r(g.degree());
  Perm base = g;
  std::uint64_t e = m;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace

Group sylow(const Group& g, unsigned p, std::uint64_t seed) {
  if (!is_prime(p)) throw std::invalid_argument("sylow prime must be prime");
  const unsigned v = valuation(g.order(), p);
  const std::uint64_t target = pow_u64(p, v);
  if (v == 0) return trivial_group(g.degree());

  std::mt19937_64 rng(seed);
  const unsigned restarts = 64 * static_cast<unsigned>(primes_of(g.order()).primes().size());
  for (unsigned attempt = 0; attempt < restarts; ++attempt) {
    // Seed with the p-part of a random element.
    Group s = trivial_group(g.degree());
    for (unsigned tries = 0; tries < 256 && s.is_trivial(); ++tries)
      s = join(s, p_element_of(g.random_element(rng), p));
    if (s.is_trivial()) continue;

    // Climb: while |S| is short of the full p-part, look for p-elements that
    // normalize S, inside centralizers of central elements of S or among
    // random conjugates of S's own generators.
    bool stuck = false;
    while (s.order() < target && !stuck) {
      stuck = true;
      // A p-element of the centralizer of a nontrivial element of S extends
      // S whenever it is new: it normalizes <S, itself> stepwise.
      const std::vector<Perm> snapshot = s.generators();
      for (const Perm& x : snapshot) {
        Group c = centralizer(g, x);
        for (unsigned tries = 0; tries < 64; ++tries) {
          Perm q = p_element_of(c.random_element(rng), p);
          if (q.is_identity() || s.contains(q)) continue;
          Group t = join(s, q);
          if (is_pi_number(t.order(), PrimeSet({p}))) {
            s = t;
            stuck = false;
            break;
          }
        }
        if (!stuck) break;
      }
      if (!stuck) continue;
      // Random sampling of normalizing p-elements.
      for (unsigned tries = 0; tries < 512; ++tries) {
        Perm q = p_element_of(g.random_element(rng), p);
        if (q.is_identity() || s.contains(q)) continue;
        Group t = join(s, q);
        if (is_pi_number(t.order(), PrimeSet({p}))) {
          s = t;
          stuck = false;
          break;
        }
      }
    }
    if (s.order() == target) return s;
  }
  throw std::runtime_error("sylow subgroup search budget exhausted");
}

Group normal_closure(const Group& g, const Group& s) {
  if (!s.is_subgroup_of(g)) throw std::invalid_argument("not a subgroup");
  Group closure(g.degree(), s.generators());
  // Worklist: every generator ever added gets its conjugates examined.
  std::vector<Perm> queue = s.generators();
  while (!queue.empty()) {
    Perm h = std::move(queue.back());
    queue.pop_back();
    for (const Perm& x : g.generators()) {
      Perm c = conjugate(h, x);
      if (!closure.contains(c)) {
        closure = join(closure, c);
        queue.push_back(std::move(c));
      }
    }
  }
  return closure;
}

namespace {

// Derived subgroup: normal closure of the generator commutators.
Group derived_subgroup(const Group& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(c);
    }
  if (comms.empty()) return trivial_group(g.degree());
  return normal_closure(g, Group(g.degree(), std::move(comms)));
}

}  // namespace

std::vector<Group> derived_series(const Group& g) {
  std::vector<Group> series{g};
  while (true) {
    Group next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(next);
    if (next.is_trivial()) break;
  }
  return series;
}

unsigned derived_length(const Group& g) {
  std::vector<Group> series = derived_series(g);
  if (!series.back().is_trivial())
    throw std::invalid_argument("derived length is undefined for nonsolvable groups");
  return static_cast<unsigned>(series.size()) - 1;
}

bool is_solvable(const Group& g) { return derived_series(g).back().is_trivial(); }

}  // namespace hallint
