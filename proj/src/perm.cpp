#include "hallint/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hallint {

Perm::Perm(unsigned degree) : img_(degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  std::iota(img_.begin(), img_.end(), 1u);
}

Perm::Perm(std::vector<unsigned> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(img_.size(), false);
  for (unsigned v : img_) {
    if (v < 1 || v > img_.size())
      throw std::invalid_argument("point out of range in image table");
    if (seen[v - 1])
      throw std::invalid_argument("image table is not a bijection");
    seen[v - 1] = true;
  }
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < img_.size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

unsigned Perm::smallest_moved_point() const {
  for (unsigned i = 0; i < img_.size(); ++i)
    if (img_[i] != i + 1) return i + 1;
  return 0;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> done(img_.size(), false);
  for (unsigned s = 1; s <= img_.size(); ++s) {
    if (done[s - 1]) continue;
    std::uint64_t len = 0;
    unsigned x = s;
    do {
      done[x - 1] = true;
      x = img_[x - 1];
      ++len;
    } while (x != s);
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> lens;
  std::vector<bool> done(img_.size(), false);
  for (unsigned s = 1; s <= img_.size(); ++s) {
    if (done[s - 1]) continue;
    unsigned len = 0;
    unsigned x = s;
    do {
      done[x - 1] = true;
      x = img_[x - 1];
      ++len;
    } while (x != s);
    if (len > 1) lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(img_.size());
  for (unsigned i = 0; i < img_.size(); ++i) inv[img_[i] - 1] = i + 1;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<unsigned> img(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) img[i] = b.img_[a.img_[i] - 1];
  return Perm(std::move(img));
}

Perm conjugate(const Perm& h, const Perm& x) {
  if (h.degree() != x.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  // (x^-1 h x)[i]: chase i back through x, through h, forward through x.
  std::vector<unsigned> img(h.degree());
  for (unsigned i = 1; i <= h.degree(); ++i) img[x[i] - 1] = x[h[i]];
  return Perm(std::move(img));
}

namespace {

void skip_ws(std::string_view text, std::size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

unsigned read_point(std::string_view text, std::size_t& i, unsigned degree) {
  skip_ws(text, i);
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw std::invalid_argument("malformed cycle: expected a point");
  std::uint64_t v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    v = v * 10 + static_cast<unsigned>(text[i] - '0');
    if (v > degree) throw std::invalid_argument("point out of range in cycle");
    ++i;
  }
  if (v < 1) throw std::invalid_argument("point out of range in cycle");
  return static_cast<unsigned>(v);
}

}  // namespace

Perm parse_perm(std::string_view text, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  Perm result(degree);
  std::size_t i = 0;
  skip_ws(text, i);
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("malformed cycle: expected '('");
    ++i;
    skip_ws(text, i);
    std::vector<unsigned> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()": the identity cycle
    } else {
      for (;;) {
        unsigned p = read_point(text, i, degree);
        if (std::find(cycle.begin(), cycle.end(), p) != cycle.end())
          throw std::invalid_argument("repeated point within a cycle");
        cycle.push_back(p);
        skip_ws(text, i);
        if (i >= text.size()) throw std::invalid_argument("malformed cycle: unterminated");
        if (text[i] == ',') {
          ++i;
          continue;
        }
        if (text[i] == ')') {
          ++i;
          break;
        }
        throw std::invalid_argument("malformed cycle: expected ',' or ')'");
      }
    }
    if (cycle.size() > 1) {
      std::vector<unsigned> img(degree);
      std::iota(img.begin(), img.end(), 1u);
      for (std::size_t j = 0; j + 1 < cycle.size(); ++j) img[cycle[j] - 1] = cycle[j + 1];
      img[cycle.back() - 1] = cycle.front();
      result = result * Perm(std::move(img));
    }
    skip_ws(text, i);
  }
  return result;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (unsigned s = 1; s <= p.degree(); ++s) {
    if (done[s - 1] || p[s] == s) continue;
    out += '(';
    unsigned x = s;
    for (;;) {
      done[x - 1] = true;
      out += std::to_string(x);
      x = p[x];
      if (x == s) break;
      out += ',';
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << cycle_string(p); }

std::size_t PermHash::operator()(const Perm& p) const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace hallint
