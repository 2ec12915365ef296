#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hallint {

// A permutation of {1,...,n} stored as an image table.  Points act on the
// right throughout: i^(pq) = (i^p)^q, and h^x denotes x^-1 h x.  All points
// in the public interface are 1-based.
class Perm {
public:
  explicit Perm(unsigned degree);               // identity
  explicit Perm(std::vector<unsigned> images);  // images[i] = image of i+1

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }

  // Image of a 1-based point.
  unsigned operator[](unsigned point) const { return img_[point - 1]; }

  bool is_identity() const;
  bool moves(unsigned point) const { return img_[point - 1] != point; }
  unsigned smallest_moved_point() const;  // 0 when the identity
  std::uint64_t order() const;            // lcm of the cycle lengths
  std::vector<unsigned> cycle_type() const;  // lengths > 1, ascending

  Perm inverse() const;

  // Composition in right-action order: apply a first, then b.
  friend Perm operator*(const Perm& a, const Perm& b);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  const std::vector<unsigned>& images() const { return img_; }

private:
  std::vector<unsigned> img_;
};

// x^-1 h x.
Perm conjugate(const Perm& h, const Perm& x);

// Parse cycle notation, e.g. "(1,2,3)(4,5)".  Cycles need not be disjoint;
// a left-to-right product is taken.  "" and "()" denote the identity.
Perm parse_perm(std::string_view text, unsigned degree);

// Disjoint cycle form, cycles ordered by smallest moved point; "()" for the
// identity.
std::string cycle_string(const Perm& p);

std::ostream& operator<<(std::ostream& os, const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace hallint
