#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hallint/group.hpp"

namespace hallint {

// A partition of {1..n} into labeled classes.  Stored canonically: classes
// are numbered by first occurrence, so classes are ordered by their smallest
// element.  A group element "fixes" the partition when it maps every class
// onto itself (classes are not interchangeable).
class PointPartition {
 public:
  PointPartition(unsigned degree, std::vector<std::vector<unsigned>> parts);

  // labels[i] is the 0-based class of point i+1; relabeled canonically.
  static PointPartition from_labels(const std::vector<unsigned>& labels);

  // Parse "1 | 2,3,4,5" (classes joined by '|', points by ',').
  static PointPartition parse(const std::string& text, unsigned degree);

  unsigned degree() const { return degree_; }
  unsigned num_parts() const { return static_cast<unsigned>(parts_.size()); }
  const std::vector<std::vector<unsigned>>& parts() const { return parts_; }
  unsigned label_of(unsigned point) const;
  const std::vector<unsigned>& labels() const { return labels_; }
  std::string to_string() const;

  bool operator==(const PointPartition& other) const = default;

 private:
  PointPartition() = default;
  void rebuild_parts();

  unsigned degree_ = 0;
  std::vector<unsigned> labels_;
  std::vector<std::vector<unsigned>> parts_;
};

// A nonidentity element of l fixing every class of p setwise, if one exists.
std::optional<Perm> partition_stabilizer_witness(const Group& l, const PointPartition& p);

// True when only the identity of l fixes every class of p setwise.
bool is_asymmetric(const Group& l, const PointPartition& p);

enum class SearchStatus { found, none, inconclusive };

struct PartitionSearchOptions {
  unsigned max_parts = 5;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint64_t budget = 200000;  // label vectors tested in the randomized regime
};

struct PartitionSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<PointPartition> partition;
  // For a found/none result from the exhaustive regime: position of the
  // success in canonical order / total count.  For the randomized regime:
  // number of vectors actually tested.
  std::uint64_t examined = 0;
  bool exhaustive = false;  // when true, status none is a proof of nonexistence
};

// Search for a partition with at most max_parts classes fixed only by the
// identity of l.  Degree <= 12: exhaustive over canonically-labeled vectors,
// finest partitions first (decreasing lexicographic restricted-growth
// strings); the result is the first success in that canonical order, and is
// deterministic for any worker count.  Larger degrees: seeded
// randomized-then-greedy search; a miss is inconclusive.
PartitionSearchResult find_asymmetric_partition(const Group& l,
                                                const PartitionSearchOptions& opts = {});

}  // namespace hallint
