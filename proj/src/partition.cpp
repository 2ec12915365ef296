#include "hallint/partition.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hallint/stab_chain.hpp"

namespace hallint {

namespace {

// Canonical relabeling: classes numbered in order of first occurrence.
std::vector<unsigned> canonical_labels(const std::vector<unsigned>& labels) {
  std::vector<int> seen(labels.size(), -1);
  std::vector<unsigned> out(labels.size());
  unsigned next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= labels.size()) throw std::invalid_argument("class label out of range");
    if (seen[labels[i]] < 0) seen[labels[i]] = static_cast<int>(next++);
    out[i] = static_cast<unsigned>(seen[labels[i]]);
  }
  return out;
}

}  // namespace

void PointPartition::rebuild_parts() {
  unsigned m = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
  parts_.assign(m, {});
  for (unsigned i = 0; i < degree_; ++i) parts_[labels_[i]].push_back(i + 1);
}

PointPartition::PointPartition(unsigned degree, std::vector<std::vector<unsigned>> parts) {
  if (degree == 0) throw std::invalid_argument("partition degree must be positive");
  degree_ = degree;
  std::vector<int> lbl(degree, -1);
  unsigned covered = 0;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    if (parts[c].empty()) throw std::invalid_argument("partition class is empty");
    for (unsigned p : parts[c]) {
      if (p == 0 || p > degree) throw std::invalid_argument("point out of range in partition");
      if (lbl[p - 1] >= 0) throw std::invalid_argument("point repeated in partition");
      lbl[p - 1] = static_cast<int>(c);
      ++covered;
    }
  }
  if (covered != degree) throw std::invalid_argument("partition does not cover all points");
  labels_ = canonical_labels(std::vector<unsigned>(lbl.begin(), lbl.end()));
  rebuild_parts();
}

PointPartition PointPartition::from_labels(const std::vector<unsigned>& labels) {
  if (labels.empty()) throw std::invalid_argument("partition degree must be positive");
  PointPartition p;
  p.degree_ = static_cast<unsigned>(labels.size());
  p.labels_ = canonical_labels(labels);
  p.rebuild_parts();
  return p;
}

PointPartition PointPartition::parse(const std::string& text, unsigned degree) {
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> current;
  std::string digits;
  auto flush_point = [&] {
    if (digits.empty()) return;
    current.push_back(static_cast<unsigned>(std::stoul(digits)));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c == ',' || c == ' ' || c == '\t') {
      flush_point();
    } else if (c == '|') {
      flush_point();
      parts.push_back(std::move(current));
      current.clear();
    } else {
      throw std::invalid_argument("malformed partition text");
    }
  }
  flush_point();
  parts.push_back(std::move(current));
  return PointPartition(degree, std::move(parts));
}

unsigned PointPartition::label_of(unsigned point) const {
  if (point == 0 || point > degree_) throw std::invalid_argument("point out of range");
  return labels_[point - 1];
}

std::string PointPartition::to_string() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < parts_.size(); ++c) {
    if (c) out << " | ";
    for (std::size_t i = 0; i < parts_[c].size(); ++i) {
      if (i) out << ',';
      out << parts_[c][i];
    }
  }
  return out.str();
}

namespace {

// Backtrack over a stabilizer chain with base 1..n; every point's image is
// constrained to stay inside its own class.
struct WitnessSearch {
  const std::vector<ChainLevel>& levels;
  const std::vector<unsigned>& lbl;

  std::optional<Perm> dfs(std::size_t level, const Perm& t) const {
    if (level == levels.size()) {
      if (!t.is_identity()) return t;
      return std::nullopt;
    }
    const ChainLevel& lv = levels[level];
    for (unsigned q : lv.orbit) {
      unsigned y = t[q];  // image of this level's base point
      if (lbl[y - 1] != lbl[lv.base_point - 1]) continue;
      if (auto r = dfs(level + 1, lv.rep_to(q) * t)) return r;
    }
    return std::nullopt;
  }
};

std::vector<unsigned> natural_base(unsigned degree) {
  std::vector<unsigned> base(degree);
  for (unsigned i = 0; i < degree; ++i) base[i] = i + 1;
  return base;
}

}  // namespace

std::optional<Perm> partition_stabilizer_witness(const Group& l, const PointPartition& p) {
  if (l.degree() != p.degree()) throw std::invalid_argument("degree mismatch");
  if (l.is_trivial()) return std::nullopt;
  if (p.num_parts() == p.degree()) return std::nullopt;  // all singletons
  StabChain chain = StabChain::build_with_base(l.degree(), l.generators(), natural_base(l.degree()));
  WitnessSearch search{chain.levels(), p.labels()};
  return search.dfs(0, Perm(l.degree()));
}

bool is_asymmetric(const Group& l, const PointPartition& p) {
  return !partition_stabilizer_witness(l, p).has_value();
}

namespace {

// Restricted-growth strings with at most `cap` values, enumerated in
// DECREASING lexicographic order (finest partitions first).  a[0] is always
// 0; a[i] <= min(max(a[0..i-1]) + 1, cap - 1).
struct RgsEnumerator {
  std::vector<unsigned> a;
  unsigned cap;
  bool done = false;

  RgsEnumerator(unsigned n, unsigned cap_) : a(n), cap(cap_) {
    for (unsigned i = 0; i < n; ++i) a[i] = std::min(i, cap - 1);
  }

  // Advance to the next-smaller valid string; false when exhausted.
  bool next() {
    const std::size_t n = a.size();
    for (std::size_t i = n; i-- > 1;) {
      if (a[i] > 0) {
        --a[i];
        // Everything to the right goes to its maximum.
        unsigned mx = 0;
        for (std::size_t j = 1; j <= i; ++j) mx = std::max(mx, a[j]);
        for (std::size_t j = i + 1; j < n; ++j) {
          a[j] = std::min(mx + 1, cap - 1);
          mx = std::max(mx, a[j]);
        }
        return true;
      }
    }
    done = true;
    return false;
  }
};

struct ExhaustiveShared {
  std::atomic<std::uint64_t> best_index{UINT64_MAX};
  std::atomic<std::uint64_t> total{0};
  std::mutex mtx;
  std::vector<unsigned> best_labels;
};

void exhaustive_worker(const Group& l, unsigned cap, unsigned worker, unsigned num_workers,
                       ExhaustiveShared& shared) {
  RgsEnumerator rgs(l.degree(), cap);
  std::uint64_t index = 0;
  do {
    if (index > shared.best_index.load(std::memory_order_relaxed)) return;
    if (index % num_workers == worker) {
      PointPartition p = PointPartition::from_labels(rgs.a);
      if (is_asymmetric(l, p)) {
        std::uint64_t prev = shared.best_index.load();
        while (index < prev && !shared.best_index.compare_exchange_weak(prev, index)) {
        }
        if (index < prev || prev == UINT64_MAX) {
          std::lock_guard<std::mutex> lock(shared.mtx);
          if (index == shared.best_index.load()) shared.best_labels = rgs.a;
        }
        return;
      }
    }
    ++index;
  } while (rgs.next());
  shared.total.store(std::max(shared.total.load(), index));
}

PartitionSearchResult exhaustive_search(const Group& l, unsigned cap, unsigned workers) {
  ExhaustiveShared shared;
  if (workers <= 1) {
    exhaustive_worker(l, cap, 0, 1, shared);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(exhaustive_worker, std::cref(l), cap, w, workers, std::ref(shared));
    for (auto& t : pool) t.join();
  }
  PartitionSearchResult result;
  result.exhaustive = true;
  std::uint64_t best = shared.best_index.load();
  if (best != UINT64_MAX) {
    result.status = SearchStatus::found;
    result.partition = PointPartition::from_labels(shared.best_labels);
    result.examined = best + 1;
  } else {
    result.status = SearchStatus::none;
    result.examined = shared.total.load();
  }
  return result;
}

PartitionSearchResult randomized_search(const Group& l, unsigned cap, std::uint64_t seed,
                                        std::uint64_t budget) {
  const unsigned n = l.degree();
  std::mt19937_64 rng(seed);
  PartitionSearchResult result;
  result.exhaustive = false;
  std::uint64_t tested = 0;
  while (tested < budget) {
    std::vector<unsigned> labels(n);
    for (unsigned i = 0; i < n; ++i) labels[i] = static_cast<unsigned>(rng() % cap);
    // Greedy repair: split a class to break the current witness.
    for (unsigned step = 0; step < 4 * n && tested < budget; ++step) {
      PointPartition p = PointPartition::from_labels(labels);
      ++tested;
      auto witness = partition_stabilizer_witness(l, p);
      if (!witness) {
        result.status = SearchStatus::found;
        result.partition = std::move(p);
        result.examined = tested;
        return result;
      }
      unsigned moved = witness->smallest_moved_point();
      labels[moved - 1] = (labels[moved - 1] + 1 + static_cast<unsigned>(rng() % (cap - 1))) % cap;
    }
  }
  result.status = SearchStatus::inconclusive;
  result.examined = tested;
  return result;
}

}  // namespace

PartitionSearchResult find_asymmetric_partition(const Group& l, const PartitionSearchOptions& opts) {
  if (opts.max_parts == 0) throw std::invalid_argument("max_parts must be positive");
  const unsigned n = l.degree();
  const unsigned cap = std::min(opts.max_parts, n);
  if (cap == 1) {
    // Only the one-class partition is available.
    PointPartition whole = PointPartition::from_labels(std::vector<unsigned>(n, 0));
    PartitionSearchResult result;
    result.exhaustive = true;
    result.examined = 1;
    if (is_asymmetric(l, whole)) {
      result.status = SearchStatus::found;
      result.partition = std::move(whole);
    } else {
      result.status = SearchStatus::none;
    }
    return result;
  }
  if (n <= 12) return exhaustive_search(l, cap, std::max(1u, opts.workers));
  return randomized_search(l, cap, opts.seed, opts.budget);
}

}  // namespace hallint
