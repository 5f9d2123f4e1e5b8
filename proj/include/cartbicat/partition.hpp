#pragma once

#include <numeric>
#include <vector>

#include "cartbicat/fin_function.hpp"

namespace cartbicat {

constexpr Element kUndefined = FinPartialFunction::kUndefined;

/// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Restricted-growth labels: blocks numbered in order of their least element.
/// Entries equal to kUndefined stay undefined.
std::vector<Element> canonical_labels(const std::vector<Element>& labels);

/// Restricted-growth labels for the classes of `sets` restricted to `elements`.
/// A class containing `bottom` (if given) is reported as kUndefined.
std::vector<Element> labels_from_sets(DisjointSets& sets, const std::vector<std::size_t>& elements,
                                      std::size_t bottom = static_cast<std::size_t>(-1));

/// Number of blocks of a labelling (undefined entries ignored).
std::size_t block_count(const std::vector<Element>& labels);

/// All set partitions of {0..n-1} as restricted-growth strings, lexicographic.
std::vector<std::vector<Element>> all_set_partitions(std::size_t n);

/// All partial partitions: a subset (undefined elsewhere) with a partition on it.
std::vector<std::vector<Element>> all_partial_partitions(std::size_t n);

/// True iff every block of `fine` lies inside a block of `coarse`.
bool refines(const std::vector<Element>& fine, const std::vector<Element>& coarse);

}  // namespace cartbicat
