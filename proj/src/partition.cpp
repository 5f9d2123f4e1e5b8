#include "cartbicat/partition.hpp"

#include <algorithm>
#include <unordered_map>

namespace cartbicat {

std::vector<Element> canonical_labels(const std::vector<Element>& labels) {
  std::unordered_map<Element, Element> renumber;
  std::vector<Element> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == kUndefined) {
      out[i] = kUndefined;
      continue;
    }
    auto [it, inserted] = renumber.try_emplace(labels[i], static_cast<Element>(renumber.size()));
    out[i] = it->second;
  }
  return out;
}

std::vector<Element> labels_from_sets(DisjointSets& sets, const std::vector<std::size_t>& elements,
                                      std::size_t bottom) {
  std::size_t bottom_root = bottom < sets.size() ? sets.find(bottom) : static_cast<std::size_t>(-1);
  std::unordered_map<std::size_t, Element> renumber;
  std::vector<Element> out(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::size_t r = sets.find(elements[i]);
    if (r == bottom_root) {
      out[i] = kUndefined;
      continue;
    }
    auto [it, inserted] = renumber.try_emplace(r, static_cast<Element>(renumber.size()));
    out[i] = it->second;
  }
  return out;
}

std::size_t block_count(const std::vector<Element>& labels) {
  std::size_t k = 0;
  for (Element l : labels)
    if (l != kUndefined) k = std::max<std::size_t>(k, l + 1);
  return k;
}

std::vector<std::vector<Element>> all_set_partitions(std::size_t n) {
  std::vector<std::vector<Element>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Element> a(n, 0);
  std::vector<Element> maxprefix(n, 0);  // max of a[0..i-1]
  while (true) {
    out.push_back(a);
    std::size_t i = n - 1;
    while (i > 0 && a[i] > maxprefix[i]) --i;
    if (i == 0) return out;
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxprefix[j] = std::max(maxprefix[j - 1], a[j - 1]);
    }
  }
}

std::vector<std::vector<Element>> all_partial_partitions(std::size_t n) {
  std::vector<std::vector<Element>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    for (const auto& p : all_set_partitions(members.size())) {
      std::vector<Element> labels(n, kUndefined);
      for (std::size_t k = 0; k < members.size(); ++k) labels[members[k]] = p[k];
      out.push_back(std::move(labels));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool refines(const std::vector<Element>& fine, const std::vector<Element>& coarse) {
  std::unordered_map<Element, Element> image;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    if (fine[i] == kUndefined) continue;
    if (coarse[i] == kUndefined) return false;
    auto [it, inserted] = image.try_emplace(fine[i], coarse[i]);
    if (!inserted && it->second != coarse[i]) return false;
  }
  return true;
}

}  // namespace cartbicat
