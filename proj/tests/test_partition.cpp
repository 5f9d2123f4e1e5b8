#include <doctest.h>

#include <set>

#include "cartbicat/equivalence.hpp"
#include "cartbicat/partition.hpp"

using namespace cartbicat;

namespace {

// Bell numbers from the triangle, independent of the enumerator.
std::vector<std::size_t> bell_triangle(std::size_t n) {
  std::vector<std::size_t> bell{1};
  std::vector<std::size_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

}  // namespace

TEST_CASE("set partitions are counted by the Bell numbers") {
  auto bell = bell_triangle(7);
  for (std::size_t n = 0; n <= 7; ++n) CHECK(all_set_partitions(n).size() == bell[n]);
}

TEST_CASE("partial partitions are counted by Bell(n+1)") {
  auto bell = bell_triangle(7);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(all_partial_partitions(n).size() == bell[n + 1]);
}

TEST_CASE("restricted growth strings are canonical and distinct") {
  auto parts = all_set_partitions(4);
  std::set<std::vector<Element>> unique(parts.begin(), parts.end());
  CHECK(unique.size() == parts.size());
  for (const auto& p : parts) CHECK(canonical_labels(p) == p);
  CHECK(canonical_labels({2, 2, 0, 1}) == std::vector<Element>{0, 0, 1, 2});
}

TEST_CASE("union find merges classes") {
  DisjointSets s(5);
  CHECK(s.unite(0, 3));
  CHECK(s.unite(3, 4));
  CHECK_FALSE(s.unite(0, 4));
  CHECK(s.find(4) == s.find(0));
  CHECK(s.find(1) != s.find(2));
}

TEST_CASE("refinement") {
  CHECK(refines({0, 1, 2}, {0, 0, 1}));
  CHECK_FALSE(refines({0, 0, 1}, {0, 1, 2}));
  CHECK(block_count({0, 1, kUndefined, 1}) == 2);
}

TEST_CASE("boundary partitions print their blocks") {
  auto p = Partition::from_unions(2, 1, {{0, 2}});
  CHECK(format_partition(p) == "{{d0,c0},{d1}}");
  CHECK(p.blocks() == 2);
}
