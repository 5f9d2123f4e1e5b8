#include <doctest.h>

#include <set>

#include "cartbicat/fincat.hpp"

using namespace cartbicat;

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("function enumeration counts m^n") {
  for (Object n = 0; n <= 3; ++n)
    for (Object m = 0; m <= 3; ++m) CHECK(all_functions(n, m).size() == power(m, n));
  CHECK(all_partial_functions(2, 2).size() == 9);
}

TEST_CASE("composition is diagrammatic") {
  FinFunction f(2, 3, {2, 0});
  FinFunction g(3, 2, {1, 1, 0});
  CHECK(compose(f, g) == FinFunction(2, 2, {0, 1}));
  CHECK_THROWS_AS(compose(f, f), CompositionError);
  CHECK_THROWS_AS(FinFunction(1, 1, {1}), ConstructionError);
}

TEST_CASE("products are lexicographic") {
  auto p = FinSet::product(2, 3);
  CHECK(p.apex == 6);
  CHECK(p.first == FinFunction(6, 2, {0, 0, 0, 1, 1, 1}));
  CHECK(p.second == FinFunction(6, 3, {0, 1, 2, 0, 1, 2}));
  auto pair = FinSet::pairing(FinFunction(1, 2, {1}), FinFunction(1, 3, {2}));
  CHECK(pair == FinFunction(1, 6, {5}));
}

TEST_CASE("pullbacks satisfy the universal property on small cones") {
  for (const auto& h : all_functions(2, 2))
    for (const auto& k : all_functions(3, 2)) {
      auto pb = FinSet::pullback(h, k);
      CHECK(compose(pb.first, h) == compose(pb.second, k));
      std::size_t pairs = 0;
      for (Element b = 0; b < 2; ++b)
        for (Element c = 0; c < 3; ++c) pairs += h(b) == k(c);
      CHECK(pb.apex == pairs);
      CHECK(FinSet::is_weak_pullback({pb.first, pb.second, h, k}));
    }
}

TEST_CASE("split epis of finite sets are the surjections") {
  for (const auto& f : all_functions(3, 2)) {
    CHECK(FinSet::is_split_epi(f) == f.is_surjective());
    if (auto s = FinSet::section(f)) CHECK(compose(*s, f) == FinSet::identity(2));
  }
  CHECK_FALSE(FinSet::section(FinFunction(2, 2, {0, 0})).has_value());
}

TEST_CASE("split epi extensions pad an object") {
  auto ext = FinSet::split_epi_extensions(2, 1);
  CHECK(ext.size() == 2);
  for (const auto& e : ext) {
    CHECK(e.dom() == 3);
    CHECK(e.is_surjective());
  }
  CHECK(FinSet::split_epi_extensions(0, 1).empty());
  CHECK(FinSet::split_mono_extensions(0, 2).empty());
}

TEST_CASE("opposite base swaps products and coproducts") {
  auto p = FinSetOp::product(2, 1);
  CHECK(p.apex == 3);
  CHECK(FinSetOp::terminal() == 0);
  // split epis in FinSet^op are the split monos of FinSet
  FinSetOp::Arrow a{FinFunction(1, 2, {1})};
  CHECK(FinSetOp::is_split_epi(a));
  FinSetOp::Arrow empty{FinFunction::empty(1)};
  CHECK_FALSE(FinSetOp::is_split_epi(empty));
}

TEST_CASE("pointed sets have a zero object") {
  CHECK(PointedFinSet::terminal() == PointedFinSet::initial());
  auto u = PointedFinSet::to_terminal(2);
  CHECK_FALSE(u.defined_at(0));
  FinPartialFunction f(2, 1, {0, FinPartialFunction::kUndefined});
  FinPartialFunction g(1, 2, {1});
  CHECK(compose(f, g) == FinPartialFunction(2, 2, {1, FinPartialFunction::kUndefined}));
}

TEST_CASE("jointly monic cones enumerate relations") {
  std::set<std::set<std::pair<Element, Element>>> seen;
  for (const auto& c : FinSet::jointly_monic_cones(2, 2)) {
    std::set<std::pair<Element, Element>> rel;
    for (Element a = 0; a < c.apex; ++a) rel.insert({c.first(a), c.second(a)});
    CHECK(rel.size() == c.apex);
    seen.insert(rel);
  }
  CHECK(seen.size() == 16);
}
