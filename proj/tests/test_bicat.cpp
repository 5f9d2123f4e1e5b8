#include <doctest.h>

#include "cartbicat/bicat.hpp"
#include "cartbicat/bridges.hpp"
#include "cartbicat/equivalence.hpp"
#include "cartbicat/reconstruct.hpp"
#include "cartbicat/relation.hpp"

using namespace cartbicat;

TEST_CASE("derived operations in rel") {
  RelModel rel;
  auto r = Relation::from_bits(2, 3, "011100");
  CHECK(opposite_via_compact(rel, r) == rel.opposite(r));
  CHECK(top(rel, 2, 2).bits() == "1111");
  CHECK(meet(rel, r, Relation::from_bits(2, 3, "110100")).bits() == "010100");
  CHECK(cup(rel, 2).bits() == "1001");
  CHECK(cap(rel, 2).bits() == "1001");
  CHECK(cap(rel, 2).dom() == 4);
}

TEST_CASE("predicates agree with their definitions in rel") {
  RelModel rel;
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; y <= 2; ++y)
      for (const auto& r : rel.homset(x, y)) {
        bool sv = true, tot = true, inj = true, sur = true;
        for (Element i = 0; i < x; ++i) {
          std::size_t n = 0;
          for (Element j = 0; j < y; ++j) n += r(i, j);
          sv = sv && n <= 1;
          tot = tot && n >= 1;
        }
        for (Element j = 0; j < y; ++j) {
          std::size_t n = 0;
          for (Element i = 0; i < x; ++i) n += r(i, j);
          inj = inj && n <= 1;
          sur = sur && n >= 1;
        }
        auto p = predicates(rel, r);
        CHECK(p.single_valued == sv);
        CHECK(p.total == tot);
        CHECK(p.injective == inj);
        CHECK(p.surjective == sur);
        CHECK(predicates_via_opposite(rel, r) == p);
      }
}

TEST_CASE("maps are functions with unique right adjoints") {
  RelModel rel;
  MapCategory<RelModel> mc(rel, 3);
  for (Object x = 0; x <= 3; ++x)
    for (Object y = 0; y <= 3; ++y) {
      std::size_t n = 1;
      for (Object i = 0; i < x; ++i) n *= y;
      CHECK(mc.count(x, y) == n);
    }
  auto f = Relation::graph(FinFunction(2, 2, {1, 1}));
  auto adj = right_adjoint_check(rel, f);
  CHECK(adj.op_is_adjoint);
  CHECK(adj.unique);
}

TEST_CASE("maps of erel are functions in the other direction") {
  ERelModel erel;
  MapCategory<ERelModel> mc(erel, 2);
  CHECK(mc.count(2, 1) == 2);
  CHECK(mc.count(1, 2) == 1);
  CHECK(mc.count(1, 0) == 1);
  CHECK(mc.count(0, 1) == 0);
  CHECK(map_category_check(erel, mc).ok());
}

TEST_CASE("choice verdicts") {
  RelModel rel;
  ERelModel erel;
  PERelModel perel;
  FrobModel frob;
  CHECK(check_choice(MapCategory<RelModel>(rel, 2)).ok());
  CHECK(check_choice(MapCategory<PERelModel>(perel, 2)).ok());
  CHECK(check_choice(MapCategory<FrobModel>(frob, 2)).ok());
  auto e = check_choice(MapCategory<ERelModel>(erel, 2));
  CHECK(e.status == Status::Fail);
  CHECK(e.location == "hom(0,1)");
}

TEST_CASE("enough maps and factorisations") {
  ERelModel erel;
  CHECK(check_enough_maps(erel, 2).ok());
  for (const auto& r : erel.homset(1, 2)) {
    auto fast = comap_map_factorize_fast(erel, r);
    REQUIRE(fast);
    CHECK(erel.compose(erel.opposite(fast->f), fast->g) == r);
    auto least = comap_map_factorize(erel, r, 4);
    REQUIRE(least);
    CHECK(least->pivot <= fast->pivot);
  }
  RelModel rel;
  auto t = comap_map_factorize(rel, top(rel, 2, 2), 4);
  REQUIRE(t);
  CHECK(t->pivot == 4);
}

TEST_CASE("tameness and its negative control") {
  RelModel rel;
  CHECK(check_tame(MapCategory<RelModel>(rel, 2)).ok());
  RelReversedOrder reversed;
  CHECK_FALSE(check_tame(MapCategory<RelReversedOrder>(reversed, 2)).ok());
  ERelModel erel;
  auto e = check_tame(MapCategory<ERelModel>(erel, 2));
  CHECK(e.status == Status::Fail);
}

TEST_CASE("reconstruction of rel from its maps") {
  RelModel rel;
  auto r = reconstruct(rel, 2, Construction::SpanTilde);
  CHECK(r.isomorphism());
  REQUIRE(!r.homsets.empty());
  CHECK(r.homsets.back().source == 16);
  CHECK(r.homsets.back().target == 16);
}

TEST_CASE("erel needs surjective covers") {
  ERelModel erel;
  auto s = reconstruct(erel, 2, Construction::SpanS);
  CHECK(s.isomorphism());
  CHECK(s.homsets.back().target == 15);
  auto t = reconstruct(erel, 1, Construction::SpanTilde);
  CHECK_FALSE(t.isomorphism());
  auto* b = t.find("bijective");
  REQUIRE(b);
  CHECK(b->location == "hom(0,0)");
  auto* f = t.find("faithful-iff-reflects");
  REQUIRE(f);
  CHECK(f->ok());
}
