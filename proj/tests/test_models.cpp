#include <doctest.h>

#include <map>
#include <set>

#include "cartbicat/bridges.hpp"
#include "cartbicat/equivalence.hpp"
#include "cartbicat/relation.hpp"
#include "cartbicat/spancat.hpp"

using namespace cartbicat;

namespace {

std::size_t bell(std::size_t n) {
  // B(n+1) = sum C(n,k) B(k)
  std::vector<std::size_t> b{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t s = 0, c = 1;
    for (std::size_t k = 0; k <= i; ++k) {
      s += c * b[k];
      c = c * (i - k) / (k + 1);
    }
    b.push_back(s);
  }
  return b[n];
}

struct Cospan {
  Object apex;
  FinFunction left, right;
};

bool mediates(const Cospan& s, const Cospan& t) {
  for (const auto& alpha : all_functions(s.apex, t.apex))
    if (compose(s.left, alpha) == t.left && compose(s.right, alpha) == t.right) return true;
  return false;
}

// Cospans x -> A <- y with A <= max_apex, classified by mutual mediators.
std::size_t cospan_classes(Object x, Object y, Object max_apex) {
  std::vector<Cospan> reps;
  for (Object a = 0; a <= max_apex; ++a)
    for (const auto& l : all_functions(x, a))
      for (const auto& r : all_functions(y, a)) {
        Cospan c{a, l, r};
        bool known = false;
        for (const auto& k : reps)
          if (mediates(c, k) && mediates(k, c)) {
            known = true;
            break;
          }
        if (!known) reps.push_back(c);
      }
  return reps.size();
}

}  // namespace

TEST_CASE("relation homsets have 2^(nm) elements") {
  RelModel rel;
  CHECK(rel.homset(2, 2).size() == 16);
  CHECK(rel.homset(3, 3).size() == 512);
  CHECK(rel.homset(0, 3).size() == 1);
}

TEST_CASE("equivalence relation homsets against Bell numbers") {
  ERelModel erel;
  PERelModel perel;
  CHECK(erel.homset(1, 1).size() == 2);
  CHECK(erel.homset(2, 1).size() == 5);
  CHECK(erel.homset(2, 2).size() == 15);
  CHECK(perel.homset(1, 1).size() == 5);
  for (Object x = 0; x <= 3; ++x)
    for (Object y = 0; x + y <= 4; ++y) {
      CHECK(erel.homset(x, y).size() == bell(x + y));
      CHECK(perel.homset(x, y).size() == bell(x + y + 1));
    }
}

TEST_CASE("frob homsets against brute-force cospan classification") {
  FrobModel frob;
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; x + y <= 2; ++y) CHECK(frob.homset(x, y).size() == cospan_classes(x, y, 4));
  CHECK(frob.homset(0, 0).size() == 2);
  CHECK(frob.homset(1, 1).size() == 2);
}

TEST_CASE("homsets are duplicate free and sorted") {
  ERelModel erel;
  const auto& h = erel.homset(2, 2);
  CHECK(std::is_sorted(h.begin(), h.end()));
  CHECK(std::set<Partition>(h.begin(), h.end()).size() == h.size());
}

TEST_CASE("relation structure") {
  RelModel rel;
  CHECK(rel.format(rel.copy(2)) == "10000001");
  CHECK(rel.compose(rel.copy(2), rel.cocopy(2)) == rel.identity(2));
  CHECK(rel.compose(rel.codiscard(0), rel.discard(0)) == Relation(1, 1));
  auto r = Relation::from_bits(2, 3, "011100");
  CHECK(r.bits() == "011100");
  CHECK(rel.opposite(r).bits() == "011010");
  CHECK(rel.symmetry(2, 2).bits() == "1000001001000001");
}

TEST_CASE("span classes of finite sets are relations") {
  SpanModel<FinSet> tilde(split_epis<FinSet>(), "span-finset");
  RelModel rel;
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; y <= 2; ++y) {
      std::set<Relation> image;
      for (const auto& s : tilde.homset(x, y)) image.insert(span_to_rel(s));
      CHECK(image.size() == tilde.homset(x, y).size());
      CHECK(image.size() == rel.homset(x, y).size());
      for (const auto& s : tilde.homset(x, y))
        for (const auto& t : tilde.homset(x, y))
          CHECK(tilde.leq(s, t) == rel.leq(span_to_rel(s), span_to_rel(t)));
    }
  const auto& a = tilde.homset(1, 2);
  const auto& b = tilde.homset(2, 2);
  for (const auto& s : a)
    for (const auto& t : b)
      CHECK(span_to_rel(tilde.compose(s, t)) == rel.compose(span_to_rel(s), span_to_rel(t)));
}

TEST_CASE("injection covers of cospans give equivalence relations") {
  auto S = injections();
  SpanModel<FinSetOp> spans(S, "span-s/inj");
  ERelModel erel;
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; y <= 2; ++y) {
      std::set<Partition> image;
      for (const auto& s : spans.homset(x, y)) image.insert(spanclass_to_erel(s, S));
      CHECK(image.size() == spans.homset(x, y).size());
      CHECK(image.size() == erel.homset(x, y).size());
    }
  for (const auto& s : spans.homset(1, 2))
    for (const auto& t : spans.homset(2, 1))
      CHECK(spanclass_to_erel(spans.compose(s, t), S) ==
            erel.compose(spanclass_to_erel(s, S), spanclass_to_erel(t, S)));
  CHECK_THROWS_AS(spanclass_to_erel(spans.identity(1), split_epis<FinSetOp>()), CategoryError);
}

TEST_CASE("forgetting isolated components identifies only the bone") {
  FrobModel frob;
  ERelModel erel;
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; y <= 2; ++y) {
      std::map<Partition, int> fibres;
      for (const auto& r : frob.homset(x, y)) ++fibres[r.part];
      CHECK(fibres.size() == erel.homset(x, y).size());
      for (const auto& [p, n] : fibres) {
        if (x + y == 0)
          CHECK(n == 2);
        else
          CHECK(n == 1);
      }
    }
  auto bone = frob.compose(frob.codiscard(1), frob.discard(1));
  CHECK(bone.isolated);
  CHECK_FALSE(bone == frob.identity(0));
  CHECK(erel.compose(erel.codiscard(1), erel.discard(1)) == erel.identity(0));
}

TEST_CASE("cospans of finite sets are frob") {
  SpanModel<FinSetOp> cospans(split_epis<FinSetOp>(), "cospan-finset");
  FrobModel frob;
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; y <= 2; ++y) {
      std::set<FrobMorphism> image;
      for (const auto& s : cospans.homset(x, y)) image.insert(cospan_to_frob(s));
      CHECK(image.size() == frob.homset(x, y).size());
      CHECK(cospans.homset(x, y).size() == frob.homset(x, y).size());
    }
}
