#include <doctest.h>

#include "cartbicat/witness_oracle.hpp"

using namespace cartbicat;

TEST_CASE("cover systems satisfy their axioms") {
  CHECK(validate_cover_system(split_epis<FinSet>(), 2).ok());
  CHECK(validate_cover_system(surjections(), 2).ok());
  CHECK(validate_cover_system(regular_epis(), 2).ok());
  CHECK(validate_cover_system(split_epis<FinSetOp>(), 2).ok());
  CHECK(validate_cover_system(injections(), 2).ok());
  auto ids = validate_cover_system(identities<FinSet>(), 2);
  REQUIRE_FALSE(ids.ok());
  CHECK_FALSE(split_epi_not_in(identities<FinSet>(), 2) == std::nullopt);
  CHECK(split_epi_not_in(surjections(), 2) == std::nullopt);
}

TEST_CASE("padding the apex does not change the class") {
  auto S = split_epis<FinSet>();
  Span<FinSet> s{1, FinFunction(1, 2, {1}), FinFunction(1, 1, {0})};
  Span<FinSet> padded{2, FinFunction(2, 2, {1, 1}), FinFunction(2, 1, {0, 0})};
  CHECK(span_equiv(s, padded, S));
  CHECK(normalize(padded, S) == s);
}

TEST_CASE("bones collapse in cospans but not with injection covers") {
  Span<FinSetOp> bone{1, {FinFunction::empty(1)}, {FinFunction::empty(1)}};
  Span<FinSetOp> none{0, {FinFunction::empty(0)}, {FinFunction::empty(0)}};
  CHECK(span_leq(bone, none, split_epis<FinSetOp>()).has_value());
  CHECK_FALSE(span_leq(none, bone, split_epis<FinSetOp>()).has_value());
  CHECK(span_equiv(bone, none, injections()));
  // two bones are one bone under either cover system
  Span<FinSetOp> two{2, {FinFunction::empty(2)}, {FinFunction::empty(2)}};
  CHECK(span_equiv(bone, two, split_epis<FinSetOp>()));
}

TEST_CASE("the fast order agrees with the subobject search and brute force") {
  for (unsigned seed : {0u, 1u}) {
    auto a = cross_check_span_leq(split_epis<FinSet>(), 300, seed);
    auto b = cross_check_span_leq(split_epis<FinSetOp>(), 300, seed);
    auto c = cross_check_span_leq(injections(), 300, seed);
    CHECK(a.disagreements == 0);
    CHECK(b.disagreements == 0);
    CHECK(c.disagreements == 0);
    CHECK(a.positives > 0);
  }
}

TEST_CASE("the witness oracle needs the widened pivot bound over FinSet^op") {
  Span<FinSetOp> s{3, {FinFunction::empty(3)}, {FinFunction::empty(3)}};
  Span<FinSetOp> t{0, {FinFunction::empty(0)}, {FinFunction::empty(0)}};
  auto S = split_epis<FinSetOp>();
  CHECK(default_pivot_bound(3, 0) == 5);
  CHECK(brute_force_leq(s, t, S, default_pivot_bound(3, 0)) == span_leq(s, t, S).has_value());
}

TEST_CASE("span composition is associative on small spans") {
  SpanModel<FinSet> m(split_epis<FinSet>(), "span-finset");
  const auto& a = m.homset(1, 2);
  const auto& b = m.homset(2, 1);
  const auto& c = m.homset(1, 2);
  for (const auto& s : a)
    for (const auto& t : b)
      for (const auto& u : c) CHECK(m.compose(m.compose(s, t), u) == m.compose(s, m.compose(t, u)));
}

TEST_CASE("regular relations") {
  RegularRelModel rel;
  SpanModel<FinSet> reg(regular_epis(), "span-s/regepi");
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; y <= 2; ++y) CHECK(rel.homset(x, y) == reg.homset(x, y));
}
