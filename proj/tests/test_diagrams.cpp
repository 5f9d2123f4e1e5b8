#include <doctest.h>

#include "cartbicat/diagrams.hpp"
#include "cartbicat/equivalence.hpp"
#include "cartbicat/relation.hpp"
#include "cartbicat/spancat.hpp"

using namespace cartbicat;

TEST_CASE("tensor binds tighter than sequencing") {
  auto t = parse("cp ; id[1] * dc");
  REQUIRE(t->kind == Term::Kind::Seq);
  CHECK(t->rhs->kind == Term::Kind::Ten);
  CHECK(print(*t) == "cp ; id[1] * dc");
  auto u = parse("(cp ; cc) * dc");
  CHECK(print(*u) == "(cp ; cc) * dc");
}

TEST_CASE("printing round trips") {
  for (const char* src : {"cp ; (cc ; dc)", "id[2] * (sym * cup)", "op(cup ; id[1] * cp)",
                          "rel{(0,1),(1,0)}:2->2 ; cap", "cd ; dc", "rel{}:1->2"}) {
    auto t = parse(src);
    auto again = parse(print(*t));
    CHECK(equal(*t, *again));
  }
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse("cp ;; dc");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(std::string(e.what()) == "expected a term at offset 4");
  }
  CHECK_THROWS_AS(parse("cp ; frob"), ParseError);
  CHECK_THROWS_AS(parse("id[x]"), ParseError);
  CHECK_THROWS_AS(parse("rel{(2,0)}:2->1"), ParseError);
  CHECK_THROWS_AS(parse("(cp"), ParseError);
}

TEST_CASE("arity is checked before evaluation") {
  RelModel rel;
  auto t = parse("cp ; cp");
  CHECK_THROWS_WITH_AS(eval(*t, rel, 1), "cannot compose cp (1,2) with cp (1,2)", ArityError);
  CHECK(arity(*parse("cp ; id[1] * cp"), 2) == Arity{2, 6});
  CHECK(wire_arity(*parse("op(cup)"), 3) == Arity{2, 0});
}

TEST_CASE("special frobenius and snake evaluate to identities") {
  RelModel rel;
  ERelModel erel;
  FrobModel frob;
  for (std::size_t w = 1; w <= 2; ++w) {
    CHECK(eval(*parse("cp ; cc"), rel, w) == rel.identity(w));
    CHECK(eval(*parse("cup * id[1] ; id[1] * cap"), rel, w) == rel.identity(w));
    CHECK(eval(*parse("cp ; cc"), erel, w) == erel.identity(w));
    CHECK(eval(*parse("id[1] * cup ; cap * id[1]"), frob, w) == frob.identity(w));
  }
  CHECK(eval(*parse("cd ; cp"), rel, 2).bits() == "1001");
}

TEST_CASE("relation literals use wires of the chosen width") {
  RelModel rel;
  auto t = parse("rel{(0,1),(1,0)}:2->2 ; cp");
  auto r = eval(*t, rel, 2);
  CHECK(r.dom() == 2);
  CHECK(r.cod() == 4);
  CHECK_THROWS_AS(eval(*parse("rel{}:3->1"), rel, 2), ArityError);
  ERelModel erel;
  CHECK_THROWS_AS(eval(*parse("rel{}:1->1"), erel, 1), EvalError);
}

TEST_CASE("sd files split on separators and drop comments") {
  auto terms = split_sd("# header\ncp ;\n  cc\n---\n\ndc # trailing\n---\n---\n");
  REQUIRE(terms.size() == 2);
  CHECK(print(*parse(terms[0])) == "cp ; cc");
  CHECK(terms[1] == "dc");
}

TEST_CASE("span models evaluate terms too") {
  SpanModel<FinSetOp> cospans(split_epis<FinSetOp>(), "cospan-finset");
  auto bone = eval(*parse("cd ; dc"), cospans, 1);
  CHECK(bone.apex == 1);
  CHECK(eval(*parse("cp ; cc"), cospans, 1) == cospans.identity(1));
}
