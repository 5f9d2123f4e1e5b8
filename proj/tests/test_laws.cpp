#include <doctest.h>

#include <set>

#include "cartbicat/laws.hpp"

using namespace cartbicat;

TEST_CASE("catalog ids are unique") {
  std::set<std::string> ids;
  for (const auto& c : law_catalog()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
  }
  CHECK(find_law("snake") != nullptr);
  CHECK(find_law("nope") == nullptr);
}

TEST_CASE("rel passes everything except the bone law") {
  auto r = run_suite("rel", {});
  CHECK(r.ok());
  CHECK(r.cases.size() == law_catalog().size());
  for (const auto& c : r.cases) {
    if (c.law.id == "bone-law")
      CHECK(c.report.status == Status::Fail);
    else
      CHECK_MESSAGE(c.report.status == Status::Pass, c.law.id);
  }
}

TEST_CASE("erel fails choice as expected") {
  SuiteOptions o;
  o.only = {"axiom-of-choice", "surjective-maps-split", "reconstruct-span-s", "epi-iff-surjective"};
  auto r = run_suite("erel", o);
  CHECK(r.ok());
  auto* ac = r.find("axiom-of-choice");
  REQUIRE(ac);
  CHECK(ac->report.status == Status::Fail);
  CHECK(ac->expected == Status::Fail);
  CHECK(ac->report.location == "hom(0,1)");
  CHECK(r.find("reconstruct-span-s")->report.ok());
  CHECK(r.find("epi-iff-surjective")->report.ok());
}

TEST_CASE("every model meets its expectations") {
  for (const auto& m : suite_models()) {
    auto r = run_suite(m, {});
    CHECK_MESSAGE(r.ok(), m);
  }
}

TEST_CASE("negative controls trip checkers") {
  for (const char* m : {"rel-equality-order", "rel-reversed-order"}) {
    auto r = run_suite(m, {});
    std::size_t failures = 0;
    for (const auto& c : r.cases) failures += c.report.status == Status::Fail;
    CHECK(failures >= 5);
  }
  SuiteOptions o;
  o.only = {"tame", "map-order-discrete"};
  auto rev = run_suite("rel-reversed-order", o);
  CHECK(rev.find("tame")->report.status == Status::Fail);
  CHECK(rev.find("map-order-discrete")->report.status == Status::Fail);
  o.only = {"axiom-of-choice"};
  CHECK(run_suite("rel-equality-order", o).find("axiom-of-choice")->report.status == Status::Fail);
}

TEST_CASE("unknown names throw") {
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  SuiteOptions o;
  o.only = {"nope"};
  CHECK_THROWS_AS(run_suite("rel", o), std::invalid_argument);
}

TEST_CASE("reports serialise") {
  SuiteOptions o;
  o.only = {"snake", "bone-law"};
  auto r = run_suite("frob", o);
  auto j = to_json(r, false);
  CHECK(j["model"] == "frob");
  CHECK(j["cases"].size() == 2);
  CHECK(j["cases"][0]["id"] == "bone-law");
  CHECK(j["cases"][0]["expected"] == "fail");
  CHECK_FALSE(j["cases"][0].contains("elapsed_ms"));
  CHECK(to_json(r, true)["cases"][0].contains("elapsed_ms"));
  CHECK(j["summary"]["ok"] == true);
  auto back = j["cases"][1].get<CheckReport>();
  CHECK(back.check == "snake");
  CHECK(render_text(r, false).find("2/2 cases as expected") != std::string::npos);
}
