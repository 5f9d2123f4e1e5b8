#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "cartbicat/cli.hpp"

using namespace cartbicat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cartbicat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints the morphism") {
  auto r = cli({"eval", "--model", "rel", "--width", "1", "cp ; cc"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  auto e = cli({"eval", "--model", "erel", "--width", "2", "--format", "json", "cd ; cp"});
  CHECK(e.code == 0);
  auto j = nlohmann::json::parse(e.out);
  CHECK(j["results"][0]["arity"] == nlohmann::json::array({0, 4}));
  CHECK(j["results"][0]["morphism"] == "{{c0,c2},{c1,c3}}");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"eval", "--model", "nope", "cp"}).code == 2);
  CHECK(cli({"homsets", "--model", "rel", "--covers", "inj"}).code == 2);
  auto p = cli({"eval", "cp ;; dc"});
  CHECK(p.code == 2);
  CHECK(p.err.find("offset 4") != std::string::npos);
  CHECK(cli({"eval", "cp ; cp"}).code == 2);
  CHECK(cli({"order", "cp"}).code == 2);
}

TEST_CASE("homsets") {
  auto r = cli({"homsets", "--model", "erel", "--bound", "2", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::map<std::pair<int, int>, int> counts;
  for (const auto& row : j["homsets"]) counts[{row["dom"], row["cod"]}] = row["count"];
  CHECK(counts[{1, 1}] == 2);
  CHECK(counts[{2, 1}] == 5);
  CHECK(counts[{2, 2}] == 15);
  auto s = cli({"homsets", "--model", "span-s", "--covers", "inj", "--bound", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("span-s/inj") != std::string::npos);
}

TEST_CASE("order compares both ways") {
  auto r = cli({"order", "--model", "rel", "--width", "2", "cp ; cc", "top"});
  CHECK(r.code == 2);
  auto o = cli({"order", "--model", "rel", "--width", "2", "id[1]", "cd ; dc * id[1] ; cp ; cc"});
  CHECK(o.code == 2);
  auto q = cli({"order", "--model", "rel", "--width", "2", "id[1]", "dc ; cd"});
  CHECK(q.code == 0);
  CHECK(q.out.find("lhs <= rhs: yes") != std::string::npos);
  CHECK(q.out.find("rhs <= lhs: no") != std::string::npos);
  auto e = cli({"order", "--model", "erel", "--width", "1", "id[1]", "dc ; cd", "--format", "json"});
  auto j = nlohmann::json::parse(e.out);
  CHECK(j["lhs_leq_rhs"] == true);
  CHECK(j["rhs_leq_lhs"] == false);
  CHECK(j["rhs"]["morphism"] == "{{d0},{c0}}");
}

TEST_CASE("laws exit codes follow expectations") {
  auto r = cli({"laws", "--model", "erel", "--case", "axiom-of-choice"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(as expected) hom(0,1)") != std::string::npos);
  CHECK(cli({"laws", "--model", "rel", "--case", "nope"}).code == 2);
}

TEST_CASE("reconstruct") {
  CHECK(cli({"reconstruct", "--model", "rel", "--bound", "2"}).code == 0);
  auto e = cli({"reconstruct", "--model", "erel", "--bound", "1"});
  CHECK(e.code == 1);
  CHECK(e.out.find("isomorphism: no") != std::string::npos);
  auto s = cli({"reconstruct", "--model", "erel", "--construction", "span-s", "--format", "json"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["isomorphism"] == true);
}

TEST_CASE("output is deterministic") {
  auto a = cli({"laws", "--model", "perel", "--format", "json"});
  auto b = cli({"laws", "--model", "perel", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
