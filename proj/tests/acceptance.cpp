// One line per acceptance criterion; exits non-zero if any criterion fails.

#include <array>
#include <chrono>
#include <functional>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "cartbicat/bicat.hpp"
#include "cartbicat/bridges.hpp"
#include "cartbicat/equivalence.hpp"
#include "cartbicat/laws.hpp"
#include "cartbicat/reconstruct.hpp"
#include "cartbicat/relation.hpp"
#include "cartbicat/witness_oracle.hpp"

using namespace cartbicat;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

Verdict axiom_suite() {
  Verdict v;
  auto start = Clock::now();
  const std::vector<std::string> axioms = {"comonoid", "adjoints", "frobenius", "lax-homomorphism",
                                           "monoidal-compatibility", "poset-enrichment"};
  const std::vector<std::pair<std::string, std::size_t>> runs = {
      {"rel", 3}, {"erel", 2}, {"perel", 2}, {"frob", 2}, {"span-finset", 2}, {"cospan-finset", 2}};
  for (const auto& [model, bound] : runs) {
    SuiteOptions o;
    o.bound = bound;
    o.only = axioms;
    auto rep = run_suite(model, o);
    for (const auto& c : rep.cases)
      v.require(c.report.ok(), model + " " + c.law.id + " " + to_string(c.report.status) + " " +
                                   c.report.location);
  }
  double secs = seconds_since(start);
  v.require(secs < 120, "took " + std::to_string(secs) + " s");
  if (v.pass) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << "6 axiom groups x 6 models in " << secs << " s";
    v.detail = os.str();
  }
  return v;
}

Verdict choice_verdicts() {
  Verdict v;
  RelModel rel;
  PERelModel perel;
  FrobModel frob;
  ERelModel erel;
  SpanModel<FinSetOp> cospans(split_epis<FinSetOp>(), "cospan-finset");
  v.require(check_choice(MapCategory<RelModel>(rel, 2)).ok(), "rel fails choice");
  v.require(check_choice(MapCategory<PERelModel>(perel, 2)).ok(), "perel fails choice");
  v.require(check_choice(MapCategory<FrobModel>(frob, 2)).ok(), "frob fails choice");
  v.require(check_choice(MapCategory<SpanModel<FinSetOp>>(cospans, 2)).ok(),
            "cospan-finset fails choice");
  auto e = check_choice(MapCategory<ERelModel>(erel, 2));
  v.require(e.status == Status::Fail, "erel satisfies choice");
  v.require(e.location == "hom(0,1)", "erel counterexample at " + e.location);
  if (v.pass) v.detail = "rel, perel, frob, cospan-finset pass; erel fails at " + e.location;
  return v;
}

std::size_t bell(std::size_t n) {
  std::vector<std::vector<std::size_t>> s(n + 1, std::vector<std::size_t>(n + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  std::size_t b = 0;
  for (auto x : s[n]) b += x;
  return b;
}

/// Cospans x -> A <- y with A <= 4 up to mutual mediators.
std::size_t cospan_oracle(Object x, Object y) {
  struct C {
    Object a;
    FinFunction l, r;
  };
  auto mediates = [](const C& s, const C& t) {
    for (const auto& f : all_functions(s.a, t.a))
      if (compose(s.l, f) == t.l && compose(s.r, f) == t.r) return true;
    return false;
  };
  std::vector<C> reps;
  for (Object a = 0; a <= 4; ++a)
    for (const auto& l : all_functions(x, a))
      for (const auto& r : all_functions(y, a)) {
        C c{a, l, r};
        bool seen = false;
        for (const auto& k : reps) seen = seen || (mediates(c, k) && mediates(k, c));
        if (!seen) reps.push_back(c);
      }
  return reps.size();
}

Verdict homset_counts() {
  Verdict v;
  RelModel rel;
  ERelModel erel;
  PERelModel perel;
  FrobModel frob;
  auto check = [&](const std::string& name, std::size_t got, std::size_t oracle, std::size_t want) {
    v.require(got == oracle, name + " = " + std::to_string(got) + " but the oracle gives " +
                                 std::to_string(oracle));
    v.require(got == want, name + " = " + std::to_string(got) + " (oracle " +
                               std::to_string(oracle) + "), expected " + std::to_string(want));
  };
  check("|Rel(2,2)|", rel.homset(2, 2).size(), std::size_t{1} << 4, 16);
  check("|ERel(1,1)|", erel.homset(1, 1).size(), bell(2), 2);
  check("|ERel(2,1)|", erel.homset(2, 1).size(), bell(3), 5);
  check("|ERel(2,2)|", erel.homset(2, 2).size(), bell(4), 15);
  check("|PERel(1,1)|", perel.homset(1, 1).size(), bell(3), 5);
  check("|Frob(0,0)|", frob.homset(0, 0).size(), cospan_oracle(0, 0), 2);
  check("|Frob(1,1)|", frob.homset(1, 1).size(), cospan_oracle(1, 1), 4);
  if (v.pass) v.detail = "16; 2, 5, 15; 5; 2, 4";
  return v;
}

std::string first_failure(const ReconstructionReport& r) {
  for (const auto& c : r.checks)
    if (!c.ok()) return c.check + " at " + c.location;
  for (const auto& c : r.preconditions)
    if (!c.ok()) return "precondition " + c.check + " at " + c.location;
  return "";
}

Verdict choice_reconstruction() {
  Verdict v;
  RelModel rel;
  PERelModel perel;
  auto r = reconstruct(rel, 3, Construction::SpanTilde);
  auto p = reconstruct(perel, 2, Construction::SpanTilde);
  v.require(r.isomorphism(), "rel: " + first_failure(r));
  v.require(p.isomorphism(), "perel: " + first_failure(p));
  std::size_t n = 0;
  for (const auto& h : r.homsets) n += h.target;
  for (const auto& h : p.homsets) n += h.target;
  if (v.pass) v.detail = "rel <= 3 and perel <= 2, " + std::to_string(n) + " morphisms matched";
  return v;
}

Verdict tame_reconstruction() {
  Verdict v;
  ERelModel erel;
  auto s = reconstruct(erel, 2, Construction::SpanS);
  v.require(s.isomorphism(), "span-s: " + first_failure(s));
  v.require(!s.homsets.empty() && s.homsets.back().source == 15 && s.homsets.back().target == 15,
            "hom(2,2) sizes differ from 15");
  auto t = reconstruct(erel, 1, Construction::SpanTilde);
  std::string where;
  for (const auto& h : t.homsets)
    if (!h.reflects_order && where.empty()) where = hom_location(h.x, h.y);
  v.require(!where.empty(), "span-tilde reflects the order");
  v.require(where == "hom(0,1)", "span-tilde fails order reflection at " + where + ", not hom(0,1)");
  if (v.pass) v.detail = "span-s isomorphic; span-tilde fails order reflection at " + where;
  return v;
}

Verdict regular_epi_bridge() {
  Verdict v;
  SuiteOptions o;
  o.bound = 3;
  o.only = {"regular-epi-bridge"};
  auto rep = run_suite("rel", o);
  const auto& c = rep.cases.at(0);
  v.require(c.report.ok(), c.report.counterexample);
  if (v.pass) v.detail = "homsets, order and composition agree at objects <= 3; surjections split";
  return v;
}

Verdict injection_spans() {
  Verdict v;
  auto S = injections();
  SpanModel<FinSetOp> spans(S, "span-s/inj");
  ERelModel erel;
  FrobModel frob;
  for (Object x = 0; x <= 2; ++x)
    for (Object y = 0; y <= 2; ++y) {
      const auto& h = spans.homset(x, y);
      std::set<Partition> image;
      for (const auto& s : h) image.insert(spanclass_to_erel(s, S));
      v.require(image.size() == h.size() && h.size() == erel.homset(x, y).size(),
                "not a bijection at " + hom_location(x, y));
      for (const auto& s : h)
        for (const auto& t : h)
          v.require(spans.leq(s, t) == erel.leq(spanclass_to_erel(s, S), spanclass_to_erel(t, S)),
                    "order differs at " + hom_location(x, y));
      for (Object z = 0; z <= 2; ++z)
        for (const auto& s : h)
          for (const auto& t : spans.homset(y, z))
            v.require(spanclass_to_erel(spans.compose(s, t), S) ==
                          erel.compose(spanclass_to_erel(s, S), spanclass_to_erel(t, S)),
                      "composition differs at " + hom_location(x, z));
      std::map<Partition, std::vector<FrobMorphism>> fibres;
      for (const auto& r : frob.homset(x, y)) fibres[r.part].push_back(r);
      for (const auto& [part, members] : fibres) {
        if (members.size() == 1) continue;
        auto bone = frob.compose(frob.codiscard(1), frob.discard(1));
        bool just_the_bone = members.size() == 2 && x + y == 0 &&
                             (members[0] == bone || members[1] == bone) &&
                             (members[0] == frob.identity(0) || members[1] == frob.identity(0));
        v.require(just_the_bone, "quotient identifies more than the bone at " + hom_location(x, y));
      }
    }
  auto bone = frob.compose(frob.codiscard(1), frob.discard(1));
  v.require(!(bone == frob.identity(0)), "the bone is already the identity in frob");
  if (v.pass) v.detail = "bijective, monotone both ways, functorial at <= 2; frob -> erel merges only the bone";
  return v;
}

Verdict spot_suite() {
  Verdict v;
  SuiteOptions o;
  o.bound = 2;
  o.only = {"snake", "special-frobenius", "bone-law", "predicates-agree", "map-order-discrete",
            "epi-iff-surjective", "choice-iff-split"};
  for (const char* model : {"rel", "erel", "perel", "frob"}) {
    auto rep = run_suite(model, o);
    for (const auto& c : rep.cases)
      v.require(c.matches(), std::string(model) + " " + c.law.id + " " + to_string(c.report.status));
  }
  auto rel = run_suite("rel", o);
  const auto* bone = rel.find("bone-law");
  v.require(bone && bone->report.counterexample == "0:fails 1:holds 2:holds",
            "rel bone-law table " + (bone ? bone->report.counterexample : std::string("missing")));
  if (v.pass) v.detail = "7 laws on rel, erel, perel, frob; rel bone law 0:fails 1:holds 2:holds";
  return v;
}

Verdict order_oracle() {
  Verdict v;
  std::ostringstream os;
  auto run = [&](auto rep) {
    v.require(rep.disagreements == 0, rep.base + "/" + rep.covers + " disagrees on " +
                                          rep.first_disagreement);
    os << (os.tellp() > 0 ? ", " : "") << rep.base << "/" << rep.covers << " " << rep.positives
       << "/" << rep.pairs << " ordered";
  };
  run(cross_check_span_leq(split_epis<FinSet>(), 1000, 0));
  run(cross_check_span_leq(surjections(), 1000, 0));
  run(cross_check_span_leq(split_epis<FinSetOp>(), 1000, 0));
  run(cross_check_span_leq(injections(), 1000, 0));
  if (v.pass) v.detail = "0 disagreements: " + os.str();
  return v;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

Verdict determinism(const std::string& cli) {
  Verdict v;
  if (cli.empty()) {
    v.require(false, "no CLI path given");
    return v;
  }
  std::string script;
  for (const auto& m : suite_models()) {
    std::string model = m, covers;
    if (m.rfind("span-s/", 0) == 0) {
      model = "span-s";
      covers = " --covers " + m.substr(7);
    }
    script += "'" + cli + "' laws --model " + model + covers + " --format json; ";
  }
  script += "'" + cli + "' homsets --model perel --format json; ";
  script += "'" + cli + "' reconstruct --model erel --construction span-s --format json";
  int s1 = 0, s2 = 0;
  auto a = capture("{ " + script + "; } 2>&1", s1);
  auto b = capture("{ " + script + "; } 2>&1", s2);
  v.require(!a.empty(), "no output");
  v.require(a == b, "outputs differ");
  if (v.pass) v.detail = std::to_string(a.size()) + " bytes identical across two runs";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"axiom suite", axiom_suite},
      {"choice verdicts", choice_verdicts},
      {"homset counts", homset_counts},
      {"choice reconstruction", choice_reconstruction},
      {"tame reconstruction", tame_reconstruction},
      {"regular epi bridge", regular_epi_bridge},
      {"injection spans and the bone", injection_spans},
      {"spot laws", spot_suite},
      {"order oracle", order_oracle},
      {"determinism", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failed += !v.pass;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): "
              << (v.pass ? "PASS" : "FAIL") << " - " << v.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
