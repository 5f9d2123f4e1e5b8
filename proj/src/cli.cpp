#include "cartbicat/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartbicat/diagrams.hpp"
#include "cartbicat/equivalence.hpp"
#include "cartbicat/laws.hpp"
#include "cartbicat/reconstruct.hpp"
#include "cartbicat/relation.hpp"
#include "cartbicat/spancat.hpp"

namespace cartbicat {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model = "rel";
  std::string covers;
  std::size_t bound = 0;  // 0: the model's default
  std::size_t width = 1;
  std::string format = "text";
  std::string file;
  unsigned seed = 0;
  std::string construction = "span-tilde";
  bool timings = false;
  std::vector<std::string> terms;
  std::vector<std::string> cases;
};

/// span-s/<covers> for span-s, the plain model name otherwise.
std::string model_key(const Options& o) {
  if (o.model == "span-s") return "span-s/" + (o.covers.empty() ? std::string("split") : o.covers);
  if (!o.covers.empty()) throw UsageError("--covers is only allowed with --model span-s");
  return o.model;
}

std::size_t bound_of(const Options& o) {
  if (o.bound) return o.bound;
  return o.model == "rel" ? 3 : 2;
}

template <class F>
auto with_model(const std::string& key, F&& f) {
  if (key == "rel") return f(RelModel{});
  if (key == "rel-equality-order") return f(RelEqualityOrder{});
  if (key == "rel-reversed-order") return f(RelReversedOrder{});
  if (key == "erel") return f(ERelModel{});
  if (key == "perel") return f(PERelModel{});
  if (key == "frob") return f(FrobModel{});
  if (key == "span-finset" || key == "span-s/split")
    return f(SpanModel<FinSet>(split_epis<FinSet>(), key));
  if (key == "span-s/surj") return f(SpanModel<FinSet>(surjections(), key));
  if (key == "span-s/regepi") return f(SpanModel<FinSet>(regular_epis(), key));
  if (key == "cospan-finset") return f(SpanModel<FinSetOp>(split_epis<FinSetOp>(), key));
  if (key == "span-s/inj") return f(SpanModel<FinSetOp>(injections(), key));
  throw UsageError("unknown model: " + key);
}

std::vector<std::string> term_sources(const Options& o) {
  std::vector<std::string> out;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot read " + o.file);
    std::stringstream ss;
    ss << in.rdbuf();
    out = split_sd(ss.str());
  }
  for (const auto& t : o.terms) out.push_back(t);
  if (out.empty()) throw UsageError("no terms given");
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ------------------------------------------------------------------ eval

int cmd_eval(const Options& o, std::ostream& out) {
  auto sources = term_sources(o);
  auto key = model_key(o);
  return with_model(key, [&](const auto& m) {
    json results = json::array();
    std::ostringstream text;
    for (const auto& src : sources) {
      auto t = parse(src);
      auto a = arity(*t, o.width);
      auto r = eval(*t, m, o.width);
      results.push_back({{"term", print(*t)},
                         {"arity", {a.inputs, a.outputs}},
                         {"morphism", m.format(r)}});
      text << m.format(r) << "\n";
    }
    if (o.format == "json")
      emit(out, {{"model", key}, {"width", o.width}, {"results", results}});
    else
      out << text.str();
    return 0;
  });
}

// ------------------------------------------------------------------ order

template <class M>
std::string order_witness(const M& m, const Mor<M>& a, const Mor<M>& b) {
  if constexpr (requires { m.witness(a, b); }) {
    using B = typename M::Base;
    if (auto w = m.witness(a, b))
      return "pivot " + std::to_string(w->pivot) + ", cover " + B::format(w->cover) +
             ", mediator " + B::format(w->mediator);
  }
  return "";
}

int cmd_order(const Options& o, std::ostream& out) {
  auto sources = term_sources(o);
  if (sources.size() != 2) throw UsageError("order needs exactly two terms");
  auto key = model_key(o);
  return with_model(key, [&](const auto& m) {
    auto ta = parse(sources[0]);
    auto tb = parse(sources[1]);
    auto a = eval(*ta, m, o.width);
    auto b = eval(*tb, m, o.width);
    if (m.dom(a) != m.dom(b) || m.cod(a) != m.cod(b))
      throw ArityError("terms are not parallel: " + print(*ta) + " and " + print(*tb));
    bool ab = m.leq(a, b), ba = m.leq(b, a);
    auto wab = order_witness(m, a, b), wba = order_witness(m, b, a);
    if (o.format == "json") {
      json j = {{"model", key},
                {"width", o.width},
                {"lhs", {{"term", print(*ta)}, {"morphism", m.format(a)}}},
                {"rhs", {{"term", print(*tb)}, {"morphism", m.format(b)}}},
                {"lhs_leq_rhs", ab},
                {"rhs_leq_lhs", ba}};
      if (!wab.empty()) j["lhs_leq_rhs_witness"] = wab;
      if (!wba.empty()) j["rhs_leq_lhs_witness"] = wba;
      emit(out, j);
    } else {
      out << "lhs = " << m.format(a) << "\nrhs = " << m.format(b) << "\n";
      out << "lhs <= rhs: " << (ab ? "yes" : "no") << (wab.empty() ? "" : " (" + wab + ")") << "\n";
      out << "rhs <= lhs: " << (ba ? "yes" : "no") << (wba.empty() ? "" : " (" + wba + ")") << "\n";
    }
    return 0;
  });
}

// ------------------------------------------------------------------ homsets

int cmd_homsets(const Options& o, std::ostream& out) {
  auto key = model_key(o);
  std::size_t n = bound_of(o);
  return with_model(key, [&](const auto& m) {
    std::vector<std::vector<std::size_t>> counts(n + 1, std::vector<std::size_t>(n + 1));
    for (Object x = 0; x <= n; ++x)
      for (Object y = 0; y <= n; ++y) counts[x][y] = m.homset(x, y).size();
    if (o.format == "json") {
      json rows = json::array();
      for (Object x = 0; x <= n; ++x)
        for (Object y = 0; y <= n; ++y) rows.push_back({{"dom", x}, {"cod", y}, {"count", counts[x][y]}});
      emit(out, {{"model", key}, {"bound", n}, {"homsets", rows}});
    } else {
      out << key << ", |hom(x,y)| for x, y <= " << n << "\n";
      out << "x\\y";
      for (Object y = 0; y <= n; ++y) out << std::setw(8) << y;
      out << "\n";
      for (Object x = 0; x <= n; ++x) {
        out << std::setw(3) << x;
        for (Object y = 0; y <= n; ++y) out << std::setw(8) << counts[x][y];
        out << "\n";
      }
    }
    return 0;
  });
}

// ------------------------------------------------------------------ laws

int cmd_laws(const Options& o, std::ostream& out) {
  auto key = model_key(o);
  SuiteOptions so;
  so.bound = bound_of(o);
  so.seed = o.seed;
  so.only = o.cases;
  for (const auto& id : so.only)
    if (!find_law(id)) throw UsageError("unknown law case: " + id);
  auto rep = run_suite(key, so);
  if (o.format == "json")
    emit(out, to_json(rep, o.timings));
  else
    out << render_text(rep, o.timings);
  return rep.ok() ? 0 : 1;
}

// ------------------------------------------------------------------ reconstruct

json to_json(const ReconstructionReport& r) {
  json homsets = json::array();
  for (const auto& h : r.homsets)
    homsets.push_back({{"dom", h.x},
                       {"cod", h.y},
                       {"spans", h.source},
                       {"morphisms", h.target},
                       {"injective", h.injective},
                       {"surjective", h.surjective},
                       {"preserves_order", h.preserves_order},
                       {"reflects_order", h.reflects_order}});
  return {{"model", r.model},
          {"construction", to_string(r.construction)},
          {"bound", r.bound},
          {"covers", r.covers},
          {"preconditions", r.preconditions},
          {"homsets", homsets},
          {"checks", r.checks},
          {"isomorphism", r.isomorphism()}};
}

std::string render_text(const ReconstructionReport& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto line = [&](const CheckReport& c) {
    os << "  " << std::left << std::setw(22) << c.check << std::setw(15) << to_string(c.status);
    if (!c.location.empty()) os << c.location << " ";
    os << (c.counterexample.empty() ? c.witness : c.counterexample) << "\n";
  };
  os << to_string(r.construction) << " of " << r.model << ", covers " << r.covers << ", bound "
     << r.bound << "\npreconditions\n";
  for (const auto& c : r.preconditions) line(c);
  os << "homsets\n";
  for (const auto& h : r.homsets)
    os << "  " << std::left << std::setw(10) << hom_location(h.x, h.y) << std::right << std::setw(5)
       << h.source << " spans -> " << std::setw(5) << h.target << " morphisms  injective "
       << yn(h.injective) << ", surjective " << yn(h.surjective) << ", order preserved "
       << yn(h.preserves_order) << ", reflected " << yn(h.reflects_order) << "\n";
  os << "checks\n";
  for (const auto& c : r.checks) line(c);
  os << "isomorphism: " << yn(r.isomorphism()) << "\n";
  return os.str();
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  auto key = model_key(o);
  Construction c;
  if (o.construction == "span-tilde")
    c = Construction::SpanTilde;
  else if (o.construction == "span-s")
    c = Construction::SpanS;
  else
    throw UsageError("unknown construction: " + o.construction);
  auto rep = with_model(key, [&](const auto& m) {
    auto r = reconstruct(m, bound_of(o), c);
    r.model = key;
    return r;
  });
  if (o.format == "json")
    emit(out, to_json(rep));
  else
    out << render_text(rep);
  return rep.isomorphism() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite cartesian bicategories: evaluate string diagrams, decide orders, run law suites"};
  app.require_subcommand(1, 1);
  Options o;

  const std::vector<std::string> models = {"rel",           "erel",        "perel",
                                           "frob",          "span-finset", "cospan-finset",
                                           "span-s",        "rel-equality-order",
                                           "rel-reversed-order"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "Model")->check(CLI::IsMember(models));
    sub->add_option("--covers", o.covers, "Cover system for span-s")
        ->check(CLI::IsMember({"split", "surj", "regepi", "inj"}));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto with_terms = [&](CLI::App* sub) {
    sub->add_option("--width", o.width, "Carrier size of one wire")->check(CLI::Range(1, 16));
    sub->add_option("--file", o.file, "An .sd file of terms")->check(CLI::ExistingFile);
    sub->add_option("terms", o.terms, "Terms");
  };
  auto with_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "Largest object (default 3 for rel, 2 otherwise)")
        ->check(CLI::Range(1, 4));
  };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate terms in a model");
  common(eval_cmd);
  with_terms(eval_cmd);
  auto* order_cmd = app.add_subcommand("order", "Compare two parallel terms both ways");
  common(order_cmd);
  with_terms(order_cmd);
  auto* homsets_cmd = app.add_subcommand("homsets", "Count homsets between small objects");
  common(homsets_cmd);
  with_bound(homsets_cmd);
  auto* laws_cmd = app.add_subcommand("laws", "Run the law suite");
  common(laws_cmd);
  with_bound(laws_cmd);
  laws_cmd->add_option("--seed", o.seed, "Seed (the suite is exhaustive; recorded in reports)");
  laws_cmd->add_flag("--timings", o.timings, "Report per-case wall time");
  laws_cmd->add_option("--case", o.cases, "Run only these case ids");
  auto* rec_cmd = app.add_subcommand("reconstruct", "Rebuild the model from its maps");
  common(rec_cmd);
  with_bound(rec_cmd);
  rec_cmd->add_option("--construction", o.construction, "span-tilde or span-s")
      ->check(CLI::IsMember({"span-tilde", "span-s"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*eval_cmd) return cmd_eval(o, out);
    if (*order_cmd) return cmd_order(o, out);
    if (*homsets_cmd) return cmd_homsets(o, out);
    if (*laws_cmd) return cmd_laws(o, out);
    if (*rec_cmd) return cmd_reconstruct(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ArityError& e) {
    err << "arity error: " << e.what() << "\n";
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace cartbicat
