#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cartbicat/cli.hpp"
#include "cartbicat/diagrams.hpp"
#include "cartbicat/laws.hpp"

namespace py = pybind11;
using namespace cartbicat;

namespace {

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cartbicat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

std::string suite_json(const std::string& model, std::size_t bound, unsigned seed,
                       const std::vector<std::string>& only) {
  SuiteOptions o;
  o.bound = bound;
  o.seed = seed;
  o.only = only;
  SuiteReport r;
  {
    py::gil_scoped_release release;
    r = run_suite(model, o);
  }
  return to_json(r, false).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exhaustive checks for small cartesian bicategories";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ArityError>(m, "ArityError", PyExc_ValueError);

  m.def("cli", &cli, py::arg("args"), "Run the command line tool, returning (code, stdout, stderr).");
  m.def("suite_json", &suite_json, py::arg("model"), py::arg("bound") = 2, py::arg("seed") = 0,
        py::arg("only") = std::vector<std::string>{});
  m.def("suite_models", &suite_models);
  m.def("law_catalog", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : law_catalog()) out.emplace_back(c.id, c.statement);
    return out;
  });
  m.def("normalise", [](const std::string& text) { return print(*parse(text)); },
        "Parse a term and print it back in canonical form.");
  m.def("arity", [](const std::string& text, std::size_t width) {
    auto a = arity(*parse(text), width);
    return py::make_tuple(a.inputs, a.outputs);
  }, py::arg("term"), py::arg("width") = 1);
}
