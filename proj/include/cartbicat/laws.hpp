#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartbicat/report.hpp"

namespace cartbicat {

struct LawCase {
  std::string id;
  std::string statement;
};

/// The shipped catalog in report order.
const std::vector<LawCase>& law_catalog();
const LawCase* find_law(const std::string& id);

/// Expected verdicts are data: Pass unless listed for the model.
Status expected_status(const std::string& case_id, const std::string& model);
/// Why an expectation differs from Pass, if it does.
std::string expected_note(const std::string& case_id, const std::string& model);

struct CaseVerdict {
  LawCase law;
  CheckReport report;
  Status expected = Status::Pass;
  std::string note;
  double elapsed_ms = 0;

  bool matches() const { return report.status == expected; }
};

struct SuiteReport {
  std::string model;
  std::size_t bound = 0;
  unsigned seed = 0;
  std::vector<CaseVerdict> cases;

  bool ok() const {
    for (const auto& c : cases)
      if (!c.matches()) return false;
    return true;
  }
  const CaseVerdict* find(const std::string& id) const {
    for (const auto& c : cases)
      if (c.law.id == id) return &c;
    return nullptr;
  }
};

struct SuiteOptions {
  std::size_t bound = 2;
  unsigned seed = 0;
  std::vector<std::string> only;  // case ids; empty runs everything
};

/// Model names: rel, erel, perel, frob, span-finset, cospan-finset, span-s/<covers>
/// (covers split, surj, regepi over FinSet; inj over FinSet^op), and the negative controls
/// rel-equality-order, rel-reversed-order. Throws std::invalid_argument on unknown names.
SuiteReport run_suite(const std::string& model, const SuiteOptions& options);

std::vector<std::string> suite_models();

nlohmann::json to_json(const SuiteReport& r, bool timings);
std::string render_text(const SuiteReport& r, bool timings);

}  // namespace cartbicat
