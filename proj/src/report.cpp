#include "cartbicat/report.hpp"

#include <stdexcept>

namespace cartbicat {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::NotApplicable: return "not-applicable";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "inconclusive") return Status::Inconclusive;
  if (s == "not-applicable") return Status::NotApplicable;
  throw std::invalid_argument("unknown status: " + s);
}

void to_json(nlohmann::json& j, const CheckReport& r) {
  j = nlohmann::json{{"check", r.check},
                     {"model", r.model},
                     {"bound", r.bound},
                     {"status", to_string(r.status)}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  if (!r.location.empty()) j["location"] = r.location;
}

void from_json(const nlohmann::json& j, CheckReport& r) {
  r.check = j.at("check").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.bound = j.at("bound").get<std::size_t>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.witness = j.value("witness", "");
  r.counterexample = j.value("counterexample", "");
  r.location = j.value("location", "");
}

}  // namespace cartbicat
