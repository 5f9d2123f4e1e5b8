#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

namespace cartbicat {

/// Inconclusive means no witness was found within the bound, which is not a refutation.
enum class Status { Pass, Fail, Inconclusive, NotApplicable };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckReport {
  std::string check;
  std::string model;
  std::size_t bound = 0;
  Status status = Status::Pass;
  std::string witness;
  std::string counterexample;
  std::string location;  // e.g. "hom(0,1)"

  bool ok() const { return status == Status::Pass; }
};

void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

inline std::string hom_location(std::size_t x, std::size_t y) {
  return "hom(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace cartbicat
