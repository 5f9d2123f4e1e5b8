#include "cartbicat/equivalence.hpp"
#include "cartbicat/laws_impl.hpp"

namespace cartbicat::detail {

SuiteReport run_partition_suite(const std::string& model, const SuiteOptions& options) {
  if (model == "erel") return run_model_suite(ERelModel{}, model, options);
  if (model == "perel") return run_model_suite(PERelModel{}, model, options);
  return run_model_suite(FrobModel{}, model, options);
}

}  // namespace cartbicat::detail
