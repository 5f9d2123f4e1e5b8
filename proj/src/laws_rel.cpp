#include "cartbicat/laws_impl.hpp"
#include "cartbicat/relation.hpp"

namespace cartbicat::detail {

SuiteReport run_relation_suite(const std::string& model, const SuiteOptions& options) {
  if (model == "rel-equality-order") return run_model_suite(RelEqualityOrder{}, model, options);
  if (model == "rel-reversed-order") return run_model_suite(RelReversedOrder{}, model, options);
  return run_model_suite(RelModel{}, model, options);
}

}  // namespace cartbicat::detail
