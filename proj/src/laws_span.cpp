#include <stdexcept>

#include "cartbicat/laws_impl.hpp"

namespace cartbicat::detail {

SuiteReport run_span_suite(const std::string& model, const SuiteOptions& options) {
  if (model == "span-finset" || model == "span-s/split")
    return run_model_suite(SpanModel<FinSet>(split_epis<FinSet>(), model), model, options);
  if (model == "span-s/surj")
    return run_model_suite(SpanModel<FinSet>(surjections(), model), model, options);
  if (model == "span-s/regepi")
    return run_model_suite(SpanModel<FinSet>(regular_epis(), model), model, options);
  if (model == "cospan-finset")
    return run_model_suite(SpanModel<FinSetOp>(split_epis<FinSetOp>(), model), model, options);
  if (model == "span-s/inj")
    return run_model_suite(SpanModel<FinSetOp>(injections(), model), model, options);
  throw std::invalid_argument("unknown model: " + model);
}

}  // namespace cartbicat::detail
