#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cartbicat/fincat.hpp"

namespace cartbicat {

enum class CoverTag { SplitEpi, RegularEpi, AllSurjections, Injections, Custom };

inline std::string to_string(CoverTag tag) {
  switch (tag) {
    case CoverTag::SplitEpi: return "split-epi";
    case CoverTag::RegularEpi: return "regular-epi";
    case CoverTag::AllSurjections: return "surjections";
    case CoverTag::Injections: return "injections";
    case CoverTag::Custom: return "custom";
  }
  return "custom";
}

template <class B>
struct CoverSystem {
  CoverTag tag = CoverTag::SplitEpi;
  std::string name;
  std::function<bool(const typename B::Arrow&)> contains;

  bool operator()(const typename B::Arrow& f) const { return contains(f); }
};

template <class B>
CoverSystem<B> split_epis() {
  return {CoverTag::SplitEpi, "split-epi", [](const typename B::Arrow& f) { return B::is_split_epi(f); }};
}

/// In FinSet regular epis, surjections and split epis coincide; the tags stay distinct.
inline CoverSystem<FinSet> surjections() {
  return {CoverTag::AllSurjections, "surjections",
          [](const FinFunction& f) { return f.is_surjective(); }};
}

inline CoverSystem<FinSet> regular_epis() {
  return {CoverTag::RegularEpi, "regular-epi",
          [](const FinFunction& f) { return f.is_surjective(); }};
}

/// Injections of FinSet, seen as arrows of FinSet^op.
inline CoverSystem<FinSetOp> injections() {
  return {CoverTag::Injections, "injections",
          [](const FinSetOp::Arrow& f) { return f.fn.is_injective(); }};
}

/// Negative control: identities only. Not right-cancellable.
template <class B>
CoverSystem<B> identities() {
  return {CoverTag::Custom, "identities", [](const typename B::Arrow& f) {
            return B::dom(f) == B::cod(f) && f == B::identity(B::dom(f));
          }};
}

struct AxiomResult {
  std::string axiom;
  bool ok = true;
  std::string counterexample;
};

struct CoverReport {
  std::string system;
  std::size_t bound = 0;
  std::vector<AxiomResult> axioms;

  bool ok() const {
    for (const auto& a : axioms)
      if (!a.ok) return false;
    return true;
  }
  const AxiomResult* first_failure() const {
    for (const auto& a : axioms)
      if (!a.ok) return &a;
    return nullptr;
  }
};

template <class B>
std::vector<typename B::Arrow> arrows_up_to(std::size_t bound) {
  std::vector<typename B::Arrow> out;
  for (Object a = 0; a <= bound; ++a)
    for (Object b = 0; b <= bound; ++b)
      for (auto& f : B::arrows(a, b)) out.push_back(std::move(f));
  return out;
}

/// Checks the five closure axioms over all arrows between objects of size <= bound.
/// Weak pullbacks: the canonical pullback plus apex paddings of up to 2 points.
template <class B>
CoverReport validate_cover_system(const CoverSystem<B>& S, std::size_t bound) {
  using Arrow = typename B::Arrow;
  CoverReport report{S.name, bound, {}};
  auto all = arrows_up_to<B>(bound);
  std::vector<Arrow> covers;
  for (const auto& f : all)
    if (S(f)) covers.push_back(f);

  AxiomResult ids{"identities", true, ""};
  for (Object a = 0; a <= bound && ids.ok; ++a)
    if (!S(B::identity(a))) {
      ids.ok = false;
      ids.counterexample = B::format(B::identity(a));
    }
  report.axioms.push_back(ids);

  AxiomResult comp{"composition", true, ""};
  for (const auto& f : covers) {
    for (const auto& g : covers)
      if (B::cod(f) == B::dom(g) && !S(B::compose(f, g))) {
        comp.ok = false;
        comp.counterexample = B::format(f) + " ; " + B::format(g);
        break;
      }
    if (!comp.ok) break;
  }
  report.axioms.push_back(comp);

  AxiomResult prod{"products", true, ""};
  for (const auto& f : covers) {
    for (const auto& g : covers)
      if (!S(product_arrow<B>(f, g))) {
        prod.ok = false;
        prod.counterexample = B::format(f) + " x " + B::format(g);
        break;
      }
    if (!prod.ok) break;
  }
  report.axioms.push_back(prod);

  AxiomResult wpb{"weak-pullback", true, ""};
  for (const auto& pi : covers) {
    for (const auto& f : all) {
      if (B::cod(f) != B::cod(pi)) continue;
      auto pb = B::pullback(pi, f);
      for (Object j = 0; j <= 2 && wpb.ok; ++j)
        for (const auto& pad : B::split_epi_extensions(pb.apex, j)) {
          auto q = B::compose(pad, pb.second);
          if (!S(q)) {
            wpb.ok = false;
            wpb.counterexample = "pullback of " + B::format(pi) + " along " + B::format(f) +
                                 " (padding " + std::to_string(j) + ") gives " + B::format(q);
            break;
          }
        }
      if (!wpb.ok) break;
    }
    if (!wpb.ok) break;
  }
  report.axioms.push_back(wpb);

  AxiomResult cancel{"right-cancel", true, ""};
  for (const auto& f : all) {
    for (const auto& pi : all)
      if (B::cod(f) == B::dom(pi) && !S(pi) && S(B::compose(f, pi))) {
        cancel.ok = false;
        cancel.counterexample = B::format(f) + " ; " + B::format(pi) + " in S but " +
                                B::format(pi) + " is not";
        break;
      }
    if (!cancel.ok) break;
  }
  report.axioms.push_back(cancel);
  return report;
}

/// Every split epi of the fragment lies in S.
template <class B>
std::optional<typename B::Arrow> split_epi_not_in(const CoverSystem<B>& S, std::size_t bound) {
  for (const auto& f : arrows_up_to<B>(bound))
    if (B::is_split_epi(f) && !S(f)) return f;
  return std::nullopt;
}

}  // namespace cartbicat
