#pragma once

#include <concepts>

#include "cartbicat/equivalence.hpp"
#include "cartbicat/relation.hpp"
#include "cartbicat/spancat.hpp"

namespace cartbicat {

/// The relation {(left a, right a)} of a span of finite sets.
inline Relation span_to_rel(const Span<FinSet>& s) {
  Relation r(s.dom(), s.cod());
  for (Element a = 0; a < s.apex; ++a) r.set(s.left(a), s.right(a));
  return r;
}

namespace detail {

template <class Fn>
Partition boundary_partition(const Fn& left, const Fn& right) {
  std::vector<Element> labels;
  for (Element i = 0; i < left.dom(); ++i) labels.push_back(left(i));
  for (Element j = 0; j < right.dom(); ++j) labels.push_back(right(j));
  return Partition(left.dom(), right.dom(), std::move(labels));
}

}  // namespace detail

/// Boundary points glued when they land on the same apex point.
inline Partition cospan_partition(const Span<FinSetOp>& s) {
  return detail::boundary_partition(s.left.fn, s.right.fn);
}

/// Apex points missing the boundary only survive the order when the boundary is empty.
inline FrobMorphism cospan_to_frob(const Span<FinSetOp>& s) {
  bool empty_boundary = s.dom() + s.cod() == 0;
  return {cospan_partition(s), empty_boundary && s.apex > 0};
}

inline Partition spanclass_to_erel(const Span<FinSetOp>& s, const CoverSystem<FinSetOp>& S) {
  if (S.tag != CoverTag::Injections)
    throw CategoryError("spanclass_to_erel needs the injection cover system, got " + S.name);
  return cospan_partition(s);
}

/// Boundary points sent to the basepoint become undefined.
inline Partition cospan_to_perel(const Span<PointedFinSetOp>& s) {
  return detail::boundary_partition(s.left.fn, s.right.fn);
}

/// Identifies base arrows with maps of a model: decode(f) is the map corresponding to f.
template <class M>
struct MapCodec;

template <class M>
  requires std::derived_from<M, RelModel>
struct MapCodec<M> {
  using Base = FinSet;
  static Relation decode(const M&, const FinFunction& f) { return Relation::graph(f); }
};

template <>
struct MapCodec<ERelModel> {
  using Base = FinSetOp;
  static Partition decode(const ERelModel&, const FinSetOp::Arrow& f) {
    return cospan_partition(span_of_arrow<FinSetOp>(f));
  }
};

template <>
struct MapCodec<PERelModel> {
  using Base = PointedFinSetOp;
  static Partition decode(const PERelModel&, const PointedFinSetOp::Arrow& f) {
    return cospan_to_perel(span_of_arrow<PointedFinSetOp>(f));
  }
};

template <>
struct MapCodec<FrobModel> {
  using Base = FinSetOp;
  static FrobMorphism decode(const FrobModel&, const FinSetOp::Arrow& f) {
    return cospan_to_frob(span_of_arrow<FinSetOp>(f));
  }
};

template <class B>
struct MapCodec<SpanModel<B>> {
  using Base = B;
  static Span<B> decode(const SpanModel<B>& m, const typename B::Arrow& f) { return m.embed(f); }
};

template <>
struct MapCodec<RegularRelModel> {
  using Base = FinSet;
  static Span<FinSet> decode(const RegularRelModel& m, const FinFunction& f) {
    return m.embed(f);
  }
};

}  // namespace cartbicat
