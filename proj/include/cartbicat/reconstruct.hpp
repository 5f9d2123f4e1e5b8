#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cartbicat/bicat.hpp"
#include "cartbicat/bridges.hpp"

namespace cartbicat {

enum class Construction { SpanTilde, SpanS };

inline std::string to_string(Construction c) {
  return c == Construction::SpanTilde ? "span-tilde" : "span-s";
}

struct HomsetBijection {
  Object x = 0;
  Object y = 0;
  std::size_t source = 0;  // classes in the span construction
  std::size_t target = 0;  // morphisms of the model
  bool injective = false;
  bool surjective = false;
  bool preserves_order = false;
  bool reflects_order = false;

  bool ok() const { return injective && surjective && preserves_order && reflects_order; }
};

struct ReconstructionReport {
  std::string model;
  Construction construction = Construction::SpanS;
  std::size_t bound = 0;
  std::string covers;
  std::vector<CheckReport> preconditions;
  std::vector<HomsetBijection> homsets;
  std::vector<CheckReport> checks;  // bijective, order, composition, ...

  const CheckReport* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.check == name) return &c;
    return nullptr;
  }
  bool isomorphism() const {
    for (const auto& c : checks)
      if (c.check != "faithful-iff-reflects" && !c.ok()) return false;
    return true;
  }
};

/// decode : B -> Map(M) is an isomorphism onto the maps between objects <= bound.
template <CartesianBicategory M>
CheckReport map_category_check(const M& m, const MapCategory<M>& mc) {
  using Codec = MapCodec<M>;
  using B = typename Codec::Base;
  auto rep = make_report(m, "map-category", mc.bound());
  rep.witness = "Map(" + m.name() + ") = " + B::name();
  auto fail = [&](Object x, Object y, std::string why) {
    rep.status = Status::Fail;
    rep.location = hom_location(x, y);
    rep.counterexample = std::move(why);
    return rep;
  };
  std::size_t n = mc.bound();
  for (Object x = 0; x <= n; ++x) {
    if (!(Codec::decode(m, B::identity(x)) == m.identity(x))) return fail(x, x, "identity");
    for (Object y = 0; y <= n; ++y) {
      auto arrows = B::arrows(x, y);
      if (arrows.size() != mc.count(x, y))
        return fail(x, y, std::to_string(arrows.size()) + " base arrows vs " +
                              std::to_string(mc.count(x, y)) + " maps");
      std::vector<bool> hit(mc.count(x, y), false);
      for (const auto& f : arrows) {
        int i = mc.index(x, y, Codec::decode(m, f));
        if (i < 0) return fail(x, y, B::format(f) + " does not decode to a map");
        if (hit[i]) return fail(x, y, B::format(f) + " decodes to a repeated map");
        hit[i] = true;
      }
    }
  }
  for (Object x = 0; x <= n; ++x)
    for (Object y = 0; y <= n; ++y)
      for (Object z = 0; z <= n; ++z)
        for (const auto& f : B::arrows(x, y))
          for (const auto& g : B::arrows(y, z))
            if (!(Codec::decode(m, B::compose(f, g)) ==
                  m.compose(Codec::decode(m, f), Codec::decode(m, g))))
              return fail(x, z, "composite of " + B::format(f) + " and " + B::format(g));
  return rep;
}

/// Compares the span construction over Map(M), transported along the codec, with M:
/// F(X <-f- A -g-> Y) = op(f) ; g.
template <CartesianBicategory M>
ReconstructionReport reconstruct(const M& m, std::size_t bound, Construction c) {
  using Codec = MapCodec<M>;
  using B = typename Codec::Base;
  using Sp = Span<B>;

  ReconstructionReport out;
  out.model = m.name();
  out.construction = c;
  out.bound = bound;

  CoverSystem<B> S = split_epis<B>();
  if (c == Construction::SpanS)
    S = CoverSystem<B>{CoverTag::Custom, "surjective-maps", [&m](const typename B::Arrow& f) {
                         return is_surjective(m, Codec::decode(m, f));
                       }};
  out.covers = S.name;

  MapCategory<M> mc(m, bound);
  out.preconditions.push_back(map_category_check(m, mc));
  {
    auto cov = validate_cover_system(S, std::min<std::size_t>(bound, 2));
    auto r = make_report(m, "covers", std::min<std::size_t>(bound, 2));
    r.witness = S.name;
    if (auto* f = cov.first_failure()) {
      r.status = Status::Fail;
      r.counterexample = f->axiom + ": " + f->counterexample;
    }
    out.preconditions.push_back(r);
  }
  out.preconditions.push_back(check_tame(mc));
  if (c == Construction::SpanTilde) out.preconditions.push_back(check_choice(mc));

  SpanModel<B> span(S, to_string(c) + "(Map(" + m.name() + "))");
  auto F = [&](const Sp& s) {
    return m.compose(m.opposite(Codec::decode(m, s.left)), Codec::decode(m, s.right));
  };

  auto bij = make_report(m, "bijective", bound);
  auto order = make_report(m, "order", bound);
  auto faithful = make_report(m, "faithful-iff-reflects", bound);
  bool all_injective = true, all_reflect = true;
  std::string first_noninjective, first_nonreflecting;

  for (Object x = 0; x <= bound; ++x)
    for (Object y = 0; y <= bound; ++y) {
      const auto& src = span.homset(x, y);
      const auto& tgt = m.homset(x, y);
      HomsetBijection h{x, y, src.size(), tgt.size()};
      std::vector<Mor<M>> images;
      images.reserve(src.size());
      for (const auto& s : src) images.push_back(F(s));
      auto sorted = images;
      std::sort(sorted.begin(), sorted.end());
      h.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      h.surjective = std::all_of(tgt.begin(), tgt.end(), [&](const Mor<M>& r) {
        return std::binary_search(sorted.begin(), sorted.end(), r);
      });
      h.preserves_order = h.reflects_order = true;
      std::string order_failure;
      for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
          bool a = span.leq(src[i], src[j]);
          bool b = m.leq(images[i], images[j]);
          if (a && !b && h.preserves_order) {
            h.preserves_order = false;
            if (order_failure.empty())
              order_failure = span.format(src[i]) + " <= " + span.format(src[j]) + " not preserved";
          }
          if (b && !a && h.reflects_order) {
            h.reflects_order = false;
            if (order_failure.empty())
              order_failure = span.format(src[i]) + " <= " + span.format(src[j]) + " not reflected";
          }
        }
      if ((!h.injective || !h.surjective) && bij.ok()) {
        bij.status = Status::Fail;
        bij.location = hom_location(x, y);
        bij.counterexample = std::to_string(h.source) + " classes vs " + std::to_string(h.target) +
                             " morphisms" + (h.injective ? "" : ", not injective") +
                             (h.surjective ? "" : ", not surjective");
      }
      if (!order_failure.empty() && order.ok()) {
        order.status = Status::Fail;
        order.location = hom_location(x, y);
        order.counterexample = order_failure;
      }
      if (!h.injective && all_injective) {
        all_injective = false;
        first_noninjective = hom_location(x, y);
      }
      if (!h.reflects_order && all_reflect) {
        all_reflect = false;
        first_nonreflecting = hom_location(x, y);
      }
      out.homsets.push_back(h);
    }
  if (all_injective != all_reflect) {
    faithful.status = Status::Fail;
    faithful.counterexample = all_injective ? "faithful but reflection fails at " + first_nonreflecting
                                            : "reflects order but not faithful at " + first_noninjective;
  } else {
    faithful.witness = all_injective ? "faithful and reflects order"
                                     : "neither faithful (" + first_noninjective +
                                           ") nor order reflecting (" + first_nonreflecting + ")";
  }

  auto comp = make_report(m, "composition", bound);
  for (Object x = 0; x <= bound && comp.ok(); ++x)
    for (Object y = 0; y <= bound && comp.ok(); ++y)
      for (Object z = 0; z <= bound && comp.ok(); ++z)
        for (const auto& s : span.homset(x, y)) {
          if (!comp.ok()) break;
          for (const auto& t : span.homset(y, z))
            if (!(F(span.compose(s, t)) == m.compose(F(s), F(t)))) {
              comp.status = Status::Fail;
              comp.location = hom_location(x, z);
              comp.counterexample = span.format(s) + " ; " + span.format(t);
              break;
            }
        }

  auto structure = make_report(m, "structure", bound);
  for (Object x = 0; x <= bound && structure.ok(); ++x) {
    auto check = [&](const char* what, const Sp& s, const Mor<M>& r) {
      if (structure.ok() && !(F(s) == r)) {
        structure.status = Status::Fail;
        structure.location = hom_location(m.dom(r), m.cod(r));
        structure.counterexample = std::string(what) + " at " + std::to_string(x);
      }
    };
    if (span.tensor(x, x) != m.tensor(x, x)) {
      structure.status = Status::Fail;
      structure.counterexample = "tensor of objects at " + std::to_string(x);
      break;
    }
    check("identity", span.identity(x), m.identity(x));
    check("copy", span.copy(x), m.copy(x));
    check("discard", span.discard(x), m.discard(x));
    check("cocopy", span.cocopy(x), m.cocopy(x));
    check("codiscard", span.codiscard(x), m.codiscard(x));
    for (Object y = 0; y <= bound; ++y) check("symmetry", span.symmetry(x, y), m.symmetry(x, y));
  }

  std::size_t tb = std::min<std::size_t>(bound, 2);
  auto tens = make_report(m, "tensor", tb);
  for (Object x = 0; x <= tb && tens.ok(); ++x)
    for (Object y = 0; y <= tb && tens.ok(); ++y)
      for (Object u = 0; u <= tb && tens.ok(); ++u)
        for (Object v = 0; v <= tb && tens.ok(); ++v)
          for (const auto& s : span.homset(x, y)) {
            if (!tens.ok()) break;
            for (const auto& t : span.homset(u, v))
              if (!(F(span.tensor(s, t)) == m.tensor(F(s), F(t)))) {
                tens.status = Status::Fail;
                tens.location = hom_location(m.tensor(x, u), m.tensor(y, v));
                tens.counterexample = span.format(s) + " * " + span.format(t);
                break;
              }
          }

  out.checks = {bij, order, comp, tens, structure, faithful};
  return out;
}

}  // namespace cartbicat
