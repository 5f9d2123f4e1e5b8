#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartbicat/fin_function.hpp"

namespace cartbicat {

template <class Arrow>
struct Cone {
  Object apex;
  Arrow first;
  Arrow second;
};

/// An epi-mono style factorisation f = e ; m.
template <class Arrow>
struct Factorisation {
  Arrow e;
  Arrow m;
};

struct CommutingSquare {
  FinFunction f;  // A -> B
  FinFunction g;  // A -> C
  FinFunction h;  // B -> D
  FinFunction k;  // C -> D
};

/// Finite sets and total functions. Products and pullbacks enumerate pairs
/// lexicographically, (a,b) |-> a*|B| + b.
struct FinSet {
  using Arrow = FinFunction;

  static std::string name() { return "FinSet"; }
  static Object dom(const Arrow& f) { return f.dom(); }
  static Object cod(const Arrow& f) { return f.cod(); }
  static Arrow identity(Object a) { return FinFunction::identity(a); }
  static Arrow compose(const Arrow& f, const Arrow& g) { return cartbicat::compose(f, g); }
  static std::vector<Arrow> arrows(Object a, Object b) { return all_functions(a, b); }
  static std::string format(const Arrow& f) { return to_string(f); }

  static Object terminal() { return 1; }
  static Arrow to_terminal(Object a) { return FinFunction::constant(a, 1, 0); }
  static Object initial() { return 0; }
  static Arrow from_initial(Object a) { return FinFunction::empty(a); }

  static Cone<Arrow> product(Object a, Object b);
  static Arrow pairing(const Arrow& f, const Arrow& g);
  static Cone<Arrow> pullback(const Arrow& f, const Arrow& g);

  static Cone<Arrow> coproduct(Object a, Object b);
  static Arrow copairing(const Arrow& f, const Arrow& g);
  /// Quotient of B+C by f(a) ~ g(a); classes numbered by least element.
  static Cone<Arrow> pushout(const Arrow& f, const Arrow& g);

  /// e surjective, m injective, image listed in increasing order.
  static Factorisation<Arrow> image_factor(const Arrow& f);
  /// As image_factor, but image points numbered by first occurrence along the domain.
  static Factorisation<Arrow> occurrence_factor(const Arrow& f);

  static bool is_epi(const Arrow& f) { return f.is_surjective(); }
  static bool is_mono(const Arrow& f) { return f.is_injective(); }
  static bool is_split_epi(const Arrow& f) { return f.is_surjective(); }
  static bool is_split_mono(const Arrow& f) {
    return f.is_injective() && (f.dom() > 0 || f.cod() == 0);
  }
  static bool is_iso(const Arrow& f) { return f.is_bijective(); }

  /// Least-preimage section s with s ; f = id, if f is surjective.
  static std::optional<Arrow> section(const Arrow& f);
  /// Some r with f ; r = id, if f is a split mono.
  static std::optional<Arrow> retraction(const Arrow& f);
  static Arrow inverse(const Arrow& f);

  /// Subsets of a x b as cones (apex = subset size), subsets in lexicographic order.
  static std::vector<Cone<Arrow>> jointly_monic_cones(Object a, Object b);
  /// Set partitions of a+b as cocones into their block sets.
  static std::vector<Cone<Arrow>> jointly_epic_cocones(Object a, Object b);
  /// Split epis (p+j) -> p restricting to the identity on the first p points.
  static std::vector<Arrow> split_epi_extensions(Object p, Object j);
  /// The inclusion p -> p+j.
  static std::vector<Arrow> split_mono_extensions(Object p, Object j);

  /// Comparison from the apex into the canonical pullback of (h,k) is surjective.
  static bool is_weak_pullback(const CommutingSquare& sq);
  /// Comparison from the canonical pushout of (f,g) into the apex is injective.
  static bool is_weak_pushout(const CommutingSquare& sq);
};

struct ClassifyResult {
  bool injective;
  bool surjective;
  std::optional<FinFunction> section;
};

ClassifyResult classify(const FinFunction& f);

/// Pointed finite sets, i.e. finite sets with partial functions. Only colimits are
/// needed: the base is always used through its opposite.
struct PointedFinSet {
  using Arrow = FinPartialFunction;

  static std::string name() { return "FinSet_p"; }
  static Object dom(const Arrow& f) { return f.dom(); }
  static Object cod(const Arrow& f) { return f.cod(); }
  static Arrow identity(Object a) { return FinPartialFunction::identity(a); }
  static Arrow compose(const Arrow& f, const Arrow& g) { return cartbicat::compose(f, g); }
  static std::vector<Arrow> arrows(Object a, Object b) { return all_partial_functions(a, b); }
  static std::string format(const Arrow& f) { return to_string(f); }

  /// 0 (only the basepoint) is a zero object.
  static Object initial() { return 0; }
  static Arrow from_initial(Object a) { return FinPartialFunction::empty(a); }
  static Object terminal() { return 0; }
  static Arrow to_terminal(Object a) { return FinPartialFunction::undefined(a, 0); }

  /// Wedge sum: size a+b.
  static Cone<Arrow> coproduct(Object a, Object b);
  static Arrow copairing(const Arrow& f, const Arrow& g);
  /// Pushout of pointed sets; points glued to the basepoint become undefined.
  static Cone<Arrow> pushout(const Arrow& f, const Arrow& g);

  /// e partial onto the image (numbered by first occurrence), m total injective.
  static Factorisation<Arrow> occurrence_factor(const Arrow& f);
  static Factorisation<Arrow> image_factor(const Arrow& f) { return occurrence_factor(f); }

  static bool is_epi(const Arrow& f) { return f.is_surjective(); }
  static bool is_mono(const Arrow& f) { return f.is_total() && f.is_injective(); }
  static bool is_split_epi(const Arrow& f) { return f.is_surjective(); }
  static bool is_split_mono(const Arrow& f) { return f.is_total() && f.is_injective(); }
  static bool is_iso(const Arrow& f) {
    return f.dom() == f.cod() && f.is_total() && f.is_injective();
  }
  static Arrow inverse(const Arrow& f);

  /// Partial partitions of a+b as cocones into their block sets.
  static std::vector<Cone<Arrow>> jointly_epic_cocones(Object a, Object b);
  static std::vector<Arrow> split_mono_extensions(Object p, Object j);

  /// Comparison from the canonical pushout into the apex is total and injective.
  static bool is_weak_pushout(const Arrow& f, const Arrow& g, const Arrow& h, const Arrow& k);
};

/// Pushout of pointed sets (same as PointedFinSet::pushout).
Cone<FinPartialFunction> pushout_pointed(const FinPartialFunction& f, const FinPartialFunction& g);

/// The formal opposite of a base category. An arrow a -> b wraps a base arrow b -> a.
template <class B>
struct Opposite {
  struct Arrow {
    typename B::Arrow fn;
    Object dom() const { return B::cod(fn); }
    Object cod() const { return B::dom(fn); }
    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
  };
  using Base = B;

  static std::string name() { return B::name() + "^op"; }
  static Object dom(const Arrow& f) { return f.dom(); }
  static Object cod(const Arrow& f) { return f.cod(); }
  static Arrow identity(Object a) { return {B::identity(a)}; }
  static Arrow compose(const Arrow& f, const Arrow& g) { return {B::compose(g.fn, f.fn)}; }
  static std::vector<Arrow> arrows(Object a, Object b) {
    std::vector<Arrow> out;
    for (auto& fn : B::arrows(b, a)) out.push_back({std::move(fn)});
    return out;
  }
  static std::string format(const Arrow& f) { return "op " + B::format(f.fn); }

  static Object terminal() { return B::initial(); }
  static Arrow to_terminal(Object a) { return {B::from_initial(a)}; }

  static Cone<Arrow> product(Object a, Object b) {
    auto c = B::coproduct(a, b);
    return {c.apex, {c.first}, {c.second}};
  }
  static Arrow pairing(const Arrow& f, const Arrow& g) { return {B::copairing(f.fn, g.fn)}; }
  static Cone<Arrow> pullback(const Arrow& f, const Arrow& g) {
    auto c = B::pushout(f.fn, g.fn);
    return {c.apex, {c.first}, {c.second}};
  }

  static Factorisation<Arrow> image_factor(const Arrow& f) {
    auto fac = B::occurrence_factor(f.fn);
    return {{fac.m}, {fac.e}};
  }
  static Factorisation<Arrow> occurrence_factor(const Arrow& f) { return image_factor(f); }

  static bool is_epi(const Arrow& f) { return B::is_mono(f.fn); }
  static bool is_mono(const Arrow& f) { return B::is_epi(f.fn); }
  static bool is_split_epi(const Arrow& f) { return B::is_split_mono(f.fn); }
  static bool is_split_mono(const Arrow& f) { return B::is_split_epi(f.fn); }
  static bool is_iso(const Arrow& f) { return B::is_iso(f.fn); }
  static Arrow inverse(const Arrow& f) { return {B::inverse(f.fn)}; }

  static std::vector<Cone<Arrow>> jointly_monic_cones(Object a, Object b) {
    std::vector<Cone<Arrow>> out;
    for (auto& c : B::jointly_epic_cocones(a, b)) out.push_back({c.apex, {c.first}, {c.second}});
    return out;
  }
  static std::vector<Arrow> split_epi_extensions(Object p, Object j) {
    std::vector<Arrow> out;
    for (auto& fn : B::split_mono_extensions(p, j)) out.push_back({std::move(fn)});
    return out;
  }
};

using FinSetOp = Opposite<FinSet>;
using PointedFinSetOp = Opposite<PointedFinSet>;

/// f x g via pairing of the projections.
template <class B>
typename B::Arrow product_arrow(const typename B::Arrow& f, const typename B::Arrow& g) {
  auto src = B::product(B::dom(f), B::dom(g));
  return B::pairing(B::compose(src.first, f), B::compose(src.second, g));
}

template <class B>
typename B::Arrow swap(Object a, Object b) {
  auto p = B::product(a, b);
  return B::pairing(p.second, p.first);
}

template <class B>
typename B::Arrow diagonal(Object a) {
  return B::pairing(B::identity(a), B::identity(a));
}

}  // namespace cartbicat
