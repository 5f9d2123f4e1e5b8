#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cartbicat/fin_function.hpp"
#include "cartbicat/report.hpp"

namespace cartbicat {

template <class M>
concept CartesianBicategory = requires(const M& m, const typename M::Morphism& r, Object x) {
  typename M::Morphism;
  { m.name() } -> std::convertible_to<std::string>;
  { m.unit() } -> std::convertible_to<Object>;
  { m.tensor(x, x) } -> std::convertible_to<Object>;
  { m.tensor(r, r) } -> std::convertible_to<typename M::Morphism>;
  { m.identity(x) } -> std::convertible_to<typename M::Morphism>;
  { m.compose(r, r) } -> std::convertible_to<typename M::Morphism>;
  { m.leq(r, r) } -> std::convertible_to<bool>;
  { m.copy(x) } -> std::convertible_to<typename M::Morphism>;
  { m.discard(x) } -> std::convertible_to<typename M::Morphism>;
  { m.cocopy(x) } -> std::convertible_to<typename M::Morphism>;
  { m.codiscard(x) } -> std::convertible_to<typename M::Morphism>;
  { m.symmetry(x, x) } -> std::convertible_to<typename M::Morphism>;
  { m.opposite(r) } -> std::convertible_to<typename M::Morphism>;
  { m.dom(r) } -> std::convertible_to<Object>;
  { m.cod(r) } -> std::convertible_to<Object>;
  { m.format(r) } -> std::convertible_to<std::string>;
  { m.homset(x, x).size() } -> std::convertible_to<std::size_t>;
  { m.enough_maps_witness(r) } -> std::convertible_to<std::optional<typename M::Morphism>>;
  requires std::equality_comparable<typename M::Morphism>;
};

template <class M>
using Mor = typename M::Morphism;

// ---------------------------------------------------------------- derived structure

template <CartesianBicategory M>
Mor<M> seq(const M& m, const Mor<M>& a, const Mor<M>& b) {
  return m.compose(a, b);
}

template <CartesianBicategory M>
Mor<M> seq(const M& m, const Mor<M>& a, const Mor<M>& b, const Mor<M>& c) {
  return m.compose(m.compose(a, b), c);
}

template <CartesianBicategory M>
Mor<M> cup(const M& m, Object x) {
  return m.compose(m.codiscard(x), m.copy(x));
}

template <CartesianBicategory M>
Mor<M> cap(const M& m, Object x) {
  return m.compose(m.cocopy(x), m.discard(x));
}

/// (id_Y * cup_X) ; (id_Y * R * id_X) ; (cap_Y * id_X)
template <CartesianBicategory M>
Mor<M> opposite_via_compact(const M& m, const Mor<M>& r) {
  Object x = m.dom(r), y = m.cod(r);
  auto bend = m.tensor(m.identity(y), cup(m, x));
  auto middle = m.tensor(m.tensor(m.identity(y), r), m.identity(x));
  auto close = m.tensor(cap(m, y), m.identity(x));
  return seq(m, bend, middle, close);
}

template <CartesianBicategory M>
Mor<M> top(const M& m, Object x, Object y) {
  return m.compose(m.discard(x), m.codiscard(y));
}

template <CartesianBicategory M>
Mor<M> meet(const M& m, const Mor<M>& r, const Mor<M>& s) {
  return seq(m, m.copy(m.dom(r)), m.tensor(r, s), m.cocopy(m.cod(r)));
}

template <CartesianBicategory M>
bool leq_via_meet(const M& m, const Mor<M>& r, const Mor<M>& s) {
  return meet(m, r, s) == r;
}

struct Predicates {
  bool single_valued = false;
  bool total = false;
  bool injective = false;
  bool surjective = false;

  friend bool operator==(const Predicates&, const Predicates&) = default;
  bool is_map() const { return single_valued && total; }
};

/// The four defining inequalities.
template <CartesianBicategory M>
Predicates predicates(const M& m, const Mor<M>& r) {
  Object x = m.dom(r), y = m.cod(r);
  Predicates p;
  p.single_valued = m.leq(m.compose(m.copy(x), m.tensor(r, r)), m.compose(r, m.copy(y)));
  p.total = m.leq(m.discard(x), m.compose(r, m.discard(y)));
  p.injective = m.leq(m.compose(m.tensor(r, r), m.cocopy(y)), m.compose(m.cocopy(x), r));
  p.surjective = m.leq(m.codiscard(y), m.compose(m.codiscard(x), r));
  return p;
}

/// The characterisation through the opposite morphism.
template <CartesianBicategory M>
Predicates predicates_via_opposite(const M& m, const Mor<M>& r) {
  Object x = m.dom(r), y = m.cod(r);
  auto op = m.opposite(r);
  Predicates p;
  p.single_valued = m.leq(m.compose(op, r), m.identity(y));
  p.total = m.leq(m.identity(x), m.compose(r, op));
  p.injective = m.leq(m.compose(r, op), m.identity(x));
  p.surjective = m.leq(m.identity(y), m.compose(op, r));
  return p;
}

template <CartesianBicategory M>
bool is_single_valued(const M& m, const Mor<M>& r) {
  return m.leq(m.compose(m.copy(m.dom(r)), m.tensor(r, r)), m.compose(r, m.copy(m.cod(r))));
}

template <CartesianBicategory M>
bool is_total(const M& m, const Mor<M>& r) {
  return m.leq(m.discard(m.dom(r)), m.compose(r, m.discard(m.cod(r))));
}

template <CartesianBicategory M>
bool is_surjective(const M& m, const Mor<M>& r) {
  return m.leq(m.codiscard(m.cod(r)), m.compose(m.codiscard(m.dom(r)), r));
}

template <CartesianBicategory M>
bool is_map(const M& m, const Mor<M>& r) {
  return is_total(m, r) && is_single_valued(m, r);
}

/// g is right adjoint to f: id <= f;g and g;f <= id.
template <CartesianBicategory M>
bool is_right_adjoint(const M& m, const Mor<M>& f, const Mor<M>& g) {
  return m.leq(m.identity(m.dom(f)), m.compose(f, g)) &&
         m.leq(m.compose(g, f), m.identity(m.cod(f)));
}

struct AdjointResult {
  bool op_is_adjoint = false;
  std::size_t adjoints_found = 0;  // over the enumerated homset
  bool unique = false;
};

template <CartesianBicategory M>
AdjointResult right_adjoint_check(const M& m, const Mor<M>& f) {
  AdjointResult out;
  auto op = m.opposite(f);
  out.op_is_adjoint = is_right_adjoint(m, f, op);
  bool only_op = true;
  for (const auto& g : m.homset(m.cod(f), m.dom(f)))
    if (is_right_adjoint(m, f, g)) {
      ++out.adjoints_found;
      if (!(g == op)) only_op = false;
    }
  out.unique = only_op && out.adjoints_found == (out.op_is_adjoint ? 1u : 0u);
  return out;
}

template <CartesianBicategory M>
CheckReport make_report(const M& m, const std::string& check, std::size_t bound) {
  CheckReport r;
  r.check = check;
  r.model = m.name();
  r.bound = bound;
  return r;
}

// ---------------------------------------------------------------- map fragments

/// The maps between objects <= bound, with composition and surjectivity tables.
template <CartesianBicategory M>
class MapCategory {
 public:
  MapCategory(const M& m, std::size_t bound) : m_(m), bound_(bound) {
    std::size_t n = bound + 1;
    maps_.assign(n, std::vector<std::vector<Mor<M>>>(n));
    surjective_.assign(n, std::vector<std::vector<bool>>(n));
    for (Object x = 0; x < n; ++x)
      for (Object y = 0; y < n; ++y)
        for (const auto& r : m.homset(x, y))
          if (is_map(m, r)) {
            maps_[x][y].push_back(r);
            surjective_[x][y].push_back(is_surjective(m, r));
          }
    comp_.assign(n, std::vector<std::vector<std::vector<int>>>(n, std::vector<std::vector<int>>(n)));
    for (Object x = 0; x < n; ++x)
      for (Object y = 0; y < n; ++y)
        for (Object z = 0; z < n; ++z) {
          auto& table = comp_[x][y][z];
          table.reserve(maps_[x][y].size() * maps_[y][z].size());
          for (const auto& f : maps_[x][y])
            for (const auto& g : maps_[y][z]) table.push_back(index(x, z, m.compose(f, g)));
        }
    identity_.resize(n);
    for (Object x = 0; x < n; ++x) identity_[x] = index(x, x, m.identity(x));
  }

  const M& model() const { return m_; }
  std::size_t bound() const { return bound_; }
  const std::vector<Mor<M>>& maps(Object x, Object y) const { return maps_[x][y]; }
  std::size_t count(Object x, Object y) const { return maps_[x][y].size(); }
  bool surjective(Object x, Object y, std::size_t i) const { return surjective_[x][y][i]; }
  int identity(Object x) const { return identity_[x]; }

  /// Index of f;g, or -1 if the composite is not among the enumerated maps.
  int compose(Object x, Object y, Object z, std::size_t f, std::size_t g) const {
    return comp_[x][y][z][f * maps_[y][z].size() + g];
  }

  int index(Object x, Object y, const Mor<M>& r) const {
    const auto& v = maps_[x][y];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == r) return static_cast<int>(i);
    return -1;
  }

  /// Weak pullback in the fragment: every cone from a test object T <= bound over
  /// (h,k) factors through (f,g).
  bool is_weak_pullback(Object a, Object b, Object c, Object d, std::size_t f, std::size_t g,
                        std::size_t h, std::size_t k) const {
    for (Object t = 0; t <= bound_; ++t)
      for (std::size_t u = 0; u < count(t, b); ++u)
        for (std::size_t v = 0; v < count(t, c); ++v) {
          if (compose(t, b, d, u, h) != compose(t, c, d, v, k)) continue;
          bool found = false;
          for (std::size_t w = 0; w < count(t, a) && !found; ++w)
            found = compose(t, a, b, w, f) == static_cast<int>(u) &&
                    compose(t, a, c, w, g) == static_cast<int>(v);
          if (!found) return false;
        }
    return true;
  }

 private:
  const M& m_;
  std::size_t bound_;
  std::vector<std::vector<std::vector<Mor<M>>>> maps_;
  std::vector<std::vector<std::vector<bool>>> surjective_;
  std::vector<std::vector<std::vector<std::vector<int>>>> comp_;
  std::vector<int> identity_;
};

// ---------------------------------------------------------------- checkers

/// Maps are discretely ordered: f <= g implies f = g.
template <CartesianBicategory M>
CheckReport map_order_discrete_check(const MapCategory<M>& mc) {
  const auto& m = mc.model();
  auto rep = make_report(m, "map-order-discrete", mc.bound());
  for (Object x = 0; x <= mc.bound(); ++x)
    for (Object y = 0; y <= mc.bound(); ++y)
      for (const auto& f : mc.maps(x, y))
        for (const auto& g : mc.maps(x, y))
          if (!(f == g) && m.leq(f, g)) {
            rep.status = Status::Fail;
            rep.location = hom_location(x, y);
            rep.counterexample = m.format(f) + " <= " + m.format(g);
            return rep;
          }
  return rep;
}

template <CartesianBicategory M>
bool enough_maps_equation(const M& m, const Mor<M>& f, const Mor<M>& r) {
  return m.cod(f) == m.dom(r) && is_map(m, f) &&
         m.compose(m.opposite(f), m.discard(m.dom(f))) == r;
}

/// Every R : X -> I is op(f) ; discard for a map f : Z -> X. Uses the model's witness
/// construction and verifies it.
template <CartesianBicategory M>
CheckReport check_enough_maps(const M& m, std::size_t bound) {
  auto rep = make_report(m, "enough-maps", bound);
  for (Object x = 0; x <= bound; ++x)
    for (const auto& r : m.homset(x, m.unit())) {
      auto f = m.enough_maps_witness(r);
      if (!f || !enough_maps_equation(m, *f, r)) {
        rep.status = Status::Fail;
        rep.location = hom_location(x, m.unit());
        rep.counterexample = m.format(r);
        return rep;
      }
    }
  rep.witness = "model construction verified on every morphism into the unit";
  return rep;
}

/// Generic witness search over pivots Z <= pivot_bound.
template <CartesianBicategory M>
std::optional<Mor<M>> search_enough_maps(const M& m, const Mor<M>& r, std::size_t pivot_bound) {
  for (Object z = 0; z <= pivot_bound; ++z)
    for (const auto& f : m.homset(z, m.dom(r)))
      if (enough_maps_equation(m, f, r)) return f;
  return std::nullopt;
}

/// Every total R contains a map f <= R.
template <CartesianBicategory M>
CheckReport check_choice(const MapCategory<M>& mc) {
  const auto& m = mc.model();
  auto rep = make_report(m, "axiom-of-choice", mc.bound());
  for (Object x = 0; x <= mc.bound(); ++x)
    for (Object y = 0; y <= mc.bound(); ++y)
      for (const auto& r : m.homset(x, y)) {
        if (!is_total(m, r)) continue;
        bool found = false;
        for (const auto& f : mc.maps(x, y))
          if (m.leq(f, r)) {
            found = true;
            break;
          }
        if (!found) {
          rep.status = Status::Fail;
          rep.location = hom_location(x, y);
          rep.counterexample = m.format(r) + " is total but contains no map";
          return rep;
        }
      }
  return rep;
}

/// Surjective maps have a section among the maps.
template <CartesianBicategory M>
CheckReport surjectives_split_check(const MapCategory<M>& mc) {
  const auto& m = mc.model();
  auto rep = make_report(m, "surjective-maps-split", mc.bound());
  for (Object x = 0; x <= mc.bound(); ++x)
    for (Object y = 0; y <= mc.bound(); ++y)
      for (std::size_t p = 0; p < mc.count(x, y); ++p) {
        if (!mc.surjective(x, y, p)) continue;
        bool split = false;
        for (std::size_t g = 0; g < mc.count(y, x) && !split; ++g)
          split = mc.compose(y, x, y, g, p) == mc.identity(y);
        if (!split) {
          rep.status = Status::Fail;
          rep.location = hom_location(x, y);
          rep.counterexample = m.format(mc.maps(x, y)[p]) + " is surjective without a section";
          return rep;
        }
      }
  return rep;
}

/// A map is epi (R |-> pi;R injective on every homset out of its codomain) iff it is
/// surjective.
template <CartesianBicategory M>
CheckReport epi_iff_surjective_check(const MapCategory<M>& mc) {
  const auto& m = mc.model();
  auto rep = make_report(m, "epi-iff-surjective", mc.bound());
  for (Object x = 0; x <= mc.bound(); ++x)
    for (Object y = 0; y <= mc.bound(); ++y)
      for (std::size_t p = 0; p < mc.count(x, y); ++p) {
        const auto& pi = mc.maps(x, y)[p];
        bool epi = true;
        for (Object z = 0; z <= mc.bound() && epi; ++z) {
          std::map<Mor<M>, int> seen;
          std::vector<Mor<M>> images;
          const auto& hom = m.homset(y, z);
          for (std::size_t i = 0; i < hom.size() && epi; ++i) {
            auto c = m.compose(pi, hom[i]);
            for (const auto& prev : images)
              if (prev == c) {
                epi = false;
                break;
              }
            images.push_back(c);
          }
        }
        if (epi != mc.surjective(x, y, p)) {
          rep.status = Status::Fail;
          rep.location = hom_location(x, y);
          rep.counterexample = m.format(pi) + (epi ? " is epi but not surjective"
                                                   : " is surjective but not epi");
          return rep;
        }
      }
  return rep;
}

template <CartesianBicategory M>
struct Factorization {
  Object pivot;
  Mor<M> f;  // pivot -> X
  Mor<M> g;  // pivot -> Y
};

/// Least comap-map factorisation op(f);g = R, pivots by size then homset order.
template <CartesianBicategory M>
std::optional<Factorization<M>> comap_map_factorize(const M& m, const Mor<M>& r,
                                                    std::size_t pivot_bound) {
  Object x = m.dom(r), y = m.cod(r);
  for (Object z = 0; z <= pivot_bound; ++z) {
    std::vector<Mor<M>> fs, gs;
    for (const auto& f : m.homset(z, x))
      if (is_map(m, f)) fs.push_back(f);
    for (const auto& g : m.homset(z, y))
      if (is_map(m, g)) gs.push_back(g);
    for (const auto& f : fs) {
      auto opf = m.opposite(f);
      for (const auto& g : gs)
        if (m.compose(opf, g) == r) return Factorization<M>{z, f, g};
    }
  }
  return std::nullopt;
}

/// Factorisation through the enough-maps witness of the bent morphism
/// (R * id_Y) ; cap_Y : X * Y -> I, projected back to X and Y.
template <CartesianBicategory M>
std::optional<Factorization<M>> comap_map_factorize_fast(const M& m, const Mor<M>& r) {
  Object x = m.dom(r), y = m.cod(r);
  auto bent = m.compose(m.tensor(r, m.identity(y)), cap(m, y));
  auto h = m.enough_maps_witness(bent);
  if (!h) return std::nullopt;
  auto f = m.compose(*h, m.tensor(m.identity(x), m.discard(y)));
  auto g = m.compose(*h, m.tensor(m.discard(x), m.identity(y)));
  if (!(m.compose(m.opposite(f), g) == r)) return std::nullopt;
  return Factorization<M>{m.dom(*h), f, g};
}

/// Tameness: enough maps, and for every commuting square of maps f;h = g;k the
/// inequality h;op(k) <= op(f);g holds iff the square is a weak pullback of maps.
template <CartesianBicategory M>
CheckReport check_tame(const MapCategory<M>& mc) {
  const auto& m = mc.model();
  auto enough = check_enough_maps(m, mc.bound());
  auto rep = make_report(m, "tame", mc.bound());
  if (!enough.ok()) {
    rep.status = Status::Fail;
    rep.location = enough.location;
    rep.counterexample = "enough maps fails: " + enough.counterexample;
    return rep;
  }
  std::size_t n = mc.bound();
  std::size_t squares = 0;
  for (Object a = 0; a <= n; ++a)
    for (Object b = 0; b <= n; ++b)
      for (Object c = 0; c <= n; ++c)
        for (Object d = 0; d <= n; ++d)
          for (std::size_t f = 0; f < mc.count(a, b); ++f)
            for (std::size_t g = 0; g < mc.count(a, c); ++g)
              for (std::size_t h = 0; h < mc.count(b, d); ++h)
                for (std::size_t k = 0; k < mc.count(c, d); ++k) {
                  if (mc.compose(a, b, d, f, h) != mc.compose(a, c, d, g, k)) continue;
                  ++squares;
                  const auto& F = mc.maps(a, b)[f];
                  const auto& G = mc.maps(a, c)[g];
                  const auto& H = mc.maps(b, d)[h];
                  const auto& K = mc.maps(c, d)[k];
                  bool ineq = m.leq(m.compose(H, m.opposite(K)), m.compose(m.opposite(F), G));
                  bool weak = mc.is_weak_pullback(a, b, c, d, f, g, h, k);
                  if (ineq != weak) {
                    rep.status = Status::Fail;
                    rep.counterexample = "square f=" + m.format(F) + " g=" + m.format(G) +
                                         " h=" + m.format(H) + " k=" + m.format(K) +
                                         (weak ? ": weak pullback without the inequality"
                                               : ": inequality without weak pullback");
                    return rep;
                  }
                }
  rep.witness = std::to_string(squares) + " commuting squares";
  return rep;
}

}  // namespace cartbicat
