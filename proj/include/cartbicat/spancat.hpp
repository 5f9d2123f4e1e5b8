#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cartbicat/cover_system.hpp"
#include "cartbicat/fincat.hpp"
#include "cartbicat/partition.hpp"

namespace cartbicat {

template <class B>
struct is_opposite : std::false_type {};
template <class B>
struct is_opposite<Opposite<B>> : std::true_type {};

/// X <-left- A -right-> Y over the base B.
template <class B>
struct Span {
  using Arrow = typename B::Arrow;
  Object apex = 0;
  Arrow left;
  Arrow right;

  Object dom() const { return B::cod(left); }
  Object cod() const { return B::cod(right); }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

template <class B>
struct OrderWitness {
  Object pivot = 0;
  typename B::Arrow cover;     // pivot -> apex of the smaller span
  typename B::Arrow mediator;  // pivot -> apex of the larger span
};

namespace detail {

inline std::string table_string(const std::vector<Element>& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    if (t[i] == kUndefined)
      os << '*';
    else
      os << t[i];
  }
  os << ']';
  return os.str();
}

template <class Arrow>
const std::vector<Element>& raw_table(const Arrow& f) {
  if constexpr (requires { f.fn; })
    return f.fn.table();
  else
    return f.table();
}

}  // namespace detail

/// Spans print as `X <-[t]- A -[t]-> Y`; over an opposite base, as the cospan
/// `X -[t]-> A <-[t]- Y` of base functions.
template <class B>
std::string format_span(const Span<B>& s) {
  std::ostringstream os;
  auto l = detail::table_string(detail::raw_table(s.left));
  auto r = detail::table_string(detail::raw_table(s.right));
  if constexpr (is_opposite<B>::value)
    os << s.dom() << " -" << l << "-> " << s.apex << " <-" << r << "- " << s.cod();
  else
    os << s.dom() << " <-" << l << "- " << s.apex << " -" << r << "-> " << s.cod();
  return os.str();
}

template <class B>
void require_parallel(const Span<B>& s, const Span<B>& t) {
  if (s.dom() != t.dom() || s.cod() != t.cod())
    throw CompositionError("spans are not parallel: " + format_span(s) + " vs " + format_span(t));
}

/// Composition through the canonical pullback of s.right and t.left.
template <class B>
Span<B> span_compose(const Span<B>& s, const Span<B>& t) {
  if (s.cod() != t.dom())
    throw CompositionError("cannot compose " + format_span(s) + " with " + format_span(t));
  auto pb = B::pullback(s.right, t.left);
  return {pb.apex, B::compose(pb.first, s.left), B::compose(pb.second, t.right)};
}

template <class B>
Span<B> span_tensor(const Span<B>& s, const Span<B>& t) {
  auto apex = B::product(s.apex, t.apex).apex;
  return {apex, product_arrow<B>(s.left, t.left), product_arrow<B>(s.right, t.right)};
}

template <class B>
Span<B> span_of_arrow(const typename B::Arrow& f) {
  return {B::dom(f), B::identity(B::dom(f)), f};
}

template <class B>
Span<B> span_reverse(const Span<B>& s) {
  return {s.apex, s.right, s.left};
}

template <class B>
struct StructuralSpans {
  Span<B> copy, discard, cocopy, codiscard, cup, cap, sym;
};

template <class B>
StructuralSpans<B> structural_constants(Object x) {
  auto id = B::identity(x);
  auto delta = diagonal<B>(x);
  auto bang = B::to_terminal(x);
  Span<B> copy{x, id, delta};
  Span<B> discard{x, id, bang};
  Span<B> cup{x, bang, delta};
  Span<B> sym{B::product(x, x).apex, B::identity(B::product(x, x).apex), swap<B>(x, x)};
  return {copy, discard, span_reverse(copy), span_reverse(discard), cup, span_reverse(cup), sym};
}

/// Fast decision: with P the pullback of the two tuplings into X x Y, a witness
/// exists iff the projection P -> A_s is a cover (any witness factors through P and
/// covers are right-cancellable).
template <class B>
std::optional<OrderWitness<B>> span_leq(const Span<B>& s, const Span<B>& t,
                                        const CoverSystem<B>& S) {
  require_parallel(s, t);
  auto pb = B::pullback(B::pairing(s.left, s.right), B::pairing(t.left, t.right));
  if (!S(pb.first)) return std::nullopt;
  return OrderWitness<B>{pb.apex, pb.first, pb.second};
}

/// Searches subobjects of A_s x A_t (jointly monic cones) for the least witness.
template <class B>
std::optional<OrderWitness<B>> span_leq_subobject_search(const Span<B>& s, const Span<B>& t,
                                                         const CoverSystem<B>& S) {
  require_parallel(s, t);
  for (const auto& c : B::jointly_monic_cones(s.apex, t.apex)) {
    if (!S(c.first)) continue;
    if (B::compose(c.first, s.left) == B::compose(c.second, t.left) &&
        B::compose(c.first, s.right) == B::compose(c.second, t.right))
      return OrderWitness<B>{c.apex, c.first, c.second};
  }
  return std::nullopt;
}

/// The plain span preorder: some alpha: A_s -> A_t commutes with both legs.
template <class B>
std::optional<typename B::Arrow> span_leq_direct(const Span<B>& s, const Span<B>& t) {
  require_parallel(s, t);
  for (const auto& alpha : B::arrows(s.apex, t.apex))
    if (B::compose(alpha, t.left) == s.left && B::compose(alpha, t.right) == s.right)
      return alpha;
  return std::nullopt;
}

template <class B>
bool span_equiv(const Span<B>& s, const Span<B>& t, const CoverSystem<B>& S) {
  return span_leq(s, t, S).has_value() && span_leq(t, s, S).has_value();
}

/// Canonical representative of the class of s: the image span when its epi part is a
/// cover, otherwise the least span of minimal apex (lexicographic legs) equivalent to s.
template <class B>
Span<B> normalize(const Span<B>& s, const CoverSystem<B>& S) {
  auto prod = B::product(s.dom(), s.cod());
  auto fac = B::image_factor(B::pairing(s.left, s.right));
  Object k = B::dom(fac.m);
  Span<B> image{k, B::compose(fac.m, prod.first), B::compose(fac.m, prod.second)};
  if (S(fac.e)) return image;
  for (Object n = k; n <= s.apex; ++n) {
    auto lefts = B::arrows(n, s.dom());
    auto rights = B::arrows(n, s.cod());
    std::sort(lefts.begin(), lefts.end());
    std::sort(rights.begin(), rights.end());
    for (const auto& l : lefts)
      for (const auto& r : rights) {
        Span<B> cand{n, l, r};
        if (span_equiv(cand, s, S)) return cand;
      }
  }
  return s;
}

/// All classes X -> Y: normalised jointly monic cones plus apex paddings of up to 2
/// (an empty apex is padded by any arrow into it).
template <class B>
std::vector<Span<B>> enumerate_classes(Object x, Object y, const CoverSystem<B>& S) {
  std::vector<Span<B>> out;
  for (const auto& c : B::jointly_monic_cones(x, y)) {
    out.push_back(normalize(Span<B>{c.apex, c.first, c.second}, S));
    for (Object j = 1; j <= 2; ++j)
      for (const auto& pad : c.apex == 0 ? B::arrows(j, 0) : B::split_epi_extensions(c.apex, j))
        out.push_back(
            normalize(Span<B>{B::dom(pad), B::compose(pad, c.first), B::compose(pad, c.second)}, S));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The cartesian bicategory Span^S(B); with split-epi covers this is Span~(B), and over
/// an opposite base it is the cospan construction. Morphisms are canonical spans.
template <class B>
class SpanModel {
 public:
  using Base = B;
  using Arrow = typename B::Arrow;
  using Morphism = Span<B>;

  SpanModel(CoverSystem<B> covers, std::string name)
      : covers_(std::move(covers)), name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const CoverSystem<B>& covers() const { return covers_; }

  Object unit() const { return B::terminal(); }
  Object tensor(Object a, Object b) const { return B::product(a, b).apex; }
  Object dom(const Morphism& s) const { return s.dom(); }
  Object cod(const Morphism& s) const { return s.cod(); }

  Morphism normal(const Span<B>& s) const { return normalize(s, covers_); }
  Morphism embed(const Arrow& f) const { return normal(span_of_arrow<B>(f)); }

  Morphism identity(Object x) const { return embed(B::identity(x)); }
  Morphism compose(const Morphism& s, const Morphism& t) const {
    return normal(span_compose(s, t));
  }
  Morphism tensor(const Morphism& s, const Morphism& t) const { return normal(span_tensor(s, t)); }
  bool leq(const Morphism& s, const Morphism& t) const {
    return span_leq(s, t, covers_).has_value();
  }
  std::optional<OrderWitness<B>> witness(const Morphism& s, const Morphism& t) const {
    return span_leq(s, t, covers_);
  }

  Morphism copy(Object x) const { return normal(structural_constants<B>(x).copy); }
  Morphism discard(Object x) const { return normal(structural_constants<B>(x).discard); }
  Morphism cocopy(Object x) const { return normal(structural_constants<B>(x).cocopy); }
  Morphism codiscard(Object x) const { return normal(structural_constants<B>(x).codiscard); }
  Morphism symmetry(Object x, Object y) const { return embed(swap<B>(x, y)); }
  Morphism opposite(const Morphism& s) const { return normal(span_reverse(s)); }

  const std::vector<Morphism>& homset(Object x, Object y) const {
    auto key = std::make_pair(x, y);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, enumerate_classes<B>(x, y, covers_)).first;
    return it->second;
  }

  /// R : X -> I equals op(f) ; discard for f the left leg seen as a map.
  std::optional<Morphism> enough_maps_witness(const Morphism& r) const {
    if (r.cod() != unit()) return std::nullopt;
    return embed(r.left);
  }

  std::string format(const Morphism& s) const {
    return format_span(s) + " @" + covers_.name;
  }

 private:
  CoverSystem<B> covers_;
  std::string name_;
  mutable std::map<std::pair<Object, Object>, std::vector<Morphism>> cache_;
};

/// Rel(C) for the regular category FinSet: jointly monic spans, composition by
/// pullback followed by image, order by existence of a mediating arrow.
class RegularRelModel {
 public:
  using Base = FinSet;
  using Arrow = FinFunction;
  using Morphism = Span<FinSet>;

  std::string name() const { return "rel-of-finset"; }
  Object unit() const { return 1; }
  Object tensor(Object a, Object b) const { return a * b; }
  Object dom(const Morphism& s) const { return s.dom(); }
  Object cod(const Morphism& s) const { return s.cod(); }

  static Morphism image(const Span<FinSet>& s) {
    auto prod = FinSet::product(s.dom(), s.cod());
    auto fac = FinSet::image_factor(FinSet::pairing(s.left, s.right));
    Object k = fac.m.dom();
    return {k, cartbicat::compose(fac.m, prod.first), cartbicat::compose(fac.m, prod.second)};
  }

  Morphism embed(const FinFunction& f) const { return image(span_of_arrow<FinSet>(f)); }
  Morphism identity(Object x) const { return embed(FinSet::identity(x)); }
  Morphism compose(const Morphism& s, const Morphism& t) const {
    return image(span_compose(s, t));
  }
  Morphism tensor(const Morphism& s, const Morphism& t) const { return image(span_tensor(s, t)); }
  /// Inclusion of relations: every leg pair of s occurs in t (pointwise choice of alpha).
  bool leq(const Morphism& s, const Morphism& t) const {
    require_parallel(s, t);
    for (Element a = 0; a < s.apex; ++a) {
      bool found = false;
      for (Element b = 0; b < t.apex && !found; ++b)
        found = s.left(a) == t.left(b) && s.right(a) == t.right(b);
      if (!found) return false;
    }
    return true;
  }
  Morphism copy(Object x) const { return image(structural_constants<FinSet>(x).copy); }
  Morphism discard(Object x) const { return image(structural_constants<FinSet>(x).discard); }
  Morphism cocopy(Object x) const { return image(structural_constants<FinSet>(x).cocopy); }
  Morphism codiscard(Object x) const { return image(structural_constants<FinSet>(x).codiscard); }
  Morphism symmetry(Object x, Object y) const {
    return image(span_of_arrow<FinSet>(swap<FinSet>(x, y)));
  }
  Morphism opposite(const Morphism& s) const { return image(span_reverse(s)); }

  const std::vector<Morphism>& homset(Object x, Object y) const {
    auto key = std::make_pair(x, y);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<Morphism> out;
    for (const auto& c : FinSet::jointly_monic_cones(x, y)) out.push_back({c.apex, c.first, c.second});
    std::sort(out.begin(), out.end());
    return cache_.emplace(key, std::move(out)).first->second;
  }
  std::optional<Morphism> enough_maps_witness(const Morphism& r) const {
    if (r.cod() != 1) return std::nullopt;
    return image(span_of_arrow<FinSet>(r.left));
  }
  std::string format(const Morphism& s) const { return format_span(s); }

 private:
  mutable std::map<std::pair<Object, Object>, std::vector<Morphism>> cache_;
};

}  // namespace cartbicat
