#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cartbicat/spancat.hpp"

namespace cartbicat {

namespace detail {

/// FinSet: a witness with pivot n is a list of n pairs (a,b) with the legs of a in s
/// matching the legs of b in t. Only the multiset matters, so lists are nondecreasing.
inline bool finset_witness_search(const Span<FinSet>& s, const Span<FinSet>& t,
                                  const CoverSystem<FinSet>& S, Object pivot_bound,
                                  bool covers_are_surjective) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < s.apex; ++a)
    for (Element b = 0; b < t.apex; ++b)
      if (s.left(a) == t.left(b) && s.right(a) == t.right(b)) pairs.emplace_back(a, b);

  std::vector<std::size_t> chosen;
  auto test = [&](Object n) {
    // the mediator is pairs[chosen[i]].second; commutation holds by construction
    std::vector<Element> pi(n);
    for (Object i = 0; i < n; ++i) pi[i] = pairs[chosen[i]].first;
    return S(FinFunction(n, s.apex, std::move(pi)));
  };
  // suffix_cover[k]: apex points of s reachable from pairs k..end
  std::vector<std::vector<bool>> suffix_cover(pairs.size() + 1, std::vector<bool>(s.apex, false));
  for (std::size_t k = pairs.size(); k-- > 0;) {
    suffix_cover[k] = suffix_cover[k + 1];
    suffix_cover[k][pairs[k].first] = true;
  }
  std::vector<int> covered(s.apex, 0);
  std::size_t uncovered = s.apex;

  auto dfs = [&](auto&& self, Object n, std::size_t from) -> bool {
    if (chosen.size() == n) return test(n);
    if (covers_are_surjective) {
      if (n - chosen.size() < uncovered) return false;
      for (Element a = 0; a < s.apex; ++a)
        if (!covered[a] && !suffix_cover[from][a]) return false;
    }
    for (std::size_t k = from; k < pairs.size(); ++k) {
      chosen.push_back(k);
      if (covered[pairs[k].first]++ == 0) --uncovered;
      bool found = self(self, n, k);
      if (--covered[pairs[k].first] == 0) ++uncovered;
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (Object n = 0; n <= pivot_bound; ++n)
    if (dfs(dfs, n, 0)) return true;
  return false;
}

/// FinSet^op: a witness with pivot n is a function A_s + A_t -> n (pi on the first
/// block, alpha on the second). Up to relabelling n it is a restricted growth string
/// with fewer than n labels.
template <class Cov>
bool finset_op_witness_search(const Span<FinSetOp>& s, const Span<FinSetOp>& t, const Cov& S,
                              Object pivot_bound) {
  Object m = s.apex + t.apex;
  for (Object n = 0; n <= pivot_bound; ++n) {
    std::vector<Element> labels;
    auto check = [&]() {
      std::vector<Element> pi(labels.begin(), labels.begin() + s.apex);
      std::vector<Element> alpha(labels.begin() + s.apex, labels.end());
      FinFunction p(s.apex, n, std::move(pi)), a(t.apex, n, std::move(alpha));
      if (!S(FinSetOp::Arrow{p})) return false;
      return compose(s.left.fn, p) == compose(t.left.fn, a) &&
             compose(s.right.fn, p) == compose(t.right.fn, a);
    };
    auto dfs = [&](auto&& self, Element used) -> bool {
      if (labels.size() == m) return check();
      for (Element l = 0; l <= used && l < n; ++l) {
        labels.push_back(l);
        bool found = self(self, l == used ? used + 1 : used);
        labels.pop_back();
        if (found) return true;
      }
      return false;
    };
    if (dfs(dfs, 0)) return true;
  }
  return false;
}

}  // namespace detail

/// Exhaustive search for an order witness with pivots up to pivot_bound.
template <class B>
bool brute_force_leq(const Span<B>& s, const Span<B>& t, const CoverSystem<B>& S,
                     Object pivot_bound) {
  require_parallel(s, t);
  if constexpr (std::is_same_v<B, FinSet>) {
    bool surjective = S.tag == CoverTag::SplitEpi || S.tag == CoverTag::RegularEpi ||
                      S.tag == CoverTag::AllSurjections;
    return detail::finset_witness_search(s, t, S, pivot_bound, surjective);
  } else {
    static_assert(std::is_same_v<B, FinSetOp>, "oracle covers FinSet and FinSet^op");
    return detail::finset_op_witness_search(s, t, S, pivot_bound);
  }
}

/// |A||B| + 2 bounds subobjects of a product; over FinSet^op the pivot is a quotient of
/// A + B, which can be larger when an apex is empty.
inline Object default_pivot_bound(Object a, Object b) { return std::max(a * b, a + b) + 2; }

/// A random span X <- A -> Y with A <= max_apex; X, Y are given.
template <class B>
Span<B> random_span(std::mt19937& rng, Object x, Object y, Object max_apex) {
  auto pick = [&](Object lo, Object hi) {
    return static_cast<Object>(std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
  };
  auto random_fn = [&](Object dom, Object cod) {
    std::vector<Element> t(dom);
    for (auto& e : t) e = static_cast<Element>(pick(0, cod - 1));
    return FinFunction(dom, cod, std::move(t));
  };
  if constexpr (std::is_same_v<B, FinSet>) {
    Object a = (x == 0 || y == 0) ? 0 : pick(0, max_apex);
    return {a, random_fn(a, x), random_fn(a, y)};
  } else {
    Object a = (x + y == 0) ? pick(0, max_apex) : pick(1, max_apex);
    return {a, {random_fn(x, a)}, {random_fn(y, a)}};
  }
}

struct OracleReport {
  std::string base;
  std::string covers;
  std::size_t pairs = 0;
  std::size_t positives = 0;  // pairs with s <= t
  std::size_t disagreements = 0;
  std::string first_disagreement;
};

/// Random parallel pairs (boundaries <= 2, apexes <= 3): the fast decision, the
/// subobject search and the brute force must agree.
template <class B>
OracleReport cross_check_span_leq(const CoverSystem<B>& S, std::size_t pairs, unsigned seed) {
  std::mt19937 rng(seed);
  OracleReport rep;
  rep.base = B::name();
  rep.covers = S.name;
  rep.pairs = pairs;
  for (std::size_t i = 0; i < pairs; ++i) {
    Object x = std::uniform_int_distribution<Object>(0, 2)(rng);
    Object y = std::uniform_int_distribution<Object>(0, 2)(rng);
    auto s = random_span<B>(rng, x, y, 3);
    auto t = random_span<B>(rng, x, y, 3);
    bool fast = span_leq(s, t, S).has_value();
    bool search = span_leq_subobject_search(s, t, S).has_value();
    bool brute = brute_force_leq(s, t, S, default_pivot_bound(s.apex, t.apex));
    if (brute) ++rep.positives;
    if (fast != brute || search != brute) {
      if (rep.disagreements++ == 0)
        rep.first_disagreement = format_span(s) + " vs " + format_span(t);
    }
  }
  return rep;
}

}  // namespace cartbicat
