#include "cartbicat/fincat.hpp"

#include <algorithm>

#include "cartbicat/partition.hpp"

namespace cartbicat {

namespace {

Element el(std::size_t v) { return static_cast<Element>(v); }

void require_same_cod(Object a, Object b, const char* what) {
  if (a != b)
    throw CompositionError(std::string(what) + ": codomains differ (" + std::to_string(a) +
                           " vs " + std::to_string(b) + ")");
}

void require_same_dom(Object a, Object b, const char* what) {
  if (a != b)
    throw CompositionError(std::string(what) + ": domains differ (" + std::to_string(a) +
                           " vs " + std::to_string(b) + ")");
}

}  // namespace

Cone<FinFunction> FinSet::product(Object a, Object b) {
  std::vector<Element> p1(a * b), p2(a * b);
  for (Object i = 0; i < a * b; ++i) {
    p1[i] = el(i / b);
    p2[i] = el(i % b);
  }
  return {a * b, FinFunction(a * b, a, std::move(p1)), FinFunction(a * b, b, std::move(p2))};
}

FinFunction FinSet::pairing(const FinFunction& f, const FinFunction& g) {
  require_same_dom(f.dom(), g.dom(), "pairing");
  std::vector<Element> t(f.dom());
  for (Object i = 0; i < f.dom(); ++i) t[i] = el(f(i) * g.cod() + g(i));
  return FinFunction(f.dom(), f.cod() * g.cod(), std::move(t));
}

Cone<FinFunction> FinSet::pullback(const FinFunction& f, const FinFunction& g) {
  require_same_cod(f.cod(), g.cod(), "pullback");
  std::vector<Element> p, q;
  for (Object a = 0; a < f.dom(); ++a)
    for (Object b = 0; b < g.dom(); ++b)
      if (f(a) == g(b)) {
        p.push_back(el(a));
        q.push_back(el(b));
      }
  Object n = p.size();
  return {n, FinFunction(n, f.dom(), std::move(p)), FinFunction(n, g.dom(), std::move(q))};
}

Cone<FinFunction> FinSet::coproduct(Object a, Object b) {
  std::vector<Element> i1(a), i2(b);
  for (Object i = 0; i < a; ++i) i1[i] = el(i);
  for (Object i = 0; i < b; ++i) i2[i] = el(a + i);
  return {a + b, FinFunction(a, a + b, std::move(i1)), FinFunction(b, a + b, std::move(i2))};
}

FinFunction FinSet::copairing(const FinFunction& f, const FinFunction& g) {
  require_same_cod(f.cod(), g.cod(), "copairing");
  std::vector<Element> t = f.table();
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinFunction(f.dom() + g.dom(), f.cod(), std::move(t));
}

Cone<FinFunction> FinSet::pushout(const FinFunction& f, const FinFunction& g) {
  require_same_dom(f.dom(), g.dom(), "pushout");
  Object nb = f.cod(), nc = g.cod();
  DisjointSets sets(nb + nc);
  for (Object a = 0; a < f.dom(); ++a) sets.unite(f(a), nb + g(a));
  std::vector<std::size_t> all(nb + nc);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto labels = labels_from_sets(sets, all);
  Object apex = block_count(labels);
  std::vector<Element> i1(labels.begin(), labels.begin() + nb);
  std::vector<Element> i2(labels.begin() + nb, labels.end());
  return {apex, FinFunction(nb, apex, std::move(i1)), FinFunction(nc, apex, std::move(i2))};
}

Factorisation<FinFunction> FinSet::image_factor(const FinFunction& f) {
  std::vector<bool> hit(f.cod(), false);
  for (Element v : f.table()) hit[v] = true;
  std::vector<Element> rank(f.cod(), 0), m;
  for (Object y = 0; y < f.cod(); ++y)
    if (hit[y]) {
      rank[y] = el(m.size());
      m.push_back(el(y));
    }
  std::vector<Element> e(f.dom());
  for (Object i = 0; i < f.dom(); ++i) e[i] = rank[f(i)];
  Object k = m.size();
  return {FinFunction(f.dom(), k, std::move(e)), FinFunction(k, f.cod(), std::move(m))};
}

Factorisation<FinFunction> FinSet::occurrence_factor(const FinFunction& f) {
  std::vector<Element> e = canonical_labels(f.table());
  Object k = block_count(e);
  std::vector<Element> m(k);
  for (Object i = 0; i < f.dom(); ++i) m[e[i]] = f(i);
  return {FinFunction(f.dom(), k, std::move(e)), FinFunction(k, f.cod(), std::move(m))};
}

std::optional<FinFunction> FinSet::section(const FinFunction& f) {
  if (!f.is_surjective()) return std::nullopt;
  std::vector<Element> s(f.cod(), 0);
  std::vector<bool> set(f.cod(), false);
  for (Object i = 0; i < f.dom(); ++i)
    if (!set[f(i)]) {
      set[f(i)] = true;
      s[f(i)] = el(i);
    }
  return FinFunction(f.cod(), f.dom(), std::move(s));
}

std::optional<FinFunction> FinSet::retraction(const FinFunction& f) {
  if (!is_split_mono(f)) return std::nullopt;
  std::vector<Element> r(f.cod(), 0);
  for (Object i = 0; i < f.dom(); ++i) r[f(i)] = el(i);
  return FinFunction(f.cod(), f.dom(), std::move(r));
}

FinFunction FinSet::inverse(const FinFunction& f) {
  if (!f.is_bijective()) throw CategoryError("not invertible: " + to_string(f));
  return *section(f);
}

std::vector<Cone<FinFunction>> FinSet::jointly_monic_cones(Object a, Object b) {
  std::vector<Cone<FinFunction>> out;
  Object n = a * b;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Element> l, r;
    for (Object i = 0; i < n; ++i)
      if (mask >> i & 1) {
        l.push_back(el(i / b));
        r.push_back(el(i % b));
      }
    Object k = l.size();
    out.push_back({k, FinFunction(k, a, std::move(l)), FinFunction(k, b, std::move(r))});
  }
  return out;
}

std::vector<Cone<FinFunction>> FinSet::jointly_epic_cocones(Object a, Object b) {
  std::vector<Cone<FinFunction>> out;
  for (const auto& p : all_set_partitions(a + b)) {
    Object k = block_count(p);
    out.push_back({k, FinFunction(a, k, std::vector<Element>(p.begin(), p.begin() + a)),
                   FinFunction(b, k, std::vector<Element>(p.begin() + a, p.end()))});
  }
  return out;
}

std::vector<FinFunction> FinSet::split_epi_extensions(Object p, Object j) {
  std::vector<FinFunction> out;
  if (p == 0) {
    if (j == 0) out.push_back(identity(0));
    return out;
  }
  for (const auto& extra : all_functions(j, p)) {
    std::vector<Element> t(p + j);
    for (Object i = 0; i < p; ++i) t[i] = el(i);
    for (Object i = 0; i < j; ++i) t[p + i] = extra(i);
    out.emplace_back(p + j, p, std::move(t));
  }
  return out;
}

std::vector<FinFunction> FinSet::split_mono_extensions(Object p, Object j) {
  // nothing retracts onto the empty set
  if (p == 0 && j > 0) return {};
  return {coproduct(p, j).first};
}

bool FinSet::is_weak_pullback(const CommutingSquare& sq) {
  if (compose(sq.f, sq.h) != compose(sq.g, sq.k))
    throw CategoryError("square does not commute");
  auto pb = pullback(sq.h, sq.k);
  std::vector<bool> hit(pb.apex, false);
  for (Object a = 0; a < sq.f.dom(); ++a)
    for (Object i = 0; i < pb.apex; ++i)
      if (pb.first(i) == sq.f(a) && pb.second(i) == sq.g(a)) hit[i] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool FinSet::is_weak_pushout(const CommutingSquare& sq) {
  // here f: A->B, g: A->C is the span and h: B->D, k: C->D the cocone
  if (compose(sq.f, sq.h) != compose(sq.g, sq.k))
    throw CategoryError("square does not commute");
  auto po = pushout(sq.f, sq.g);
  std::vector<Element> t(po.apex);
  for (Object b = 0; b < sq.h.dom(); ++b) t[po.first(b)] = sq.h(b);
  for (Object c = 0; c < sq.k.dom(); ++c) t[po.second(c)] = sq.k(c);
  FinFunction comparison(po.apex, sq.h.cod(), std::move(t));
  return is_split_mono(comparison);
}

ClassifyResult classify(const FinFunction& f) {
  return {f.is_injective(), f.is_surjective(), FinSet::section(f)};
}

Cone<FinPartialFunction> PointedFinSet::coproduct(Object a, Object b) {
  auto c = FinSet::coproduct(a, b);
  return {c.apex, FinPartialFunction(c.first), FinPartialFunction(c.second)};
}

FinPartialFunction PointedFinSet::copairing(const FinPartialFunction& f,
                                            const FinPartialFunction& g) {
  require_same_cod(f.cod(), g.cod(), "copairing");
  std::vector<Element> t = f.table();
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinPartialFunction(f.dom() + g.dom(), f.cod(), std::move(t));
}

Cone<FinPartialFunction> PointedFinSet::pushout(const FinPartialFunction& f,
                                                const FinPartialFunction& g) {
  require_same_dom(f.dom(), g.dom(), "pushout");
  Object nb = f.cod(), nc = g.cod();
  std::size_t bottom = nb + nc;
  DisjointSets sets(nb + nc + 1);
  for (Object a = 0; a < f.dom(); ++a) {
    std::size_t x = f.defined_at(a) ? f(a) : bottom;
    std::size_t y = g.defined_at(a) ? nb + g(a) : bottom;
    sets.unite(x, y);
  }
  std::vector<std::size_t> all(nb + nc);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto labels = labels_from_sets(sets, all, bottom);
  Object apex = block_count(labels);
  std::vector<Element> i1(labels.begin(), labels.begin() + nb);
  std::vector<Element> i2(labels.begin() + nb, labels.end());
  return {apex, FinPartialFunction(nb, apex, std::move(i1)),
          FinPartialFunction(nc, apex, std::move(i2))};
}

Cone<FinPartialFunction> pushout_pointed(const FinPartialFunction& f,
                                         const FinPartialFunction& g) {
  return PointedFinSet::pushout(f, g);
}

Factorisation<FinPartialFunction> PointedFinSet::occurrence_factor(const FinPartialFunction& f) {
  std::vector<Element> e = canonical_labels(f.table());
  Object k = block_count(e);
  std::vector<Element> m(k);
  for (Object i = 0; i < f.dom(); ++i)
    if (e[i] != kUndefined) m[e[i]] = f(i);
  return {FinPartialFunction(f.dom(), k, std::move(e)), FinPartialFunction(k, f.cod(), std::move(m))};
}

FinPartialFunction PointedFinSet::inverse(const FinPartialFunction& f) {
  if (!is_iso(f)) throw CategoryError("not invertible: " + to_string(f));
  std::vector<Element> t(f.cod());
  for (Object i = 0; i < f.dom(); ++i) t[f(i)] = el(i);
  return FinPartialFunction(f.cod(), f.dom(), std::move(t));
}

std::vector<Cone<FinPartialFunction>> PointedFinSet::jointly_epic_cocones(Object a, Object b) {
  std::vector<Cone<FinPartialFunction>> out;
  for (const auto& p : all_partial_partitions(a + b)) {
    Object k = block_count(p);
    out.push_back({k, FinPartialFunction(a, k, std::vector<Element>(p.begin(), p.begin() + a)),
                   FinPartialFunction(b, k, std::vector<Element>(p.begin() + a, p.end()))});
  }
  return out;
}

std::vector<FinPartialFunction> PointedFinSet::split_mono_extensions(Object p, Object j) {
  return {coproduct(p, j).first};
}

bool PointedFinSet::is_weak_pushout(const FinPartialFunction& f, const FinPartialFunction& g,
                                    const FinPartialFunction& h, const FinPartialFunction& k) {
  if (compose(f, h) != compose(g, k)) throw CategoryError("square does not commute");
  auto po = pushout(f, g);
  std::vector<Element> t(po.apex, kUndefined);
  for (Object b = 0; b < h.dom(); ++b)
    if (po.first.defined_at(b)) t[po.first(b)] = h(b);
  for (Object c = 0; c < k.dom(); ++c)
    if (po.second.defined_at(c)) t[po.second(c)] = k(c);
  FinPartialFunction comparison(po.apex, h.cod(), std::move(t));
  return is_split_mono(comparison);
}

}  // namespace cartbicat
