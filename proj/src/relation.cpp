#include "cartbicat/relation.hpp"

#include <map>

namespace cartbicat {

Relation::Relation(Object dom, Object cod, const std::vector<std::pair<Element, Element>>& pairs)
    : Relation(dom, cod) {
  for (auto [i, j] : pairs) {
    if (i >= dom || j >= cod)
      throw ConstructionError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                              ") outside " + std::to_string(dom) + "x" + std::to_string(cod));
    set(i, j);
  }
}

Relation Relation::from_bits(Object dom, Object cod, const std::string& bits) {
  if (bits.size() != dom * cod)
    throw ConstructionError("relation needs " + std::to_string(dom * cod) + " bits, got " +
                            std::to_string(bits.size()));
  Relation r(dom, cod);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != '0' && bits[k] != '1')
      throw ConstructionError("relation bits must be 0 or 1");
    r.bits_[k] = bits[k] == '1';
  }
  return r;
}

Relation Relation::graph(const FinFunction& f) {
  Relation r(f.dom(), f.cod());
  for (Object i = 0; i < f.dom(); ++i) r.set(i, f(i));
  return r;
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Object i = 0; i < dom_; ++i)
    for (Object j = 0; j < cod_; ++j)
      if ((*this)(i, j)) out.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  return out;
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (auto b : bits_) n += b;
  return n;
}

std::string Relation::bits() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) s[k] = '1';
  return s;
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.cod() != s.dom())
    throw CompositionError("cannot compose relation " + std::to_string(r.dom()) + "->" +
                           std::to_string(r.cod()) + " with " + std::to_string(s.dom()) + "->" +
                           std::to_string(s.cod()));
  Relation out(r.dom(), s.cod());
  for (Object i = 0; i < r.dom(); ++i)
    for (Object j = 0; j < r.cod(); ++j) {
      if (!r(i, j)) continue;
      for (Object k = 0; k < s.cod(); ++k)
        if (s(j, k)) out.set(i, k);
    }
  return out;
}

Relation transpose(const Relation& r) {
  Relation out(r.cod(), r.dom());
  for (Object i = 0; i < r.dom(); ++i)
    for (Object j = 0; j < r.cod(); ++j)
      if (r(i, j)) out.set(j, i);
  return out;
}

bool included(const Relation& r, const Relation& s) {
  if (r.dom() != s.dom() || r.cod() != s.cod())
    throw CompositionError("relations are not parallel");
  for (Object i = 0; i < r.dom(); ++i)
    for (Object j = 0; j < r.cod(); ++j)
      if (r(i, j) && !s(i, j)) return false;
  return true;
}

Relation RelModel::identity(Object x) const { return Relation::graph(FinFunction::identity(x)); }

Relation RelModel::tensor(const Relation& r, const Relation& s) const {
  Relation out(r.dom() * s.dom(), r.cod() * s.cod());
  for (Object a = 0; a < r.dom(); ++a)
    for (Object b = 0; b < r.cod(); ++b) {
      if (!r(a, b)) continue;
      for (Object c = 0; c < s.dom(); ++c)
        for (Object d = 0; d < s.cod(); ++d)
          if (s(c, d)) out.set(a * s.dom() + c, b * s.cod() + d);
    }
  return out;
}

Relation RelModel::copy(Object x) const {
  Relation r(x, x * x);
  for (Object a = 0; a < x; ++a) r.set(a, a * x + a);
  return r;
}

Relation RelModel::discard(Object x) const {
  Relation r(x, 1);
  for (Object a = 0; a < x; ++a) r.set(a, 0);
  return r;
}

Relation RelModel::symmetry(Object x, Object y) const {
  Relation r(x * y, y * x);
  for (Object a = 0; a < x; ++a)
    for (Object b = 0; b < y; ++b) r.set(a * y + b, b * x + a);
  return r;
}

const std::vector<Relation>& RelModel::homset(Object x, Object y) const {
  static std::map<std::pair<Object, Object>, std::vector<Relation>> cache;
  auto key = std::make_pair(x, y);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Relation> out;
  Object n = x * y;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Relation r(x, y);
    for (Object k = 0; k < n; ++k)
      if (mask >> k & 1) r.set(k / y, k % y);
    out.push_back(std::move(r));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::optional<Relation> RelModel::enough_maps_witness(const Relation& r) const {
  if (r.cod() != 1) return std::nullopt;
  std::vector<Element> support;
  for (Object a = 0; a < r.dom(); ++a)
    if (r(a, 0)) support.push_back(static_cast<Element>(a));
  Object z = support.size();
  return Relation::graph(FinFunction(z, r.dom(), std::move(support)));
}

}  // namespace cartbicat
