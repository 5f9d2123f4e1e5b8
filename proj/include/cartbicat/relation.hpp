#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartbicat/fin_function.hpp"

namespace cartbicat {

/// A relation n -> m as a row-major 0/1 incidence table.
class Relation {
 public:
  Relation() = default;
  Relation(Object dom, Object cod) : dom_(dom), cod_(cod), bits_(dom * cod, 0) {}
  Relation(Object dom, Object cod, const std::vector<std::pair<Element, Element>>& pairs);

  /// Parses the row-major 0/1 serialisation, e.g. "0110".
  static Relation from_bits(Object dom, Object cod, const std::string& bits);
  static Relation graph(const FinFunction& f);

  Object dom() const { return dom_; }
  Object cod() const { return cod_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * cod_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * cod_ + j] = v ? 1 : 0; }
  std::vector<std::pair<Element, Element>> pairs() const;
  std::size_t size() const;

  std::string bits() const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend std::strong_ordering operator<=>(const Relation&, const Relation&) = default;

 private:
  Object dom_ = 0;
  Object cod_ = 0;
  std::vector<std::uint8_t> bits_;
};

Relation compose(const Relation& r, const Relation& s);
Relation transpose(const Relation& r);
bool included(const Relation& r, const Relation& s);

/// Finite Rel. Objects are sets, tensor is the lexicographic product, I = 1.
struct RelModel {
  using Morphism = Relation;

  std::string name() const { return "rel"; }
  Object unit() const { return 1; }
  Object tensor(Object a, Object b) const { return a * b; }
  Object dom(const Relation& r) const { return r.dom(); }
  Object cod(const Relation& r) const { return r.cod(); }

  Relation identity(Object x) const;
  Relation compose(const Relation& r, const Relation& s) const { return cartbicat::compose(r, s); }
  Relation tensor(const Relation& r, const Relation& s) const;
  bool leq(const Relation& r, const Relation& s) const { return included(r, s); }

  Relation copy(Object x) const;
  Relation discard(Object x) const;
  Relation cocopy(Object x) const { return transpose(copy(x)); }
  Relation codiscard(Object x) const { return transpose(discard(x)); }
  Relation symmetry(Object x, Object y) const;
  Relation opposite(const Relation& r) const { return transpose(r); }

  /// All 2^(n m) relations, ordered by the row-major bit string read as a binary number
  /// with entry 0 least significant.
  const std::vector<Relation>& homset(Object x, Object y) const;

  /// R : X -> 1 is op(f) ; discard for the inclusion f of its support.
  std::optional<Relation> enough_maps_witness(const Relation& r) const;

  std::string format(const Relation& r) const { return r.bits().empty() ? "{}" : r.bits(); }
};

/// Negative controls: Rel with its order replaced.
struct RelEqualityOrder : RelModel {
  std::string name() const { return "rel-equality-order"; }
  bool leq(const Relation& r, const Relation& s) const { return r == s; }
};

struct RelReversedOrder : RelModel {
  std::string name() const { return "rel-reversed-order"; }
  bool leq(const Relation& r, const Relation& s) const { return included(s, r); }
};

}  // namespace cartbicat
