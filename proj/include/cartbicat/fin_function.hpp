#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartbicat {

/// Objects of every finite base category are ordinals {0..n-1}; only the size is stored.
using Object = std::size_t;
using Element = std::uint32_t;

class CategoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Boundary mismatch when composing or comparing arrows.
class CompositionError : public CategoryError {
 public:
  using CategoryError::CategoryError;
};

/// Malformed data handed to a constructor (out-of-range table entries, wrong lengths).
class ConstructionError : public CategoryError {
 public:
  using CategoryError::CategoryError;
};

/// A total function between finite ordinals, stored as its value table.
class FinFunction {
 public:
  FinFunction() = default;
  FinFunction(Object dom, Object cod, std::vector<Element> table);

  static FinFunction identity(Object n);
  /// The unique function out of the empty set.
  static FinFunction empty(Object cod) { return FinFunction(0, cod, {}); }
  static FinFunction constant(Object dom, Object cod, Element value);

  Object dom() const { return dom_; }
  Object cod() const { return cod_; }
  Element operator()(std::size_t i) const { return table_[i]; }
  const std::vector<Element>& table() const { return table_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const FinFunction&, const FinFunction&) = default;
  friend std::strong_ordering operator<=>(const FinFunction&, const FinFunction&) = default;

 private:
  Object dom_ = 0;
  Object cod_ = 0;
  std::vector<Element> table_;
};

/// Diagrammatic composition: (f ; g)(i) = g(f(i)).
FinFunction compose(const FinFunction& f, const FinFunction& g);

/// Every function dom -> cod in lexicographic table order.
std::vector<FinFunction> all_functions(Object dom, Object cod);

/// `[t0,t1,...]: n->m`
std::string to_string(const FinFunction& f);

/// A partial function; undefined entries are mapped to the adjoined basepoint.
class FinPartialFunction {
 public:
  static constexpr Element kUndefined = std::numeric_limits<Element>::max();

  FinPartialFunction() = default;
  FinPartialFunction(Object dom, Object cod, std::vector<Element> table);
  explicit FinPartialFunction(const FinFunction& total);

  static FinPartialFunction identity(Object n);
  static FinPartialFunction empty(Object cod) { return FinPartialFunction(0, cod, {}); }
  static FinPartialFunction undefined(Object dom, Object cod);

  Object dom() const { return dom_; }
  Object cod() const { return cod_; }
  Element operator()(std::size_t i) const { return table_[i]; }
  bool defined_at(std::size_t i) const { return table_[i] != kUndefined; }
  const std::vector<Element>& table() const { return table_; }

  bool is_total() const;
  /// Injective on the defined part.
  bool is_injective() const;
  /// Every codomain point is hit.
  bool is_surjective() const;

  friend bool operator==(const FinPartialFunction&, const FinPartialFunction&) = default;
  friend std::strong_ordering operator<=>(const FinPartialFunction&,
                                          const FinPartialFunction&) = default;

 private:
  Object dom_ = 0;
  Object cod_ = 0;
  std::vector<Element> table_;
};

FinPartialFunction compose(const FinPartialFunction& f, const FinPartialFunction& g);

/// Every partial function dom -> cod; undefined sorts last at each position.
std::vector<FinPartialFunction> all_partial_functions(Object dom, Object cod);

/// `[t0,*,...]: n->m` with `*` for undefined entries.
std::string to_string(const FinPartialFunction& f);

}  // namespace cartbicat
