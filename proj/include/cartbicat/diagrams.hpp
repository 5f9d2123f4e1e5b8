#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cartbicat/bicat.hpp"
#include "cartbicat/relation.hpp"

namespace cartbicat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ArityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Id, Sym, Copy, Discard, Cocopy, Codiscard, Cup, Cap, Op, Rel, Seq, Ten };

  Kind kind = Kind::Id;
  std::size_t n = 0;  // id width; relation literal domain
  std::size_t m = 0;  // relation literal codomain
  std::vector<std::pair<Element, Element>> pairs;
  TermPtr lhs, rhs;   // seq/ten operands; op uses lhs

  static TermPtr constant(Kind k) { return make(k); }
  static TermPtr id(std::size_t n) {
    auto t = make(Kind::Id);
    t->n = n;
    return t;
  }
  static TermPtr op(TermPtr a) {
    auto t = make(Kind::Op);
    t->lhs = std::move(a);
    return t;
  }
  static TermPtr seq(TermPtr a, TermPtr b) { return binary(Kind::Seq, std::move(a), std::move(b)); }
  static TermPtr ten(TermPtr a, TermPtr b) { return binary(Kind::Ten, std::move(a), std::move(b)); }
  static TermPtr rel(std::size_t n, std::size_t m, std::vector<std::pair<Element, Element>> p) {
    auto t = make(Kind::Rel);
    t->n = n;
    t->m = m;
    t->pairs = std::move(p);
    return t;
  }

 private:
  static std::shared_ptr<Term> make(Kind k) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    return t;
  }
  static TermPtr binary(Kind k, TermPtr a, TermPtr b) {
    auto t = make(k);
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
  }
};

bool equal(const Term& a, const Term& b);

/// term := term ";" term | term "*" term | atom, "*" binding tighter, both left associative.
TermPtr parse(const std::string& text);

/// Canonical text; parse(print(t)) is structurally equal to t.
std::string print(const Term& t);

/// Term sources of an .sd file: `#` starts a comment, `---` lines separate terms,
/// lines in between are joined.
std::vector<std::string> split_sd(const std::string& text);

struct Arity {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  friend bool operator==(const Arity&, const Arity&) = default;
};

/// Arity in wires; each wire stands for the generic object of the given width.
Arity wire_arity(const Term& t, std::size_t width);

/// Wire arity scaled by the width, e.g. cp at width w is (w, 2w).
inline Arity arity(const Term& t, std::size_t width) {
  auto a = wire_arity(t, width);
  return {a.inputs * width, a.outputs * width};
}

/// The object of k wires: the k-fold tensor power of `width` from the unit.
template <CartesianBicategory M>
Object wires_object(const M& m, std::size_t width, std::size_t k) {
  Object out = m.unit();
  for (std::size_t i = 0; i < k; ++i) out = m.tensor(out, static_cast<Object>(width));
  return out;
}

namespace detail {

template <CartesianBicategory M>
Mor<M> eval_checked(const Term& t, const M& m, std::size_t width) {
  Object x = static_cast<Object>(width);
  using K = Term::Kind;
  switch (t.kind) {
    case K::Id: return m.identity(wires_object(m, width, t.n));
    case K::Sym: return m.symmetry(x, x);
    case K::Copy: return m.copy(x);
    case K::Discard: return m.discard(x);
    case K::Cocopy: return m.cocopy(x);
    case K::Codiscard: return m.codiscard(x);
    case K::Cup: return cup(m, x);
    case K::Cap: return cap(m, x);
    case K::Op: return m.opposite(eval_checked(*t.lhs, m, width));
    case K::Seq: return m.compose(eval_checked(*t.lhs, m, width), eval_checked(*t.rhs, m, width));
    case K::Ten: return m.tensor(eval_checked(*t.lhs, m, width), eval_checked(*t.rhs, m, width));
    case K::Rel:
      if constexpr (std::is_same_v<Mor<M>, Relation>) {
        return Relation(static_cast<Object>(t.n), static_cast<Object>(t.m), t.pairs);
      } else {
        throw EvalError("relation literals are only available in rel, not " +
                        std::string(m.name()));
      }
  }
  throw EvalError("unknown term");
}

}  // namespace detail

/// Structural recursion into the model; the arity is checked first.
template <CartesianBicategory M>
Mor<M> eval(const Term& t, const M& m, std::size_t width) {
  wire_arity(t, width);
  return detail::eval_checked(t, m, width);
}

}  // namespace cartbicat
