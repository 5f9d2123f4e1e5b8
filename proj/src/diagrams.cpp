#include "cartbicat/diagrams.hpp"

#include <cctype>
#include <sstream>

namespace cartbicat {

bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.n != b.n || a.m != b.m || a.pairs != b.pairs) return false;
  auto same = [](const TermPtr& x, const TermPtr& y) {
    if (!x || !y) return !x && !y;
    return equal(*x, *y);
  };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  TermPtr run() {
    auto t = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    pos_ += tok.size();
  }

  std::size_t natural() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoul(s_.substr(start, pos_ - start));
  }

  TermPtr sequence() {
    auto t = tensor();
    while (peek(';')) {
      ++pos_;
      t = Term::seq(t, tensor());
    }
    return t;
  }

  TermPtr tensor() {
    auto t = atom();
    while (peek('*')) {
      ++pos_;
      t = Term::ten(t, atom());
    }
    return t;
  }

  TermPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      auto t = sequence();
      expect(")");
      return t;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string word = s_.substr(start, pos_ - start);
    using K = Term::Kind;
    if (word == "id") {
      expect("[");
      auto n = natural();
      expect("]");
      return Term::id(n);
    }
    if (word == "sym") return Term::constant(K::Sym);
    if (word == "cp") return Term::constant(K::Copy);
    if (word == "dc") return Term::constant(K::Discard);
    if (word == "cc") return Term::constant(K::Cocopy);
    if (word == "cd") return Term::constant(K::Codiscard);
    if (word == "cup") return Term::constant(K::Cup);
    if (word == "cap") return Term::constant(K::Cap);
    if (word == "op") {
      expect("(");
      auto t = sequence();
      expect(")");
      return Term::op(t);
    }
    if (word == "rel") return literal(start);
    pos_ = start;
    fail(word.empty() ? "expected a term" : "unknown constant '" + word + "'");
  }

  TermPtr literal(std::size_t start) {
    expect("{");
    std::vector<std::pair<Element, Element>> pairs;
    if (!peek('}')) {
      do {
        expect("(");
        auto a = natural();
        expect(",");
        auto b = natural();
        expect(")");
        pairs.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
      } while (peek(',') && (++pos_, true));
    }
    expect("}");
    expect(":");
    auto n = natural();
    expect("->");
    auto m = natural();
    for (auto [a, b] : pairs)
      if (a >= n || b >= m) {
        pos_ = start;
        fail("pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " +
             std::to_string(n) + "->" + std::to_string(m));
      }
    return Term::rel(n, m, std::move(pairs));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

void print_to(std::ostream& os, const Term& t) {
  using K = Term::Kind;
  auto wrapped = [&](const Term& u, bool parens) {
    if (parens) os << '(';
    print_to(os, u);
    if (parens) os << ')';
  };
  switch (t.kind) {
    case K::Id: os << "id[" << t.n << ']'; return;
    case K::Sym: os << "sym"; return;
    case K::Copy: os << "cp"; return;
    case K::Discard: os << "dc"; return;
    case K::Cocopy: os << "cc"; return;
    case K::Codiscard: os << "cd"; return;
    case K::Cup: os << "cup"; return;
    case K::Cap: os << "cap"; return;
    case K::Op:
      os << "op(";
      print_to(os, *t.lhs);
      os << ')';
      return;
    case K::Rel:
      os << "rel{";
      for (std::size_t i = 0; i < t.pairs.size(); ++i)
        os << (i ? "," : "") << '(' << t.pairs[i].first << ',' << t.pairs[i].second << ')';
      os << "}:" << t.n << "->" << t.m;
      return;
    case K::Seq:
      wrapped(*t.lhs, false);
      os << " ; ";
      wrapped(*t.rhs, t.rhs->kind == K::Seq);
      return;
    case K::Ten:
      wrapped(*t.lhs, t.lhs->kind == K::Seq);
      os << " * ";
      wrapped(*t.rhs, t.rhs->kind == K::Seq || t.rhs->kind == K::Ten);
      return;
  }
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// k with width^k = n, for a relation literal over `width`-element wires.
std::size_t literal_wires(std::size_t n, std::size_t width) {
  if (width == 1) {
    if (n != 1) throw ArityError("relation literal on " + std::to_string(n) +
                                 " points does not fit wires of width 1");
    return 1;
  }
  std::size_t k = 0, p = 1;
  while (p < n && width > 1) {
    p *= width;
    ++k;
  }
  if (p != n || width == 0)
    throw ArityError("relation literal on " + std::to_string(n) +
                     " points is not a power of the width " + std::to_string(width));
  return k;
}

std::string show(const Arity& a) {
  return "(" + std::to_string(a.inputs) + "," + std::to_string(a.outputs) + ")";
}

}  // namespace

TermPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Term& t) {
  std::ostringstream os;
  print_to(os, t);
  return os.str();
}

std::vector<std::string> split_sd(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    auto t = trim(current);
    if (!t.empty()) out.push_back(t);
    current.clear();
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line) == "---") {
      flush();
      continue;
    }
    current += ' ' + line;
  }
  flush();
  return out;
}

Arity wire_arity(const Term& t, std::size_t width) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Id: return {t.n, t.n};
    case K::Sym: return {2, 2};
    case K::Copy: return {1, 2};
    case K::Discard: return {1, 0};
    case K::Cocopy: return {2, 1};
    case K::Codiscard: return {0, 1};
    case K::Cup: return {0, 2};
    case K::Cap: return {2, 0};
    case K::Op: {
      auto a = wire_arity(*t.lhs, width);
      return {a.outputs, a.inputs};
    }
    case K::Rel: return {literal_wires(t.n, width), literal_wires(t.m, width)};
    case K::Seq: {
      auto a = wire_arity(*t.lhs, width);
      auto b = wire_arity(*t.rhs, width);
      if (a.outputs != b.inputs)
        throw ArityError("cannot compose " + print(*t.lhs) + " " +
                         show({a.inputs * width, a.outputs * width}) + " with " + print(*t.rhs) +
                         " " + show({b.inputs * width, b.outputs * width}));
      return {a.inputs, b.outputs};
    }
    case K::Ten: {
      auto a = wire_arity(*t.lhs, width);
      auto b = wire_arity(*t.rhs, width);
      return {a.inputs + b.inputs, a.outputs + b.outputs};
    }
  }
  throw ArityError("unknown term");
}

}  // namespace cartbicat
