#include "cartbicat/fin_function.hpp"

#include <sstream>

namespace cartbicat {

FinFunction::FinFunction(Object dom, Object cod, std::vector<Element> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_)
    throw ConstructionError("function table has length " + std::to_string(table_.size()) +
                            ", expected " + std::to_string(dom_));
  for (Element v : table_)
    if (v >= cod_)
      throw ConstructionError("function entry " + std::to_string(v) + " outside codomain " +
                              std::to_string(cod_));
}

FinFunction FinFunction::identity(Object n) {
  std::vector<Element> t(n);
  for (Object i = 0; i < n; ++i) t[i] = static_cast<Element>(i);
  return FinFunction(n, n, std::move(t));
}

FinFunction FinFunction::constant(Object dom, Object cod, Element value) {
  return FinFunction(dom, cod, std::vector<Element>(dom, value));
}

bool FinFunction::is_injective() const {
  std::vector<bool> seen(cod_, false);
  for (Element v : table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FinFunction::is_surjective() const {
  std::vector<bool> seen(cod_, false);
  for (Element v : table_) seen[v] = true;
  for (bool b : seen)
    if (!b) return false;
  return true;
}

FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.dom())
    throw CompositionError("cannot compose " + to_string(f) + " with " + to_string(g));
  std::vector<Element> t(f.dom());
  for (Object i = 0; i < f.dom(); ++i) t[i] = g(f(i));
  return FinFunction(f.dom(), g.cod(), std::move(t));
}

std::vector<FinFunction> all_functions(Object dom, Object cod) {
  std::vector<FinFunction> out;
  if (cod == 0 && dom > 0) return out;
  std::vector<Element> t(dom, 0);
  while (true) {
    out.emplace_back(dom, cod, t);
    // odometer with the last position varying fastest
    std::size_t i = dom;
    while (i > 0) {
      --i;
      if (++t[i] < cod) break;
      t[i] = 0;
      if (i == 0) return out;
    }
    if (dom == 0) return out;
  }
}

namespace {
template <class F>
std::string format_table(const F& f, bool partial) {
  std::ostringstream os;
  os << '[';
  for (Object i = 0; i < f.dom(); ++i) {
    if (i) os << ',';
    if (partial && f(i) == FinPartialFunction::kUndefined)
      os << '*';
    else
      os << f(i);
  }
  os << "]: " << f.dom() << "->" << f.cod();
  return os.str();
}
}  // namespace

std::string to_string(const FinFunction& f) { return format_table(f, false); }

FinPartialFunction::FinPartialFunction(Object dom, Object cod, std::vector<Element> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_)
    throw ConstructionError("partial function table has length " +
                            std::to_string(table_.size()) + ", expected " + std::to_string(dom_));
  for (Element v : table_)
    if (v != kUndefined && v >= cod_)
      throw ConstructionError("partial function entry " + std::to_string(v) +
                              " outside codomain " + std::to_string(cod_));
}

FinPartialFunction::FinPartialFunction(const FinFunction& total)
    : FinPartialFunction(total.dom(), total.cod(), total.table()) {}

FinPartialFunction FinPartialFunction::identity(Object n) {
  return FinPartialFunction(FinFunction::identity(n));
}

FinPartialFunction FinPartialFunction::undefined(Object dom, Object cod) {
  return FinPartialFunction(dom, cod, std::vector<Element>(dom, kUndefined));
}

bool FinPartialFunction::is_total() const {
  for (Element v : table_)
    if (v == kUndefined) return false;
  return true;
}

bool FinPartialFunction::is_injective() const {
  std::vector<bool> seen(cod_, false);
  for (Element v : table_) {
    if (v == kUndefined) continue;
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FinPartialFunction::is_surjective() const {
  std::vector<bool> seen(cod_, false);
  for (Element v : table_)
    if (v != kUndefined) seen[v] = true;
  for (bool b : seen)
    if (!b) return false;
  return true;
}

FinPartialFunction compose(const FinPartialFunction& f, const FinPartialFunction& g) {
  if (f.cod() != g.dom())
    throw CompositionError("cannot compose " + to_string(f) + " with " + to_string(g));
  std::vector<Element> t(f.dom());
  for (Object i = 0; i < f.dom(); ++i)
    t[i] = f.defined_at(i) ? g(f(i)) : FinPartialFunction::kUndefined;
  return FinPartialFunction(f.dom(), g.cod(), std::move(t));
}

std::vector<FinPartialFunction> all_partial_functions(Object dom, Object cod) {
  // position value cod encodes undefined, so it sorts last
  std::vector<FinPartialFunction> out;
  std::vector<Element> t(dom, 0);
  while (true) {
    std::vector<Element> table(dom);
    for (Object i = 0; i < dom; ++i)
      table[i] = t[i] == cod ? FinPartialFunction::kUndefined : t[i];
    out.emplace_back(dom, cod, std::move(table));
    if (dom == 0) return out;
    std::size_t i = dom;
    while (i > 0) {
      --i;
      if (++t[i] <= cod) break;
      t[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::string to_string(const FinPartialFunction& f) { return format_table(f, true); }

}  // namespace cartbicat
