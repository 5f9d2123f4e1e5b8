#include "cartbicat/equivalence.hpp"

#include <map>
#include <set>
#include <sstream>

namespace cartbicat {

Partition::Partition(Object n, Object m, std::vector<Element> l)
    : dom(n), cod(m), labels(canonical_labels(l)) {
  if (labels.size() != n + m)
    throw ConstructionError("partition has " + std::to_string(labels.size()) +
                            " labels, expected " + std::to_string(n + m));
}

Partition Partition::from_unions(Object n, Object m,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& unions) {
  DisjointSets sets(n + m);
  for (auto [a, b] : unions) sets.unite(a, b);
  std::vector<std::size_t> all(n + m);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Partition(n, m, labels_from_sets(sets, all));
}

bool Partition::total() const {
  for (Element l : labels)
    if (l == kUndefined) return false;
  return true;
}

std::string format_partition(const Partition& p) {
  std::map<Element, std::vector<std::string>> blocks;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    if (p.labels[i] == kUndefined) continue;
    blocks[p.labels[i]].push_back(i < p.dom ? "d" + std::to_string(i)
                                            : "c" + std::to_string(i - p.dom));
  }
  std::ostringstream os;
  os << '{';
  bool first_block = true;
  for (const auto& [label, members] : blocks) {
    if (!first_block) os << ',';
    first_block = false;
    os << '{';
    for (std::size_t k = 0; k < members.size(); ++k) os << (k ? "," : "") << members[k];
    os << '}';
  }
  os << '}';
  return os.str();
}

GluedComposite glue(const Partition& r, const Partition& s) {
  if (r.cod != s.dom)
    throw CompositionError("cannot compose partitions " + std::to_string(r.dom) + "->" +
                           std::to_string(r.cod) + " and " + std::to_string(s.dom) + "->" +
                           std::to_string(s.cod));
  Object n = r.dom, m = r.cod, o = s.cod;
  std::size_t bottom = n + m + o;
  DisjointSets sets(bottom + 1);
  auto seed = [&](const Partition& p, std::size_t offset) {
    std::map<Element, std::size_t> rep;
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
      if (p.labels[i] == kUndefined) {
        sets.unite(offset + i, bottom);
        continue;
      }
      auto [it, inserted] = rep.try_emplace(p.labels[i], offset + i);
      if (!inserted) sets.unite(it->second, offset + i);
    }
  };
  seed(r, 0);
  seed(s, n);
  std::vector<std::size_t> boundary;
  for (std::size_t i = 0; i < n; ++i) boundary.push_back(i);
  for (std::size_t k = 0; k < o; ++k) boundary.push_back(n + m + k);
  GluedComposite out{Partition(n, o, labels_from_sets(sets, boundary, bottom)), false};
  std::set<std::size_t> touched{sets.find(bottom)};
  for (auto b : boundary) touched.insert(sets.find(b));
  for (std::size_t j = 0; j < m; ++j)
    if (!touched.count(sets.find(n + j))) out.middle_component = true;
  return out;
}

Partition tensor_partitions(const Partition& r, const Partition& s) {
  Object n = r.dom + s.dom, m = r.cod + s.cod;
  std::vector<Element> labels(n + m, kUndefined);
  Element shift = static_cast<Element>(r.blocks());
  auto put = [&](std::size_t at, Element l, Element offset) {
    labels[at] = l == kUndefined ? kUndefined : l + offset;
  };
  for (Object i = 0; i < r.dom; ++i) put(i, r.labels[i], 0);
  for (Object i = 0; i < s.dom; ++i) put(r.dom + i, s.labels[i], shift);
  for (Object j = 0; j < r.cod; ++j) put(n + j, r.labels[r.dom + j], 0);
  for (Object j = 0; j < s.cod; ++j) put(n + r.cod + j, s.labels[s.dom + j], shift);
  return Partition(n, m, std::move(labels));
}

Partition swap_sides(const Partition& r) {
  std::vector<Element> labels;
  labels.insert(labels.end(), r.labels.begin() + r.dom, r.labels.end());
  labels.insert(labels.end(), r.labels.begin(), r.labels.begin() + r.dom);
  return Partition(r.cod, r.dom, std::move(labels));
}

Partition bottom_extended(const Partition& r) {
  // one extra point (the basepoint) appended; undefined points join its block
  Element b = static_cast<Element>(r.blocks());
  std::vector<Element> labels = r.labels;
  for (auto& l : labels)
    if (l == kUndefined) l = b;
  labels.push_back(b);
  Partition out;
  out.dom = r.dom;
  out.cod = r.cod + 1;
  out.labels = canonical_labels(labels);
  return out;
}

Partition ERelModel::identity(Object x) const {
  std::vector<std::pair<std::size_t, std::size_t>> u;
  for (Object i = 0; i < x; ++i) u.emplace_back(i, x + i);
  return Partition::from_unions(x, x, u);
}

bool ERelModel::leq(const Partition& r, const Partition& s) const {
  if (r.dom != s.dom || r.cod != s.cod) throw CompositionError("partitions are not parallel");
  return refines(s.labels, r.labels);
}

Partition ERelModel::copy(Object x) const {
  std::vector<std::pair<std::size_t, std::size_t>> u;
  for (Object i = 0; i < x; ++i) {
    u.emplace_back(i, x + i);
    u.emplace_back(i, 2 * x + i);
  }
  return Partition::from_unions(x, 2 * x, u);
}

Partition ERelModel::discard(Object x) const { return Partition::from_unions(x, 0, {}); }

Partition ERelModel::cocopy(Object x) const { return swap_sides(copy(x)); }

Partition ERelModel::codiscard(Object x) const { return Partition::from_unions(0, x, {}); }

Partition ERelModel::symmetry(Object x, Object y) const {
  std::vector<std::pair<std::size_t, std::size_t>> u;
  Object n = x + y;
  for (Object i = 0; i < x; ++i) u.emplace_back(i, n + y + i);
  for (Object j = 0; j < y; ++j) u.emplace_back(x + j, n + j);
  return Partition::from_unions(n, n, u);
}

const std::vector<Partition>& ERelModel::homset(Object x, Object y) const {
  static std::map<std::pair<Object, Object>, std::vector<Partition>> cache;
  auto key = std::make_pair(x, y);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  for (auto& p : all_set_partitions(x + y)) out.emplace_back(x, y, std::move(p));
  return cache.emplace(key, std::move(out)).first->second;
}

Partition erel_enough_maps_witness(const Partition& r) {
  if (r.cod != 0) throw CategoryError("enough-maps witness needs a morphism into the unit");
  Object e = r.blocks();
  std::vector<Element> labels(e + r.dom);
  for (Object k = 0; k < e; ++k) labels[k] = static_cast<Element>(k);
  for (Object i = 0; i < r.dom; ++i) labels[e + i] = r.labels[i];
  return Partition(e, r.dom, std::move(labels));
}

std::optional<Partition> ERelModel::enough_maps_witness(const Partition& r) const {
  if (r.cod != 0) return std::nullopt;
  return erel_enough_maps_witness(r);
}

bool PERelModel::leq(const Partition& r, const Partition& s) const {
  if (r.dom != s.dom || r.cod != s.cod) throw CompositionError("partitions are not parallel");
  return refines(bottom_extended(s).labels, bottom_extended(r).labels);
}

const std::vector<Partition>& PERelModel::homset(Object x, Object y) const {
  static std::map<std::pair<Object, Object>, std::vector<Partition>> cache;
  auto key = std::make_pair(x, y);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  for (auto& p : all_partial_partitions(x + y)) out.emplace_back(x, y, std::move(p));
  return cache.emplace(key, std::move(out)).first->second;
}

FrobMorphism FrobModel::compose(const FrobMorphism& r, const FrobMorphism& s) const {
  auto g = glue(r.part, s.part);
  bool empty_boundary = g.part.dom + g.part.cod == 0;
  return {g.part, empty_boundary && (r.isolated || s.isolated || g.middle_component)};
}

FrobMorphism FrobModel::tensor(const FrobMorphism& r, const FrobMorphism& s) const {
  auto p = tensor_partitions(r.part, s.part);
  bool empty_boundary = p.dom + p.cod == 0;
  return {p, empty_boundary && (r.isolated || s.isolated)};
}

bool FrobModel::leq(const FrobMorphism& r, const FrobMorphism& s) const {
  return erel_.leq(r.part, s.part) && (r.isolated || !s.isolated);
}

const std::vector<FrobMorphism>& FrobModel::homset(Object x, Object y) const {
  static std::map<std::pair<Object, Object>, std::vector<FrobMorphism>> cache;
  auto key = std::make_pair(x, y);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<FrobMorphism> out;
  for (const auto& p : erel_.homset(x, y)) {
    out.push_back({p, false});
    if (x + y == 0) out.push_back({p, true});
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::optional<FrobMorphism> FrobModel::enough_maps_witness(const FrobMorphism& r) const {
  if (r.cod() != 0) return std::nullopt;
  auto f = erel_enough_maps_witness(r.part);
  if (!r.isolated) return FrobMorphism{f, false};
  // one extra apex point glued to nothing
  std::vector<Element> labels{0};
  for (auto l : f.labels) labels.push_back(l + 1);
  return FrobMorphism{Partition(f.dom + 1, f.cod, std::move(labels)), false};
}

}  // namespace cartbicat
