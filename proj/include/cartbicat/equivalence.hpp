#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartbicat/partition.hpp"

namespace cartbicat {

/// A (partial) equivalence relation on the boundary d0..d(n-1), c0..c(m-1), stored as
/// restricted-growth labels over indices 0..n-1 (domain) then n..n+m-1 (codomain).
/// Labels may be kUndefined only in the partial case.
struct Partition {
  Object dom = 0;
  Object cod = 0;
  std::vector<Element> labels;

  /// Canonicalises the labels; throws on length mismatch.
  Partition(Object n, Object m, std::vector<Element> l);
  Partition() = default;

  /// Blocks generated by the given pairs of boundary indices; every point defined.
  static Partition from_unions(Object n, Object m,
                               const std::vector<std::pair<std::size_t, std::size_t>>& unions);

  std::size_t blocks() const { return block_count(labels); }
  bool total() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;
};

using PartialPartition = Partition;

/// `{{d0,c0},{d1}}`; undefined points are omitted.
std::string format_partition(const Partition& p);

struct FrobMorphism {
  Partition part;
  bool isolated = false;  // some apex component misses the boundary; only possible on 0 -> 0

  Object dom() const { return part.dom; }
  Object cod() const { return part.cod; }
  friend bool operator==(const FrobMorphism&, const FrobMorphism&) = default;
  friend std::strong_ordering operator<=>(const FrobMorphism&, const FrobMorphism&) = default;
};

struct GluedComposite {
  Partition part;
  bool middle_component = false;  // a class made only of glued middle points
};

/// Union-find closure over n+m+o; undefined points join a shared basepoint whose class
/// becomes undefined on restriction.
GluedComposite glue(const Partition& r, const Partition& s);
Partition tensor_partitions(const Partition& r, const Partition& s);
Partition swap_sides(const Partition& r);
Partition bottom_extended(const Partition& r);

/// Equivalence relations on n+m; order is reverse inclusion.
struct ERelModel {
  using Morphism = Partition;

  std::string name() const { return "erel"; }
  Object unit() const { return 0; }
  Object tensor(Object a, Object b) const { return a + b; }
  Object dom(const Partition& r) const { return r.dom; }
  Object cod(const Partition& r) const { return r.cod; }

  Partition identity(Object x) const;
  Partition compose(const Partition& r, const Partition& s) const { return glue(r, s).part; }
  Partition tensor(const Partition& r, const Partition& s) const { return tensor_partitions(r, s); }
  /// R <= S iff every S-block lies inside an R-block.
  bool leq(const Partition& r, const Partition& s) const;

  Partition copy(Object x) const;
  Partition discard(Object x) const;
  Partition cocopy(Object x) const;
  Partition codiscard(Object x) const;
  Partition symmetry(Object x, Object y) const;
  Partition opposite(const Partition& r) const { return swap_sides(r); }

  const std::vector<Partition>& homset(Object x, Object y) const;
  std::optional<Partition> enough_maps_witness(const Partition& r) const;
  std::string format(const Partition& r) const { return format_partition(r); }
};

/// The map e -> n built from the ordered classes of R : n -> 0 (e = number of classes):
/// d_k is glued to the members of the k-th class.
Partition erel_enough_maps_witness(const Partition& r);

/// Partial equivalence relations; order via the basepoint extension.
struct PERelModel : ERelModel {
  std::string name() const { return "perel"; }
  bool leq(const Partition& r, const Partition& s) const;
  const std::vector<Partition>& homset(Object x, Object y) const;
};

/// Cospans of finite sets modulo the span order: the boundary partition plus a flag for
/// isolated apex points.
struct FrobModel {
  using Morphism = FrobMorphism;

  std::string name() const { return "frob"; }
  Object unit() const { return 0; }
  Object tensor(Object a, Object b) const { return a + b; }
  Object dom(const FrobMorphism& r) const { return r.dom(); }
  Object cod(const FrobMorphism& r) const { return r.cod(); }

  FrobMorphism identity(Object x) const { return {erel_.identity(x), false}; }
  FrobMorphism compose(const FrobMorphism& r, const FrobMorphism& s) const;
  FrobMorphism tensor(const FrobMorphism& r, const FrobMorphism& s) const;
  bool leq(const FrobMorphism& r, const FrobMorphism& s) const;

  FrobMorphism copy(Object x) const { return {erel_.copy(x), false}; }
  FrobMorphism discard(Object x) const { return {erel_.discard(x), false}; }
  FrobMorphism cocopy(Object x) const { return {erel_.cocopy(x), false}; }
  FrobMorphism codiscard(Object x) const { return {erel_.codiscard(x), false}; }
  FrobMorphism symmetry(Object x, Object y) const { return {erel_.symmetry(x, y), false}; }
  FrobMorphism opposite(const FrobMorphism& r) const { return {swap_sides(r.part), r.isolated}; }

  const std::vector<FrobMorphism>& homset(Object x, Object y) const;
  std::optional<FrobMorphism> enough_maps_witness(const FrobMorphism& r) const;
  std::string format(const FrobMorphism& r) const {
    return format_partition(r.part) + (r.isolated ? "+" : "");
  }

 private:
  ERelModel erel_;
};

/// Forgets the isolated-point flag.
inline Partition frob_to_erel(const FrobMorphism& r) { return r.part; }

}  // namespace cartbicat
