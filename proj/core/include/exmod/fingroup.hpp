#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exmod/report.hpp"

namespace exmod {

/// Finite group on elements 0..n-1 given by its full multiplication table.
/// Index 0 is the identity by convention. Inverses are derived from the
/// table; an element without a two-sided inverse gets the sentinel -1 and
/// is reported by validate_group. Values are immutable after construction.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// Builds a group from a dense table. Performs structural checks only
  /// (dimensions and index range); law checking is validate_group's job.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& mul);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup direct_product(const FiniteGroup& a,
                                    const FiniteGroup& b);
  static FiniteGroup dihedral(int n);   // order 2n, n >= 1
  static FiniteGroup quaternion8();
  static FiniteGroup dicyclic3();       // order 12
  static FiniteGroup symmetric(int n);  // n <= 5
  static FiniteGroup alternating4();

  /// Closure of a set of permutations of {0..deg-1} under composition,
  /// indexed in lexicographic order (the identity lands at index 0).
  static FiniteGroup from_permutations(std::vector<std::vector<int>> gens);

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long e) const;
  int order_of(int a) const;
  bool is_abelian() const;
  std::vector<int> element_orders() const;

  const std::vector<int>& flat_table() const { return mul_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  int order_ = 1;
  std::vector<int> mul_;  // row-major order_ x order_
  std::vector<int> inv_;  // -1 where undefined

  void derive_inverses();
};

/// Group homomorphism as a dense image table. src and dst are stored by
/// value; equality of groups is table equality throughout the library.
struct GroupHom {
  FiniteGroup src;
  FiniteGroup dst;
  std::vector<int> map;  // length |src|, entries in 0..|dst|-1

  int apply(int x) const { return map[x]; }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.src == b.src && a.dst == b.dst && a.map == b.map;
  }
};

GroupHom identity_hom(const FiniteGroup& g);
GroupHom trivial_hom(const FiniteGroup& src, const FiniteGroup& dst);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// Checks identity placement, two-sided identity, cancellation/inverses and
/// associativity, in that order. Witnesses: law "identity" -> {a};
/// "inverse" -> {a}; "assoc" -> {a,b,c} with (ab)c != a(bc).
Report validate_group(const FiniteGroup& g);

/// map(xy) = map(x)map(y) for all x,y; witness {x,y} on failure.
Report validate_hom(const GroupHom& f);

// ---- subgroups, quotients and friends ------------------------------------

/// Subgroup generated by `seed` (identity always included), sorted.
std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

/// Returns {x, n} with x n x^-1 outside N, or nullopt when N is normal.
std::optional<std::array<int, 2>> normality_witness(
    const FiniteGroup& g, const std::vector<int>& elems);

std::vector<int> kernel(const GroupHom& f);
std::vector<int> image(const GroupHom& f);
std::vector<int> center(const FiniteGroup& g);

/// A subgroup reindexed as a group of its own. elems is sorted, so the
/// parent identity 0 becomes index 0 of the child.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> elems;          // child index -> parent index
  std::vector<int> parent_to_sub;  // parent index -> child index or -1
};

Subgroup subgroup(const FiniteGroup& g, std::vector<int> elems);

/// Quotient by a normal subgroup on canonical minimal-index coset
/// representatives, ordered by representative; the identity coset is 0.
struct Quotient {
  FiniteGroup group;
  std::vector<int> reps;  // coset index -> representative in g
  GroupHom proj;          // g -> group
};

Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal);

// ---- hom and isomorphism search -------------------------------------------

/// Greedy generating sequence plus a spanning factorization: every element
/// is parent * gens[via_gen], walking bfs_order from the identity. Shared
/// by the hom/aut backtracking searches.
struct GenDecomposition {
  std::vector<int> gens;
  std::vector<int> bfs_order;  // identity first
  std::vector<int> parent;     // -1 for identity
  std::vector<int> via_gen;    // index into gens, -1 for identity
};

GenDecomposition generator_decomposition(const FiniteGroup& g);

std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& src,
                                                const FiniteGroup& dst,
                                                const Limits& lim = {});

std::vector<std::vector<int>> all_isomorphisms(const FiniteGroup& src,
                                               const FiniteGroup& dst,
                                               const Limits& lim = {});

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& src,
                                                 const FiniteGroup& dst,
                                                 const Limits& lim = {});

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                   const Limits& lim = {});

}  // namespace exmod
