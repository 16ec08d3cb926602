#pragma once

#include <vector>

#include "exmod/equivariant_module.hpp"

namespace exmod {

/// Normalized equivariant 2-cochain f : Π² ∪ (Π×Γ) -> A over an
/// equivariant module. fQQ(x,1) = fQQ(1,y) = fQG(x,1) = 0.
struct Cochain2 {
  EquivariantModule mod;
  std::vector<int> fQQ;  // row-major |Pi| x |Pi|
  std::vector<int> fQG;  // row-major |Pi| x |Gamma|

  int qq(int x, int y) const { return fQQ[x * mod.Pi.order() + y]; }
  int qg(int x, int s) const { return fQG[x * mod.gamma().order() + s]; }

  static Cochain2 zero(const EquivariantModule& mod);

  std::pair<const std::vector<int>&, const std::vector<int>&> key() const {
    return {fQQ, fQG};
  }

  friend bool operator==(const Cochain2& a, const Cochain2& b) {
    return a.fQQ == b.fQQ && a.fQG == b.fQG && a.mod == b.mod;
  }
};

/// Normalized 1-cochain g : Π -> A with g(1) = 0.
struct Cochain1 {
  EquivariantModule mod;
  std::vector<int> g;

  static Cochain1 zero(const EquivariantModule& mod);
};

Report validate_normalized(const Cochain2& f);

/// Cocycle identities, with the Π-action in the left-action slot:
///   τ·f(x,σ) + f(σx,τ) = f(x,τσ)
///   σ·f(x,y) + f(xy,σ) = f(x,σ) + (σx)·f(y,σ) + f(σx,σy)
///   x·f(y,z) + f(x,yz) = f(x,y) + f(xy,z)
/// Checks normalization first. Witness is the argument tuple.
Report is_cocycle2(const Cochain2& f);

/// δg(x,y) = g(x) + x·g(y) − g(xy);  δg(x,σ) = σ·g(x) − g(σx).
Cochain2 coboundary(const Cochain1& g);

Cochain2 add(const Cochain2& a, const Cochain2& b);
Cochain2 neg(const Cochain2& a);

/// All cocycles in lexicographic slot order (fQQ rows first, then fQG).
std::vector<Cochain2> enumerate_z2(const EquivariantModule& mod,
                                   const Limits& lim = {});

/// All coboundaries, sorted; the image of `coboundary` over all 1-cochains.
std::vector<Cochain2> enumerate_b2(const EquivariantModule& mod,
                                   const Limits& lim = {});

struct H2Result {
  EquivariantModule mod;
  std::vector<Cochain2> z2;
  std::vector<Cochain2> b2;
  std::vector<Cochain2> reps;  // lexicographically minimal per class
  std::vector<int> class_of;   // parallel to z2, index into reps
  long long z2_count = 0;
  long long b2_count = 0;
  long long h2_count = 0;
};

H2Result h2(const EquivariantModule& mod, const Limits& lim = {});

/// Class index of a cocycle within an H2Result; PreconditionError when the
/// cochain is not one of the enumerated cocycles.
int class_index_of(const H2Result& res, const Cochain2& f);

struct LinearCounts {
  long long z2 = 0;
  long long b2 = 0;
  long long h2 = 0;
};

/// Exact counts via integer linear algebra over a basis of A: the cocycle
/// identities become a homogeneous system whose kernel is counted through a
/// Hermite normal form, with no cochain enumeration.
LinearCounts h2_linear(const EquivariantModule& mod);

}  // namespace exmod
