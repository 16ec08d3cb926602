#pragma once

#include <vector>

#include "exmod/gamma.hpp"

namespace exmod {

/// A Γ-equivariant Π-module: an abelian Γ-group A with a Π-action by
/// automorphisms satisfying s(xa) = (sx)(sa). A and Pi share the same Γ.
struct EquivariantModule {
  GammaGroup A;
  GammaGroup Pi;
  std::vector<int> paction;  // row-major |Pi| x |A|

  int act(int x, int a) const { return paction[x * A.order() + a]; }
  const FiniteGroup& gamma() const { return A.gamma(); }

  friend bool operator==(const EquivariantModule& a,
                         const EquivariantModule& b) {
    return a.A == b.A && a.Pi == b.Pi && a.paction == b.paction;
  }
};

EquivariantModule make_module(const GammaGroup& A, const GammaGroup& Pi,
                              const std::vector<std::vector<int>>& rows);

/// Trivial Π-action module.
EquivariantModule trivial_module(const GammaGroup& A, const GammaGroup& Pi);

/// Abelian A; Π acts by automorphisms; compatibility with Γ. Witnesses:
/// "module-abelian" -> {a,b}; "module-action" -> {x,y,a};
/// "module-compat" -> {s,x,a}.
Report validate_module(const EquivariantModule& m);

}  // namespace exmod
