#pragma once

#include <vector>

#include "exmod/gamma.hpp"

namespace exmod {

/// The automorphism group of a finite group. `perms` lists each
/// automorphism as a permutation, sorted lexicographically, so the identity
/// automorphism has index 0. Multiplication in `group` is composition with
/// the convention (fh)(x) = f(h(x)).
struct AutGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> perms;

  int index_of(const std::vector<int>& perm) const;
  int apply(int f, int x) const { return perms[f][x]; }
};

/// Enumerates Aut(g) by backtracking over generator images. Throws
/// ResourceError when |g| exceeds lim.aut_order_bound.
AutGroup automorphism_group(const FiniteGroup& g, const Limits& lim = {});

/// The Γ-action on Aut(b): (s·f)(x) = s f(s⁻¹ x).
GammaAction gamma_action_on_aut(const GammaGroup& b, const AutGroup& aut);

/// b ↦ conjugation by b, as a hom into the automorphism group.
GroupHom inner_hom(const FiniteGroup& b, const AutGroup& aut);

}  // namespace exmod
