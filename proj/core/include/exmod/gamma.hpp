#pragma once

#include <vector>

#include "exmod/fingroup.hpp"
#include "exmod/report.hpp"

namespace exmod {

/// Left action of a finite group `gamma` on `target` by automorphisms,
/// stored as |gamma| permutation rows.
struct GammaAction {
  FiniteGroup gamma;
  FiniteGroup target;
  std::vector<int> act;  // row-major |gamma| x |target|

  int apply(int s, int x) const { return act[s * target.order() + x]; }

  static GammaAction trivial(const FiniteGroup& gamma,
                             const FiniteGroup& target);
  static GammaAction from_rows(const FiniteGroup& gamma,
                               const FiniteGroup& target,
                               const std::vector<std::vector<int>>& rows);

  friend bool operator==(const GammaAction& a, const GammaAction& b) {
    return a.gamma == b.gamma && a.target == b.target && a.act == b.act;
  }
};

/// A group together with a Γ-action on it.
struct GammaGroup {
  FiniteGroup group;
  GammaAction action;

  const FiniteGroup& gamma() const { return action.gamma; }
  int act(int s, int x) const { return action.apply(s, x); }
  int order() const { return group.order(); }

  friend bool operator==(const GammaGroup& a, const GammaGroup& b) {
    return a.group == b.group && a.action == b.action;
  }
};

GammaGroup with_trivial_gamma(const FiniteGroup& g);
GammaGroup make_gamma_group(const FiniteGroup& g, const FiniteGroup& gamma,
                            const std::vector<std::vector<int>>& rows);

bool same_gamma(const GammaGroup& a, const GammaGroup& b);

/// Identity row at 1, composition law, and each row an automorphism.
/// Witnesses: "action-identity" -> {x}; "action-comp" -> {s,t,x};
/// "action-auto" -> {s,x,y}.
Report validate_action(const GammaAction& a);

/// Group laws of the carrier plus validate_action.
Report validate_gamma_group(const GammaGroup& g);

/// f is a group hom and f(sx) = s f(x) for all s, x. The two actions must
/// share the same Γ (structural otherwise). Witness for "equivariance" is
/// {s, x}.
Report validate_gamma_hom(const GroupHom& f, const GammaAction& act_src,
                          const GammaAction& act_dst);

/// All Γ-homomorphisms src -> dst as image tables, sorted.
std::vector<std::vector<int>> all_gamma_homs(const GammaGroup& src,
                                             const GammaGroup& dst,
                                             const Limits& lim = {});

}  // namespace exmod
