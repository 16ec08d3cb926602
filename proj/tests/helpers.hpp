#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "exmod/crossed_module.hpp"
#include "exmod/gamma.hpp"

namespace exmod::testing {

// Γ = Z2 acting on Z/n by inversion.
inline GammaGroup zn_with_inversion(int n) {
  FiniteGroup zn = FiniteGroup::cyclic(n);
  std::vector<int> id(n), inv(n);
  std::iota(id.begin(), id.end(), 0);
  for (int i = 0; i < n; ++i) inv[i] = zn.inv(i);
  return make_gamma_group(zn, FiniteGroup::cyclic(2), {id, inv});
}

// Γ = Z2 acting trivially.
inline GammaGroup with_trivial_z2(const FiniteGroup& g) {
  return {g, GammaAction::trivial(FiniteGroup::cyclic(2), g)};
}

// independent oracle: all bijections preserving the table, by brute force
inline std::vector<std::vector<int>> brute_automorphisms(const FiniteGroup& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool hom = true;
    for (int a = 0; a < g.order() && hom; ++a)
      for (int b = 0; b < g.order() && hom; ++b)
        hom = perm[g.mul(a, b)] == g.mul(perm[a], perm[b]);
    if (hom) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// the crossed module (Z/n -> 1), optionally with the Γ = Z2 inversion action
inline GammaCrossedModule zn_to_trivial(int n, bool z2_inversion = false) {
  GammaGroup B = z2_inversion ? zn_with_inversion(n)
                              : with_trivial_gamma(FiniteGroup::cyclic(n));
  GammaGroup D{FiniteGroup::trivial(),
               GammaAction::trivial(B.gamma(), FiniteGroup::trivial())};
  GammaCrossedModule m;
  m.B = B;
  m.D = D;
  m.d = trivial_hom(B.group, D.group);
  m.theta.assign(1, std::vector<int>(n));
  std::iota(m.theta[0].begin(), m.theta[0].end(), 0);
  return m;
}

// (Z4, Z4, b -> 2b, ϑ with odd elements acting by inversion)
inline GammaCrossedModule z4_doubling_module() {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  GammaGroup B = with_trivial_gamma(z4);
  GammaGroup D = with_trivial_gamma(z4);
  GammaCrossedModule m;
  m.B = B;
  m.D = D;
  std::vector<int> dmap(4);
  for (int b = 0; b < 4; ++b) dmap[b] = (2 * b) % 4;
  m.d = {z4, z4, dmap};
  m.theta.assign(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int b = 0; b < 4; ++b) m.theta[x][b] = (x % 2) ? (4 - b) % 4 : b;
  return m;
}

}  // namespace exmod::testing
