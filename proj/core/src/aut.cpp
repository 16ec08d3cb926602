#include "exmod/aut.hpp"

#include <algorithm>
#include <map>

namespace exmod {

int AutGroup::index_of(const std::vector<int>& perm) const {
  auto it = std::lower_bound(perms.begin(), perms.end(), perm);
  if (it == perms.end() || *it != perm)
    throw PreconditionError("permutation is not an automorphism of the group");
  return static_cast<int>(it - perms.begin());
}

AutGroup automorphism_group(const FiniteGroup& g, const Limits& lim) {
  if (g.order() > lim.aut_order_bound)
    throw ResourceError("automorphism_group: order " +
                        std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(lim.aut_order_bound));
  AutGroup out;
  out.perms = all_isomorphisms(g, g, lim);  // sorted, identity first
  const int n = static_cast<int>(out.perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[out.perms[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int f = 0; f < n; ++f)
    for (int h = 0; h < n; ++h) {
      std::vector<int> comp(g.order());
      for (int x = 0; x < g.order(); ++x) comp[x] = out.perms[f][out.perms[h][x]];
      t[f][h] = index.at(comp);
    }
  out.group = FiniteGroup::from_table(t);
  return out;
}

GammaAction gamma_action_on_aut(const GammaGroup& b, const AutGroup& aut) {
  const int ng = b.gamma().order();
  const int na = aut.group.order();
  GammaAction a;
  a.gamma = b.gamma();
  a.target = aut.group;
  a.act.resize(static_cast<size_t>(ng) * na);
  for (int s = 0; s < ng; ++s) {
    const int sinv = b.gamma().inv(s);
    for (int f = 0; f < na; ++f) {
      std::vector<int> perm(b.order());
      for (int x = 0; x < b.order(); ++x)
        perm[x] = b.act(s, aut.apply(f, b.act(sinv, x)));
      a.act[s * na + f] = aut.index_of(perm);
    }
  }
  return a;
}

GroupHom inner_hom(const FiniteGroup& b, const AutGroup& aut) {
  std::vector<int> m(b.order());
  for (int x = 0; x < b.order(); ++x) {
    std::vector<int> perm(b.order());
    for (int y = 0; y < b.order(); ++y)
      perm[y] = b.mul(b.mul(x, y), b.inv(x));
    m[x] = aut.index_of(perm);
  }
  return {b, aut.group, std::move(m)};
}

}  // namespace exmod
