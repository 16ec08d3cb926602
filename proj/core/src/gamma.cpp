#include "exmod/gamma.hpp"

#include <algorithm>
#include <numeric>

namespace exmod {

GammaAction GammaAction::trivial(const FiniteGroup& gamma,
                                 const FiniteGroup& target) {
  GammaAction a;
  a.gamma = gamma;
  a.target = target;
  a.act.resize(static_cast<size_t>(gamma.order()) * target.order());
  for (int s = 0; s < gamma.order(); ++s)
    for (int x = 0; x < target.order(); ++x)
      a.act[s * target.order() + x] = x;
  return a;
}

GammaAction GammaAction::from_rows(const FiniteGroup& gamma,
                                   const FiniteGroup& target,
                                   const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != gamma.order())
    throw StructuralError("action must have one row per Γ element");
  GammaAction a;
  a.gamma = gamma;
  a.target = target;
  a.act.reserve(static_cast<size_t>(gamma.order()) * target.order());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != target.order())
      throw StructuralError("action row has wrong length");
    for (int v : row) {
      if (v < 0 || v >= target.order())
        throw StructuralError("action row entry out of range");
      a.act.push_back(v);
    }
  }
  return a;
}

GammaGroup with_trivial_gamma(const FiniteGroup& g) {
  return {g, GammaAction::trivial(FiniteGroup::trivial(), g)};
}

GammaGroup make_gamma_group(const FiniteGroup& g, const FiniteGroup& gamma,
                            const std::vector<std::vector<int>>& rows) {
  return {g, GammaAction::from_rows(gamma, g, rows)};
}

bool same_gamma(const GammaGroup& a, const GammaGroup& b) {
  return a.gamma() == b.gamma();
}

Report validate_action(const GammaAction& a) {
  const int ng = a.gamma.order(), nt = a.target.order();
  if (static_cast<int>(a.act.size()) != ng * nt)
    return Report::structural("action", "action table has wrong dimensions");
  for (int x = 0; x < nt; ++x)
    if (a.apply(0, x) != x)
      return Report::violation("action-identity",
                               "1 does not act as the identity", {x});
  for (int s = 0; s < ng; ++s)
    for (int t = 0; t < ng; ++t)
      for (int x = 0; x < nt; ++x)
        if (a.apply(a.gamma.mul(s, t), x) != a.apply(s, a.apply(t, x)))
          return Report::violation("action-comp",
                                   "(st)x != s(tx)", {s, t, x});
  for (int s = 0; s < ng; ++s) {
    std::vector<char> hit(nt, 0);
    for (int x = 0; x < nt; ++x) {
      if (hit[a.apply(s, x)]++)
        return Report::violation("action-auto",
                                 "row is not a permutation", {s, x, -1});
    }
    for (int x = 0; x < nt; ++x)
      for (int y = 0; y < nt; ++y)
        if (a.apply(s, a.target.mul(x, y)) !=
            a.target.mul(a.apply(s, x), a.apply(s, y)))
          return Report::violation("action-auto",
                                   "s(xy) != (sx)(sy)", {s, x, y});
  }
  return Report::pass();
}

Report validate_gamma_group(const GammaGroup& g) {
  if (!(g.action.target == g.group))
    return Report::structural("gamma-group", "action target differs from group");
  if (auto r = validate_group(g.group); !r.ok()) return r;
  if (auto r = validate_group(g.gamma()); !r.ok()) {
    r.law = "gamma-" + r.law;
    return r;
  }
  return validate_action(g.action);
}

Report validate_gamma_hom(const GroupHom& f, const GammaAction& act_src,
                          const GammaAction& act_dst) {
  if (!(act_src.gamma == act_dst.gamma))
    return Report::structural("gamma-hom", "actions have different Γ");
  if (!(f.src == act_src.target) || !(f.dst == act_dst.target))
    return Report::structural("gamma-hom",
                              "hom endpoints differ from action targets");
  if (auto r = validate_hom(f); !r.ok()) return r;
  for (int s = 0; s < act_src.gamma.order(); ++s)
    for (int x = 0; x < f.src.order(); ++x)
      if (f.apply(act_src.apply(s, x)) != act_dst.apply(s, f.apply(x)))
        return Report::violation("equivariance", "f(sx) != s f(x)", {s, x});
  return Report::pass();
}

std::vector<std::vector<int>> all_gamma_homs(const GammaGroup& src,
                                             const GammaGroup& dst,
                                             const Limits& lim) {
  if (!same_gamma(src, dst))
    throw StructuralError("all_gamma_homs: different Γ");
  std::vector<std::vector<int>> out;
  for (auto& m : all_homomorphisms(src.group, dst.group, lim)) {
    bool equivariant = true;
    for (int s = 0; s < src.gamma().order() && equivariant; ++s)
      for (int x = 0; x < src.order() && equivariant; ++x)
        equivariant = m[src.act(s, x)] == dst.act(s, m[x]);
    if (equivariant) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace exmod
