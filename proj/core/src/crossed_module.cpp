#include "exmod/crossed_module.hpp"

#include <algorithm>

namespace exmod {

int GammaCrossedModule::theta_inv(int x, int b) const {
  const auto& row = theta[x];
  for (int i = 0; i < static_cast<int>(row.size()); ++i)
    if (row[i] == b) return i;
  throw Error("theta row is not a permutation");
}

Report validate_crossed_module(const GammaCrossedModule& m) {
  if (!same_gamma(m.B, m.D))
    return Report::structural("crossed-module", "B and D have different Γ");
  if (!(m.d.src == m.B.group) || !(m.d.dst == m.D.group))
    return Report::structural("crossed-module", "d endpoints mismatch");
  if (static_cast<int>(m.theta.size()) != m.D.order())
    return Report::structural("crossed-module", "ϑ needs one row per D element");
  for (const auto& row : m.theta)
    if (static_cast<int>(row.size()) != m.B.order())
      return Report::structural("crossed-module", "ϑ row has wrong length");

  if (auto r = validate_gamma_group(m.B); !r.ok()) return r;
  if (auto r = validate_gamma_group(m.D); !r.ok()) return r;
  if (auto r = validate_gamma_hom(m.d, m.B.action, m.D.action); !r.ok()) {
    r.law = "d-" + r.law;
    return r;
  }

  const auto& B = m.B.group;
  const auto& D = m.D.group;
  // ϑ as a hom into Aut B, checked directly on the table
  for (int x = 0; x < D.order(); ++x) {
    std::vector<char> hit(B.order(), 0);
    for (int b = 0; b < B.order(); ++b)
      if (hit[m.theta_apply(x, b)]++)
        return Report::violation("theta-auto", "ϑ_x is not a permutation",
                                 {-1, x, b});
    for (int a = 0; a < B.order(); ++a)
      for (int b = 0; b < B.order(); ++b)
        if (m.theta_apply(x, B.mul(a, b)) !=
            B.mul(m.theta_apply(x, a), m.theta_apply(x, b)))
          return Report::violation("theta-auto", "ϑ_x(a+b) != ϑ_x a + ϑ_x b",
                                   {-1, x, a});
  }
  for (int b = 0; b < B.order(); ++b)
    if (m.theta_apply(0, b) != b)
      return Report::violation("theta-hom", "ϑ_1 != id", {-1, 0, b});
  for (int x = 0; x < D.order(); ++x)
    for (int y = 0; y < D.order(); ++y)
      for (int b = 0; b < B.order(); ++b)
        if (m.theta_apply(D.mul(x, y), b) !=
            m.theta_apply(x, m.theta_apply(y, b)))
          return Report::violation("theta-hom", "ϑ_{xy} != ϑ_x ϑ_y", {x, y, b});

  for (int b = 0; b < B.order(); ++b)
    for (int a = 0; a < B.order(); ++a)
      if (m.theta_apply(m.d.apply(b), a) != B.mul(B.mul(b, a), B.inv(b)))
        return Report::violation("C1", "ϑ_{d(b)} != μ_b", {-1, b, a});

  for (int x = 0; x < D.order(); ++x)
    for (int b = 0; b < B.order(); ++b)
      if (m.d.apply(m.theta_apply(x, b)) !=
          D.mul(D.mul(x, m.d.apply(b)), D.inv(x)))
        return Report::violation("C2", "d(ϑ_x b) != x d(b) x⁻¹", {-1, x, b});

  for (int s = 0; s < m.gamma().order(); ++s)
    for (int x = 0; x < D.order(); ++x)
      for (int b = 0; b < B.order(); ++b)
        if (m.B.act(s, m.theta_apply(x, b)) !=
            m.theta_apply(m.D.act(s, x), m.B.act(s, b)))
          return Report::violation("C3", "σ(ϑ_x b) != ϑ_{σx}(σb)", {s, x, b});

  return Report::pass();
}

GammaCrossedModule from_inclusion(const GammaGroup& D,
                                  const std::vector<int>& b_elems) {
  std::vector<int> elems = b_elems;
  std::sort(elems.begin(), elems.end());
  if (!is_subgroup(D.group, elems))
    throw PreconditionError("from_inclusion: not a subgroup of D");
  if (auto w = normality_witness(D.group, elems))
    throw PreconditionError(
        "from_inclusion: subgroup not normal, witness x=" +
        std::to_string((*w)[0]) + " n=" + std::to_string((*w)[1]));
  const Subgroup sub = subgroup(D.group, elems);
  const int ng = D.gamma().order();
  // Γ-invariance and restricted action
  std::vector<std::vector<int>> rows(ng, std::vector<int>(sub.group.order()));
  for (int s = 0; s < ng; ++s)
    for (int i = 0; i < sub.group.order(); ++i) {
      const int img = D.act(s, sub.elems[i]);
      if (sub.parent_to_sub[img] < 0)
        throw PreconditionError(
            "from_inclusion: subgroup not Γ-invariant, witness σ=" +
            std::to_string(s) + " b=" + std::to_string(sub.elems[i]));
      rows[s][i] = sub.parent_to_sub[img];
    }
  GammaCrossedModule m;
  m.B = make_gamma_group(sub.group, D.gamma(), rows);
  m.D = D;
  std::vector<int> dmap(sub.group.order());
  for (int i = 0; i < sub.group.order(); ++i) dmap[i] = sub.elems[i];
  m.d = {sub.group, D.group, std::move(dmap)};
  m.theta.assign(D.order(), std::vector<int>(sub.group.order()));
  for (int x = 0; x < D.order(); ++x)
    for (int i = 0; i < sub.group.order(); ++i) {
      const int conj =
          D.group.mul(D.group.mul(x, sub.elems[i]), D.group.inv(x));
      m.theta[x][i] = sub.parent_to_sub[conj];
    }
  return m;
}

GammaCrossedModule from_module(const GammaGroup& B, const GammaGroup& D,
                               const std::vector<std::vector<int>>& action) {
  if (!B.group.is_abelian())
    throw PreconditionError("from_module: B must be abelian");
  EquivariantModule check = make_module(B, D, action);
  if (auto r = validate_module(check); !r.ok())
    throw PreconditionError("from_module: " + r.what);
  GammaCrossedModule m;
  m.B = B;
  m.D = D;
  m.d = trivial_hom(B.group, D.group);
  m.theta = action;
  return m;
}

GammaCrossedModule from_conjugation(const GammaGroup& B, const Limits& lim) {
  const AutGroup aut = automorphism_group(B.group, lim);
  GammaCrossedModule m;
  m.B = B;
  m.D = {aut.group, gamma_action_on_aut(B, aut)};
  m.d = inner_hom(B.group, aut);
  m.theta = aut.perms;
  return m;
}

GammaCrossedModule from_central_surjection(const GammaGroup& B,
                                           const GammaGroup& D,
                                           const GroupHom& p) {
  if (auto r = validate_gamma_hom(p, B.action, D.action); !r.ok())
    throw PreconditionError("from_central_surjection: p: " + r.what);
  if (static_cast<int>(image(p).size()) != D.order())
    throw PreconditionError("from_central_surjection: p is not surjective");
  const auto ker = kernel(p);
  const auto z = center(B.group);
  for (int e : ker)
    if (!std::binary_search(z.begin(), z.end(), e))
      throw PreconditionError(
          "from_central_surjection: Ker p not central, witness b=" +
          std::to_string(e));
  GammaCrossedModule m;
  m.B = B;
  m.D = D;
  m.d = p;
  // ϑ_x = conjugation by any section; central kernel makes it well-defined
  std::vector<int> section(D.order(), -1);
  for (int b = 0; b < B.order(); ++b)
    if (section[p.apply(b)] < 0) section[p.apply(b)] = b;
  m.theta.assign(D.order(), std::vector<int>(B.order()));
  for (int x = 0; x < D.order(); ++x) {
    const int s = section[x];
    for (int b = 0; b < B.order(); ++b)
      m.theta[x][b] = B.group.mul(B.group.mul(s, b), B.group.inv(s));
  }
  return m;
}

KerData pi1_data(const GammaCrossedModule& m) {
  const auto ker_elems = kernel(m.d);
  Subgroup sub = subgroup(m.B.group, ker_elems);
  const int ng = m.gamma().order();
  std::vector<std::vector<int>> rows(ng, std::vector<int>(sub.group.order()));
  for (int s = 0; s < ng; ++s)
    for (int i = 0; i < sub.group.order(); ++i) {
      const int img = m.B.act(s, sub.elems[i]);
      if (sub.parent_to_sub[img] < 0)
        throw PreconditionError("pi1: Ker d is not Γ-closed, witness σ=" +
                                std::to_string(s) + " a=" +
                                std::to_string(sub.elems[i]));
      rows[s][i] = sub.parent_to_sub[img];
    }
  return {make_gamma_group(sub.group, m.gamma(), rows), std::move(sub)};
}

CokerData pi0_data(const GammaCrossedModule& m) {
  const auto im = image(m.d);
  Quotient q = quotient(m.D.group, im);
  const int ng = m.gamma().order();
  std::vector<std::vector<int>> rows(ng, std::vector<int>(q.group.order()));
  for (int s = 0; s < ng; ++s)
    for (int i = 0; i < q.group.order(); ++i)
      rows[s][i] = q.proj.apply(m.D.act(s, q.reps[i]));
  return {make_gamma_group(q.group, m.gamma(), rows), std::move(q)};
}

GammaGroup pi1(const GammaCrossedModule& m) { return pi1_data(m).ker; }
GammaGroup pi0(const GammaCrossedModule& m) { return pi0_data(m).coker; }

EquivariantModule pi_module(const GammaCrossedModule& m) {
  const KerData kd = pi1_data(m);
  const CokerData cd = pi0_data(m);
  const int nk = kd.ker.order(), nc = cd.coker.order();
  std::vector<std::vector<int>> rows(nc, std::vector<int>(nk));
  for (int s = 0; s < nc; ++s) {
    const int x = cd.q.reps[s];
    for (int i = 0; i < nk; ++i) {
      const int img = m.theta_apply(x, kd.sub.elems[i]);
      if (kd.sub.parent_to_sub[img] < 0)
        throw PreconditionError("pi_module: ϑ does not preserve Ker d");
      rows[s][i] = kd.sub.parent_to_sub[img];
    }
  }
  // well-definedness across each whole coset, not just the representative
  for (int x = 0; x < m.D.order(); ++x) {
    const int s = cd.q.proj.apply(x);
    for (int i = 0; i < nk; ++i) {
      const int img = m.theta_apply(x, kd.sub.elems[i]);
      if (kd.sub.parent_to_sub[img] != rows[s][i])
        throw PreconditionError(
            "pi_module: action ill-defined on coset " + std::to_string(s) +
            " at x=" + std::to_string(x) + " a=" +
            std::to_string(kd.sub.elems[i]));
    }
  }
  return make_module(kd.ker, cd.coker, rows);
}

EquivariantModule induced_module(const GammaCrossedModule& src,
                                 const GammaCrossedModule& dst,
                                 const std::vector<int>& f0) {
  const EquivariantModule base = pi_module(dst);
  const CokerData src0 = pi0_data(src);
  const CokerData dst0 = pi0_data(dst);
  // the map Coker d -> Coker d' induced by f0
  std::vector<int> induced(src0.coker.order());
  for (int s = 0; s < src0.coker.order(); ++s)
    induced[s] = dst0.q.proj.apply(f0[src0.q.reps[s]]);
  for (int x = 0; x < src.D.order(); ++x)
    if (induced[src0.q.proj.apply(x)] != dst0.q.proj.apply(f0[x]))
      throw PreconditionError("induced_module: f0 does not descend to π₀");
  std::vector<std::vector<int>> rows(src0.coker.order(),
                                     std::vector<int>(base.A.order()));
  for (int s = 0; s < src0.coker.order(); ++s)
    for (int a = 0; a < base.A.order(); ++a) rows[s][a] = base.act(induced[s], a);
  return make_module(base.A, src0.coker, rows);
}

EquivariantModule psi_module(const GammaCrossedModule& m, const GammaGroup& Q,
                             const std::vector<int>& psi) {
  const EquivariantModule base = pi_module(m);
  if (static_cast<int>(psi.size()) != Q.order())
    throw StructuralError("psi_module: ψ table has wrong length");
  std::vector<std::vector<int>> rows(Q.order(),
                                     std::vector<int>(base.A.order()));
  for (int x = 0; x < Q.order(); ++x)
    for (int a = 0; a < base.A.order(); ++a) rows[x][a] = base.act(psi[x], a);
  return make_module(base.A, Q, rows);
}

Report validate_crossed_hom(const CrossedModuleHom& h) {
  if (!same_gamma(h.srcM.B, h.dstM.B))
    return Report::structural("crossed-hom", "source and target differ in Γ");
  if (auto r = validate_gamma_hom(h.f1, h.srcM.B.action, h.dstM.B.action);
      !r.ok()) {
    r.law = "f1-" + r.law;
    return r;
  }
  if (auto r = validate_gamma_hom(h.f0, h.srcM.D.action, h.dstM.D.action);
      !r.ok()) {
    r.law = "f0-" + r.law;
    return r;
  }
  for (int b = 0; b < h.srcM.B.order(); ++b)
    if (h.f0.apply(h.srcM.d.apply(b)) != h.dstM.d.apply(h.f1.apply(b)))
      return Report::violation("H1", "f0 d != d' f1", {b});
  for (int x = 0; x < h.srcM.D.order(); ++x)
    for (int b = 0; b < h.srcM.B.order(); ++b)
      if (h.f1.apply(h.srcM.theta_apply(x, b)) !=
          h.dstM.theta_apply(h.f0.apply(x), h.f1.apply(b)))
        return Report::violation("H2", "f1(ϑ_x b) != ϑ'_{f0 x} f1(b)", {x, b});
  return Report::pass();
}

Report validate_crossed_morphism(const CrossedMorphism& t) {
  if (auto r = validate_crossed_hom(t.hom); !r.ok()) return r;
  const EquivariantModule expected =
      induced_module(t.hom.srcM, t.hom.dstM, t.hom.f0.map);
  if (!(t.phi.mod == expected))
    return Report::structural("crossed-morphism",
                              "φ lives over the wrong module");
  return is_cocycle2(t.phi);
}

CrossedMorphism identity_morphism(const GammaCrossedModule& m) {
  CrossedMorphism t;
  t.hom = {m, m, identity_hom(m.B.group), identity_hom(m.D.group)};
  t.phi = Cochain2::zero(pi_module(m));
  return t;
}

CrossedMorphism compose(const CrossedMorphism& t2, const CrossedMorphism& t1) {
  if (!(t1.hom.dstM == t2.hom.srcM))
    throw StructuralError("compose: morphisms are not composable");
  CrossedMorphism out;
  out.hom = {t1.hom.srcM, t2.hom.dstM, compose(t2.hom.f1, t1.hom.f1),
             compose(t2.hom.f0, t1.hom.f0)};
  const EquivariantModule mod =
      induced_module(out.hom.srcM, out.hom.dstM, out.hom.f0.map);

  // φ''(r,s) = φ'(induced f0 r, induced f0 s) + f'1(φ(r,s)); the pullback
  // precomposes with the map on π₀ induced by the inner morphism's f0
  const CokerData src0 = pi0_data(t1.hom.srcM);
  const CokerData mid0 = pi0_data(t1.hom.dstM);
  const KerData mid1 = pi1_data(t2.hom.srcM);
  const KerData dst1 = pi1_data(t2.hom.dstM);
  std::vector<int> ind(src0.coker.order());
  for (int s = 0; s < src0.coker.order(); ++s)
    ind[s] = mid0.q.proj.apply(t1.hom.f0.apply(src0.q.reps[s]));
  // f'1 restricted to Ker d' -> Ker d''
  std::vector<int> push(mid1.ker.order());
  for (int i = 0; i < mid1.ker.order(); ++i) {
    const int img = t2.hom.f1.apply(mid1.sub.elems[i]);
    if (dst1.sub.parent_to_sub[img] < 0)
      throw Error("compose: f'1 does not restrict to kernels");
    push[i] = dst1.sub.parent_to_sub[img];
  }

  Cochain2 phi = Cochain2::zero(mod);
  const auto& A = mod.A.group;
  const int nc = src0.coker.order();
  const int ng = mod.gamma().order();
  for (int r = 0; r < nc; ++r)
    for (int s = 0; s < nc; ++s)
      phi.fQQ[r * nc + s] = A.mul(t2.phi.qq(ind[r], ind[s]),
                                  push[t1.phi.qq(r, s)]);
  for (int r = 0; r < nc; ++r)
    for (int s = 0; s < ng; ++s)
      phi.fQG[r * ng + s] = A.mul(t2.phi.qg(ind[r], s),
                                  push[t1.phi.qg(r, s)]);
  out.phi = std::move(phi);
  return out;
}

std::vector<CrossedModuleHom> all_crossed_homs(const GammaCrossedModule& src,
                                               const GammaCrossedModule& dst,
                                               const Limits& lim) {
  std::vector<CrossedModuleHom> out;
  const auto f1s = all_gamma_homs(src.B, dst.B, lim);
  const auto f0s = all_gamma_homs(src.D, dst.D, lim);
  for (const auto& f1 : f1s)
    for (const auto& f0 : f0s) {
      CrossedModuleHom h{src, dst, {src.B.group, dst.B.group, f1},
                         {src.D.group, dst.D.group, f0}};
      bool ok = true;
      for (int b = 0; b < src.B.order() && ok; ++b)
        ok = f0[src.d.apply(b)] == dst.d.apply(f1[b]);
      for (int x = 0; x < src.D.order() && ok; ++x)
        for (int b = 0; b < src.B.order() && ok; ++b)
          ok = f1[src.theta_apply(x, b)] == dst.theta_apply(f0[x], f1[b]);
      if (ok) out.push_back(std::move(h));
    }
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_crossed_module_isomorphism(const GammaCrossedModule& a,
                                const GammaCrossedModule& b,
                                const Limits& lim) {
  if (a.B.order() != b.B.order() || a.D.order() != b.D.order())
    return std::nullopt;
  for (const auto& f1 : all_isomorphisms(a.B.group, b.B.group, lim)) {
    bool f1_ok = true;
    for (int s = 0; s < a.gamma().order() && f1_ok; ++s)
      for (int x = 0; x < a.B.order() && f1_ok; ++x)
        f1_ok = f1[a.B.act(s, x)] == b.B.act(s, f1[x]);
    if (!f1_ok) continue;
    for (const auto& f0 : all_isomorphisms(a.D.group, b.D.group, lim)) {
      bool ok = true;
      for (int s = 0; s < a.gamma().order() && ok; ++s)
        for (int x = 0; x < a.D.order() && ok; ++x)
          ok = f0[a.D.act(s, x)] == b.D.act(s, f0[x]);
      for (int e = 0; e < a.B.order() && ok; ++e)
        ok = f0[a.d.apply(e)] == b.d.apply(f1[e]);
      for (int x = 0; x < a.D.order() && ok; ++x)
        for (int e = 0; e < a.B.order() && ok; ++e)
          ok = f1[a.theta_apply(x, e)] == b.theta_apply(f0[x], f1[e]);
      if (ok) return std::make_pair(f1, f0);
    }
  }
  return std::nullopt;
}

}  // namespace exmod
