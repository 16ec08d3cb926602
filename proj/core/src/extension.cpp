#include "exmod/extension.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "exmod/small_groups.hpp"

namespace exmod {

namespace {

// j(b) -> b lookup; -1 outside the image.
std::vector<int> j_inverse(const Extension& e) {
  std::vector<int> inv(e.E.order(), -1);
  for (int b = 0; b < e.M.B.order(); ++b) inv[e.j.apply(b)] = b;
  return inv;
}

// minimal-index transversal of p, with u_1 = identity
std::vector<int> transversal(const GammaGroup& E, const GroupHom& p,
                             int nq) {
  std::vector<int> u(nq, -1);
  for (int el = 0; el < E.order(); ++el)
    if (u[p.apply(el)] < 0) u[p.apply(el)] = el;
  for (int x = 0; x < nq; ++x)
    if (u[x] < 0) throw PreconditionError("p is not surjective");
  return u;
}

}  // namespace

Report validate_extension(const Extension& e) {
  if (!same_gamma(e.M.B, e.Q) || !same_gamma(e.M.B, e.E))
    return Report::structural("extension", "components differ in Γ");
  if (!(e.j.src == e.M.B.group) || !(e.j.dst == e.E.group) ||
      !(e.p.src == e.E.group) || !(e.p.dst == e.Q.group) ||
      !(e.eps.src == e.E.group) || !(e.eps.dst == e.M.D.group))
    return Report::structural("extension", "hom endpoints mismatch");

  if (auto r = validate_crossed_module(e.M); !r.ok()) {
    r.law = "M-" + r.law;
    return r;
  }
  if (auto r = validate_gamma_group(e.E); !r.ok()) {
    r.law = "E-" + r.law;
    return r;
  }
  if (auto r = validate_gamma_hom(e.j, e.M.B.action, e.E.action); !r.ok()) {
    r.law = "j-" + r.law;
    return r;
  }
  if (auto r = validate_gamma_hom(e.p, e.E.action, e.Q.action); !r.ok()) {
    r.law = "p-" + r.law;
    return r;
  }
  if (auto r = validate_gamma_hom(e.eps, e.E.action, e.M.D.action); !r.ok()) {
    r.law = "eps-" + r.law;
    return r;
  }
  if (static_cast<int>(image(e.j).size()) != e.M.B.order())
    return Report::violation("exact", "j is not injective");
  if (static_cast<int>(image(e.p).size()) != e.Q.order())
    return Report::violation("exact", "p is not surjective");
  if (kernel(e.p) != image(e.j))
    return Report::violation("exact", "Ker p != Im j");

  // (B, E, j, conjugation) must be a Γ-crossed module
  const auto jinv = j_inverse(e);
  const auto& E = e.E.group;
  std::vector<std::vector<int>> theta0(E.order(),
                                       std::vector<int>(e.M.B.order()));
  for (int el = 0; el < E.order(); ++el)
    for (int b = 0; b < e.M.B.order(); ++b) {
      const int conj = E.mul(E.mul(el, e.j.apply(b)), E.inv(el));
      if (jinv[conj] < 0)
        return Report::violation("conj-module", "Im j is not normal in E",
                                 {el, b});
      theta0[el][b] = jinv[conj];
    }
  GammaCrossedModule conj_module{e.M.B, e.E, e.j, theta0};
  if (auto r = validate_crossed_module(conj_module); !r.ok()) {
    r.law = "conj-" + r.law;
    return r;
  }

  // (id, ε) is a homomorphism of crossed modules
  for (int b = 0; b < e.M.B.order(); ++b)
    if (e.eps.apply(e.j.apply(b)) != e.M.d.apply(b))
      return Report::violation("H1", "ε j != d", {b});
  for (int el = 0; el < E.order(); ++el)
    for (int b = 0; b < e.M.B.order(); ++b)
      if (theta0[el][b] != e.M.theta_apply(e.eps.apply(el), b))
        return Report::violation("H2", "conjugation differs from ϑ∘ε",
                                 {el, b});

  // induced ψ well-defined
  const CokerData cd = pi0_data(e.M);
  std::vector<int> psi(e.Q.order(), -1);
  for (int el = 0; el < E.order(); ++el) {
    const int x = e.p.apply(el);
    const int v = cd.q.proj.apply(e.eps.apply(el));
    if (psi[x] < 0)
      psi[x] = v;
    else if (psi[x] != v)
      return Report::violation("psi", "induced ψ is ill-defined", {x, el});
  }
  return Report::pass();
}

GroupHom induced_psi(const Extension& e) {
  const CokerData cd = pi0_data(e.M);
  std::vector<int> psi(e.Q.order(), -1);
  for (int el = 0; el < e.E.order(); ++el) {
    const int x = e.p.apply(el);
    const int v = cd.q.proj.apply(e.eps.apply(el));
    if (psi[x] < 0)
      psi[x] = v;
    else if (psi[x] != v)
      throw PreconditionError("induced_psi: ill-defined at x=" +
                              std::to_string(x));
  }
  GroupHom out{e.Q.group, cd.coker.group, std::move(psi)};
  if (auto r = validate_gamma_hom(out, e.Q.action, cd.coker.action); !r.ok())
    throw PreconditionError("induced_psi: not a Γ-hom: " + r.what);
  return out;
}

Extension crossed_product(const GradedMonoidalFunctor& f) {
  if (auto r = validate_functor(f); !r.ok())
    throw PreconditionError("crossed_product: invalid functor: " + r.what);
  const auto& B = f.M.B.group;
  const auto& D = f.M.D.group;
  const auto& Q = f.srcQ;
  const int nb = B.order(), nq = Q.order();
  const int n = nb * nq;
  auto idx = [nq](int b, int x) { return b * nq + x; };

  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int b = 0; b < nb; ++b)
    for (int x = 0; x < nq; ++x)
      for (int c = 0; c < nb; ++c)
        for (int y = 0; y < nq; ++y) {
          const int bb = B.mul(B.mul(b, f.M.theta_apply(f.F0[x], c)),
                               f.qq(x, y));
          mul[idx(b, x)][idx(c, y)] = idx(bb, Q.group.mul(x, y));
        }

  const int ngam = f.M.gamma().order();
  std::vector<std::vector<int>> rows(ngam, std::vector<int>(n));
  for (int s = 0; s < ngam; ++s)
    for (int b = 0; b < nb; ++b)
      for (int x = 0; x < nq; ++x)
        rows[s][idx(b, x)] =
            idx(B.mul(f.M.B.act(s, b), f.qg(x, s)), Q.act(s, x));

  Extension e;
  e.M = f.M;
  e.Q = Q;
  e.E = make_gamma_group(FiniteGroup::from_table(mul), f.M.gamma(), rows);

  std::vector<int> jm(nb), pm(n), em(n);
  for (int b = 0; b < nb; ++b) jm[b] = idx(b, 0);
  for (int b = 0; b < nb; ++b)
    for (int x = 0; x < nq; ++x) {
      pm[idx(b, x)] = x;
      em[idx(b, x)] = D.mul(f.M.d.apply(b), f.F0[x]);
    }
  e.j = {f.M.B.group, e.E.group, std::move(jm)};
  e.p = {e.E.group, Q.group, std::move(pm)};
  e.eps = {e.E.group, f.M.D.group, std::move(em)};

  if (auto r = validate_extension(e); !r.ok())
    throw Error("crossed_product: built extension violates " + r.law + ": " +
                r.what);
  return e;
}

Report validate_equivalence(const Extension& e, const Extension& ep,
                            const GroupHom& alpha) {
  if (!(e.M == ep.M) || !(e.Q == ep.Q))
    return Report::structural("equivalence", "extensions of different type");
  if (!(alpha.src == e.E.group) || !(alpha.dst == ep.E.group))
    return Report::structural("equivalence", "α endpoints mismatch");
  if (auto r = validate_gamma_hom(alpha, e.E.action, ep.E.action); !r.ok())
    return r;
  std::vector<char> hit(ep.E.order(), 0);
  for (int el = 0; el < e.E.order(); ++el)
    if (hit[alpha.apply(el)]++)
      return Report::violation("equivalence", "α is not a bijection", {el});
  for (int b = 0; b < e.M.B.order(); ++b)
    if (alpha.apply(e.j.apply(b)) != ep.j.apply(b))
      return Report::violation("equivalence", "α j != j'", {b});
  for (int el = 0; el < e.E.order(); ++el) {
    if (ep.p.apply(alpha.apply(el)) != e.p.apply(el))
      return Report::violation("equivalence", "p' α != p", {el});
    if (ep.eps.apply(alpha.apply(el)) != e.eps.apply(el))
      return Report::violation("equivalence", "ε' α != ε", {el});
  }
  return Report::pass();
}

std::optional<ExtEquivalence> equivalent(const Extension& e,
                                         const Extension& ep,
                                         const Limits& lim) {
  if (!(e.M == ep.M) || !(e.Q == ep.Q))
    throw StructuralError("equivalent: extensions of different type");
  if (e.E.order() != ep.E.order()) return std::nullopt;
  const int nq = e.Q.order(), nb = e.M.B.order();
  const auto& E = e.E.group;
  const auto& Ep = ep.E.group;

  const auto u = transversal(e.E, e.p, nq);
  const auto jinv = j_inverse(e);
  // decomposition el = j(beta) * u_x
  std::vector<int> beta(E.order()), fib(E.order());
  for (int el = 0; el < E.order(); ++el) {
    const int x = e.p.apply(el);
    fib[el] = x;
    beta[el] = jinv[E.mul(el, E.inv(u[x]))];
    if (beta[el] < 0) throw Error("equivalent: broken exact decomposition");
  }

  // candidates for α(u_x): same p'-fiber and matching ε'
  std::vector<std::vector<int>> cand(nq);
  for (int x = 0; x < nq; ++x) {
    if (x == 0) {
      cand[0] = {0};
      continue;
    }
    for (int w = 0; w < Ep.order(); ++w)
      if (ep.p.apply(w) == x && ep.eps.apply(w) == e.eps.apply(u[x]))
        cand[x].push_back(w);
    if (cand[x].empty()) return std::nullopt;
  }

  SearchBudget budget(lim, "equivalence search");
  std::vector<int> pick(nq, 0);
  std::vector<int> amap(E.order());
  std::function<std::optional<ExtEquivalence>(int)> rec =
      [&](int x) -> std::optional<ExtEquivalence> {
    if (x == nq) {
      for (int el = 0; el < E.order(); ++el)
        amap[el] = Ep.mul(ep.j.apply(beta[el]), pick[fib[el]]);
      GroupHom alpha{E, Ep, amap};
      if (validate_equivalence(e, ep, alpha).ok())
        return ExtEquivalence{std::move(alpha)};
      return std::nullopt;
    }
    for (int w : cand[x]) {
      budget.spend();
      pick[x] = w;
      if (auto res = rec(x + 1)) return res;
    }
    return std::nullopt;
  };
  pick[0] = 0;
  return rec(1);
}

std::vector<Extension> classify(const GammaGroup& q, const GroupHom& psi,
                                const GammaCrossedModule& m,
                                const Limits& lim) {
  const GradedCatGroup p = build_P(m);
  const FunctorEnumeration fe = enumerate_functors(q, psi, p, lim);
  std::vector<Extension> out;
  for (int rep : fe.reps) out.push_back(crossed_product(fe.functors[rep]));
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (equivalent(out[i], out[j], lim))
        throw Error("classify: representatives are not pairwise inequivalent");
  return out;
}

bool obstruction_vanishes(const GammaGroup& q, const GroupHom& psi,
                          const GammaCrossedModule& m, const Limits& lim) {
  return any_functor_exists(q, psi, build_P(m), lim);
}

TorsorReport torsor_count_check(const GammaGroup& q, const GroupHom& psi,
                                const GammaCrossedModule& m,
                                const Limits& lim) {
  TorsorReport rep;
  rep.classes = static_cast<long long>(classify(q, psi, m, lim).size());
  const EquivariantModule mod = psi_module(m, q, psi.map);
  rep.h2 = h2(mod, lim).h2_count;
  rep.pass = rep.classes == rep.h2;
  return rep;
}

GradedMonoidalFunctor functor_of_extension(const Extension& e) {
  if (auto r = validate_extension(e); !r.ok())
    throw PreconditionError("functor_of_extension: invalid extension: " +
                            r.what);
  const auto& E = e.E.group;
  const int nq = e.Q.order(), ng = e.M.gamma().order();
  const auto u = transversal(e.E, e.p, nq);
  const auto jinv = j_inverse(e);

  GradedMonoidalFunctor f;
  f.srcQ = e.Q;
  f.M = e.M;
  f.F0.resize(nq);
  for (int x = 0; x < nq; ++x) f.F0[x] = e.eps.apply(u[x]);
  f.fQQ.assign(nq * nq, 0);
  f.fQG.assign(nq * ng, 0);
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y) {
      const int xy = e.Q.group.mul(x, y);
      const int v = jinv[E.mul(E.mul(u[x], u[y]), E.inv(u[xy]))];
      if (v < 0) throw Error("functor_of_extension: factor set escapes B");
      f.fQQ[x * nq + y] = v;
    }
  for (int x = 0; x < nq; ++x)
    for (int s = 0; s < ng; ++s) {
      const int sx = e.Q.act(s, x);
      const int v = jinv[E.mul(e.E.act(s, u[x]), E.inv(u[sx]))];
      if (v < 0) throw Error("functor_of_extension: σ-factor escapes B");
      f.fQG[x * ng + s] = v;
    }
  if (auto r = validate_functor(f); !r.ok())
    throw Error("functor_of_extension: recovered functor violates " + r.law);
  return f;
}

ExtGammaResult ext_gamma(const GammaGroup& q, const GammaGroup& b,
                         const Limits& lim) {
  ExtGammaResult out;
  out.holM = from_conjugation(b, lim);
  const CokerData cd = pi0_data(out.holM);
  for (const auto& psi : all_gamma_homs(q, cd.coker, lim)) {
    ExtGammaRow row;
    row.psi = psi;
    GroupHom psih{q.group, cd.coker.group, psi};
    row.vanishes = obstruction_vanishes(q, psih, out.holM, lim);
    if (row.vanishes) {
      row.classes = classify(q, psih, out.holM, lim);
      for (const auto& e : row.classes)
        row.labels.push_back(isomorphism_label(e.E.group, lim));
      out.total_classes += static_cast<long long>(row.classes.size());
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

// permutations of 0..n-1 fixing 0, in lexicographic order
std::vector<std::vector<int>> perms_fixing_zero(int n) {
  std::vector<int> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> p(n);
    p[0] = 0;
    std::copy(tail.begin(), tail.end(), p.begin() + 1);
    out.push_back(std::move(p));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

}  // namespace

RawOracleResult raw_enumerate_extensions(const GammaGroup& q,
                                         const GroupHom& psi,
                                         const GammaCrossedModule& m,
                                         const Limits& lim) {
  const int nb = m.B.order(), nq = q.order();
  const int n = nb * nq;
  if (n > lim.raw_extension_bound)
    throw ResourceError("raw oracle: |B||Q| = " + std::to_string(n) +
                        " exceeds bound " +
                        std::to_string(lim.raw_extension_bound));
  const auto& B = m.B.group;
  const auto& D = m.D.group;
  const auto& Qg = q.group;
  const int ng = m.gamma().order();
  const CokerData cd = pi0_data(m);
  auto idx = [nq](int b, int x) { return b * nq + x; };

  // ψ-fibers in D for the ε choices
  std::vector<std::vector<int>> psi_fiber(nq);
  for (int x = 0; x < nq; ++x)
    for (int v = 0; v < D.order(); ++v)
      if (cd.q.proj.apply(v) == psi.apply(x)) psi_fiber[x].push_back(v);

  const auto perms = perms_fixing_zero(nb);
  SearchBudget budget(lim, "raw oracle");

  RawOracleResult out;

  // data: per x != 0 a fiber relabeling λ_x and a conjugation-like map ρ_x
  // (both bijections of B fixing 0), and a factor table on nonidentity pairs
  std::vector<int> lam(nq, 0), rho(nq, 0);
  std::vector<int> fct((nq - 1) * (nq - 1), 0);
  auto fhat = [&](int x, int y) {
    return (x == 0 || y == 0) ? 0 : fct[(x - 1) * (nq - 1) + (y - 1)];
  };

  auto try_tables = [&]() {
    budget.spend();
    const auto inv_perm = [&](const std::vector<int>& p) {
      std::vector<int> inv(p.size());
      for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
      return inv;
    };
    std::vector<std::vector<int>> lam_p(nq), lam_i(nq), rho_p(nq);
    for (int x = 0; x < nq; ++x) {
      lam_p[x] = perms[lam[x]];
      lam_i[x] = inv_perm(lam_p[x]);
      rho_p[x] = perms[rho[x]];
    }
    // general product from the generator data
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int b = 0; b < nb; ++b)
      for (int x = 0; x < nq; ++x)
        for (int c = 0; c < nb; ++c)
          for (int y = 0; y < nq; ++y) {
            const int be = lam_i[x][b];
            const int ga = lam_i[y][c];
            const int xy = Qg.mul(x, y);
            const int s =
                B.mul(B.mul(be, lam_i[x][rho_p[x][ga]]),
                      lam_i[xy][fhat(x, y)]);
            mul[idx(b, x)][idx(c, y)] = idx(lam_p[xy][s], xy);
          }
    FiniteGroup Eg;
    try {
      Eg = FiniteGroup::from_table(mul);
    } catch (const StructuralError&) {
      return;
    }
    if (!validate_group(Eg).ok()) return;

    // Γ-actions: σ(u_x) = (a_σ(x), σx); everything else is forced
    std::vector<int> amap((ng - 1) * (nq - 1), 0);
    auto a_of = [&](int s, int x) {
      return (s == 0 || x == 0) ? 0 : amap[(s - 1) * (nq - 1) + (x - 1)];
    };
    std::function<void(int)> rec_action = [&](int k) {
      if (k < static_cast<int>(amap.size())) {
        for (int v = 0; v < nb; ++v) {
          amap[k] = v;
          rec_action(k + 1);
        }
        amap[k] = 0;
        return;
      }
      budget.spend();
      std::vector<std::vector<int>> rows(ng, std::vector<int>(n));
      for (int s = 0; s < ng; ++s)
        for (int b = 0; b < nb; ++b)
          for (int x = 0; x < nq; ++x) {
            const int be = lam_i[x][b];
            const int sx = q.act(s, x);
            rows[s][idx(b, x)] =
                Eg.mul(idx(m.B.act(s, be), 0), idx(a_of(s, x), sx));
          }
      GammaGroup E;
      try {
        E = make_gamma_group(Eg, m.gamma(), rows);
      } catch (const StructuralError&) {
        return;
      }
      if (!validate_action(E.action).ok()) return;

      // ε choices over the ψ-fibers
      std::vector<int> epick(nq, 0);
      std::function<void(int)> rec_eps = [&](int x) {
        if (x < nq) {
          if (x == 0) {
            epick[0] = 0;
            rec_eps(1);
            return;
          }
          for (int v : psi_fiber[x]) {
            epick[x] = v;
            rec_eps(x + 1);
          }
          return;
        }
        budget.spend();
        std::vector<int> em(n);
        for (int b = 0; b < nb; ++b)
          for (int xx = 0; xx < nq; ++xx)
            em[idx(b, xx)] =
                D.mul(m.d.apply(lam_i[xx][b]), epick[xx]);
        Extension cand;
        cand.M = m;
        cand.Q = q;
        cand.E = E;
        std::vector<int> jm(nb), pm(n);
        for (int b = 0; b < nb; ++b) jm[b] = idx(b, 0);
        for (int b = 0; b < nb; ++b)
          for (int xx = 0; xx < nq; ++xx) pm[idx(b, xx)] = xx;
        cand.j = {B, Eg, std::move(jm)};
        cand.p = {Eg, Qg, std::move(pm)};
        cand.eps = {Eg, D, std::move(em)};
        if (!validate_extension(cand).ok()) return;
        if (!(induced_psi(cand).map == psi.map)) return;
        out.all.push_back(std::move(cand));
      };
      rec_eps(0);
    };
    rec_action(0);
  };

  // enumerate λ, ρ, f̂
  const int np = static_cast<int>(perms.size());
  std::function<void(int)> rec_f = [&](int k) {
    if (k == static_cast<int>(fct.size())) {
      try_tables();
      return;
    }
    for (int v = 0; v < nb; ++v) {
      fct[k] = v;
      rec_f(k + 1);
    }
    fct[k] = 0;
  };
  std::function<void(int)> rec_rho = [&](int x) {
    if (x == nq) {
      rec_f(0);
      return;
    }
    for (int i = 0; i < np; ++i) {
      rho[x] = i;
      rec_rho(x + 1);
    }
    rho[x] = 0;
  };
  std::function<void(int)> rec_lam = [&](int x) {
    if (x == nq) {
      rec_rho(1);
      return;
    }
    for (int i = 0; i < np; ++i) {
      lam[x] = i;
      rec_lam(x + 1);
    }
    lam[x] = 0;
  };
  rec_lam(1);

  // partition into equivalence classes against running representatives
  for (const auto& e : out.all) {
    bool known = false;
    for (const auto& rep : out.class_reps)
      if (equivalent(rep, e, lim)) {
        known = true;
        break;
      }
    if (!known) out.class_reps.push_back(e);
  }
  return out;
}

}  // namespace exmod
