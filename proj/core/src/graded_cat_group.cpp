#include "exmod/graded_cat_group.hpp"

#include <algorithm>
#include <functional>

namespace exmod {

GradedCatGroup build_P(const GammaCrossedModule& m) {
  if (auto r = validate_crossed_module(m); !r.ok())
    throw PreconditionError("build_P: invalid crossed module: " + r.what);
  return {m};
}

GradedCatGroup dis_gamma(const GammaGroup& q) {
  GammaCrossedModule m;
  m.B = {FiniteGroup::trivial(),
         GammaAction::trivial(q.gamma(), FiniteGroup::trivial())};
  m.D = q;
  m.d = trivial_hom(m.B.group, q.group);
  m.theta.assign(q.order(), {0});
  return build_P(m);
}

int grade(const GCGMorphism& m) { return m.sigma; }

int target(const GradedCatGroup& p, const GCGMorphism& m) {
  const auto& D = p.base.D.group;
  return D.mul(D.inv(p.base.d.apply(m.b)), p.base.D.act(m.sigma, m.src));
}

GCGMorphism identity_morphism(const GradedCatGroup&, int x) {
  return {x, 0, 0};
}

GCGMorphism compose(const GradedCatGroup& p, const GCGMorphism& m2,
                    const GCGMorphism& m1) {
  if (target(p, m1) != m2.src)
    throw StructuralError("compose: morphisms are not composable");
  const auto& B = p.base.B.group;
  GCGMorphism out{m1.src, B.mul(p.base.B.act(m2.sigma, m1.b), m2.b),
                  p.base.gamma().mul(m2.sigma, m1.sigma)};
  if (target(p, out) != target(p, m2))
    throw Error("compose: target law violated");
  return out;
}

GCGMorphism inverse(const GradedCatGroup& p, const GCGMorphism& m) {
  const auto& B = p.base.B.group;
  const int sinv = p.base.gamma().inv(m.sigma);
  return {target(p, m), B.inv(p.base.B.act(sinv, m.b)), sinv};
}

GCGMorphism tensor(const GradedCatGroup& p, const GCGMorphism& m1,
                   const GCGMorphism& m2) {
  if (m1.sigma != m2.sigma)
    throw PreconditionError("tensor: morphisms have different grades");
  const auto& B = p.base.B.group;
  const auto& D = p.base.D.group;
  const int y = target(p, m1);
  return {D.mul(m1.src, m2.src), B.mul(m1.b, p.base.theta_apply(y, m2.b)),
          m1.sigma};
}

Report check_categorical_laws(const GradedCatGroup& p) {
  const auto& D = p.base.D.group;
  const auto& B = p.base.B.group;
  const auto& G = p.base.gamma();
  const int nd = D.order(), nb = B.order(), ng = G.order();

  auto each_morphism = [&](const std::function<Report(const GCGMorphism&)>& f)
      -> Report {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        for (int s = 0; s < ng; ++s)
          if (auto r = f({x, b, s}); !r.ok()) return r;
    return Report::pass();
  };

  // units, inverse formula, grade of the inverse
  if (auto r = each_morphism([&](const GCGMorphism& m) -> Report {
        const int y = target(p, m);
        if (!(compose(p, m, identity_morphism(p, m.src)) == m) ||
            !(compose(p, identity_morphism(p, y), m) == m))
          return Report::violation("unit", "identity law fails",
                                   {m.src, m.b, m.sigma});
        const GCGMorphism mi = inverse(p, m);
        if (!(compose(p, mi, m) == identity_morphism(p, m.src)) ||
            !(compose(p, m, mi) == identity_morphism(p, y)))
          return Report::violation("inverse", "(b,σ)⁻¹ formula fails",
                                   {m.src, m.b, m.sigma});
        return Report::pass();
      });
      !r.ok())
    return r;

  // associativity of composition, and grade multiplicativity
  for (int x = 0; x < nd; ++x)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int s1 = 0; s1 < ng; ++s1) {
        const GCGMorphism m1{x, b1, s1};
        const int y1 = target(p, m1);
        for (int b2 = 0; b2 < nb; ++b2)
          for (int s2 = 0; s2 < ng; ++s2) {
            const GCGMorphism m2{y1, b2, s2};
            const GCGMorphism c21 = compose(p, m2, m1);
            if (c21.sigma != G.mul(m2.sigma, m1.sigma))
              return Report::violation("grade", "grade not multiplicative",
                                       {x, b1, s1});
            const int y2 = target(p, m2);
            for (int b3 = 0; b3 < nb; ++b3)
              for (int s3 = 0; s3 < ng; ++s3) {
                const GCGMorphism m3{y2, b3, s3};
                if (!(compose(p, m3, c21) ==
                      compose(p, compose(p, m3, m2), m1)))
                  return Report::violation("assoc",
                                           "composition not associative",
                                           {x, b1, b2, b3});
              }
          }
      }

  // tensor: identities, strict associativity, unit object, interchange
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      if (!(tensor(p, identity_morphism(p, x), identity_morphism(p, y)) ==
            identity_morphism(p, D.mul(x, y))))
        return Report::violation("tensor-id", "id_x ⊗ id_y != id_{xy}", {x, y});

  if (auto r = each_morphism([&](const GCGMorphism& m) -> Report {
        const GCGMorphism unit{0, 0, m.sigma};  // I(σ) : 1 -> 1
        if (!(tensor(p, m, unit) == m) || !(tensor(p, unit, m) == m))
          return Report::violation("tensor-unit", "unit object not strict",
                                   {m.src, m.b, m.sigma});
        return Report::pass();
      });
      !r.ok())
    return r;

  for (int s = 0; s < ng; ++s)
    for (int x1 = 0; x1 < nd; ++x1)
      for (int b1 = 0; b1 < nb; ++b1)
        for (int x2 = 0; x2 < nd; ++x2)
          for (int b2 = 0; b2 < nb; ++b2) {
            const GCGMorphism m1{x1, b1, s}, m2{x2, b2, s};
            const GCGMorphism t12 = tensor(p, m1, m2);
            if (t12.sigma != s)
              return Report::violation("grade", "tensor changes the grade",
                                       {x1, b1, s});
            for (int x3 = 0; x3 < nd && nb <= 8; ++x3)
              for (int b3 = 0; b3 < nb; ++b3) {
                const GCGMorphism m3{x3, b3, s};
                if (!(tensor(p, t12, m3) == tensor(p, m1, tensor(p, m2, m3))))
                  return Report::violation("tensor-assoc",
                                           "tensor not associative",
                                           {x1, x2, x3});
              }
          }

  // interchange: (m∘n) ⊗ (m'∘n') = (m⊗m')∘(n⊗n')
  for (int x = 0; x < nd; ++x)
    for (int bn = 0; bn < nb; ++bn)
      for (int s = 0; s < ng; ++s) {
        const GCGMorphism n{x, bn, s};
        const int y = target(p, n);
        for (int bm = 0; bm < nb; ++bm)
          for (int t = 0; t < ng; ++t) {
            const GCGMorphism m{y, bm, t};
            for (int x2 = 0; x2 < nd; ++x2)
              for (int bn2 = 0; bn2 < nb; ++bn2) {
                const GCGMorphism n2{x2, bn2, s};
                const int y2 = target(p, n2);
                for (int bm2 = 0; bm2 < nb; ++bm2) {
                  const GCGMorphism m2{y2, bm2, t};
                  const GCGMorphism lhs =
                      tensor(p, compose(p, m, n), compose(p, m2, n2));
                  const GCGMorphism rhs =
                      compose(p, tensor(p, m, m2), tensor(p, n, n2));
                  if (!(lhs == rhs))
                    return Report::violation("interchange",
                                             "tensor is not a functor",
                                             {x, bn, bm, x2});
                }
              }
          }
      }

  return Report::pass();
}

FactorSet factor_set_of(const GradedCatGroup& p) {
  const int nd = p.base.D.order(), nb = p.base.B.order();
  const int ng = p.base.gamma().order();
  FactorSet fs;
  fs.obj_map.assign(ng, std::vector<int>(nd));
  fs.mor_map.assign(ng, std::vector<int>(nb));
  for (int s = 0; s < ng; ++s) {
    for (int x = 0; x < nd; ++x) fs.obj_map[s][x] = p.base.D.act(s, x);
    for (int b = 0; b < nb; ++b) {
      // F^σ(b,1) = Υ^σ_1 ∘ (b,1) ∘ (Υ^σ_x)⁻¹ with x = d(b), target 1
      const int x = p.base.d.apply(b);
      const GCGMorphism f{x, b, 0};
      const GCGMorphism ups_x{x, 0, s};
      const GCGMorphism ups_1{0, 0, s};
      const GCGMorphism res =
          compose(p, ups_1, compose(p, f, inverse(p, ups_x)));
      fs.mor_map[s][b] = res.b;
    }
  }
  return fs;
}

Report validate_factor_set(const GradedCatGroup& p, const FactorSet& fs) {
  const auto& D = p.base.D.group;
  const auto& B = p.base.B.group;
  const int nd = D.order(), nb = B.order(), ng = p.base.gamma().order();

  for (int x = 0; x < nd; ++x)
    if (fs.obj_map[0][x] != x)
      return Report::violation("factor-i", "F¹ != id on objects", {x});
  for (int b = 0; b < nb; ++b)
    if (fs.mor_map[0][b] != b)
      return Report::violation("factor-i", "F¹ != id on morphisms", {b});

  // θ = id forces F^σ F^τ = F^{στ} strictly (axioms ii and iii)
  for (int s = 0; s < ng; ++s)
    for (int t = 0; t < ng; ++t) {
      const int st = p.base.gamma().mul(s, t);
      for (int x = 0; x < nd; ++x)
        if (fs.obj_map[s][fs.obj_map[t][x]] != fs.obj_map[st][x])
          return Report::violation("factor-iii", "F^σF^τ != F^{στ} on objects",
                                   {s, t, x});
      for (int b = 0; b < nb; ++b)
        if (fs.mor_map[s][fs.mor_map[t][b]] != fs.mor_map[st][b])
          return Report::violation("factor-iii",
                                   "F^σF^τ != F^{στ} on morphisms", {s, t, b});
    }

  // each F^σ is a regular monoidal autoequivalence of Ker P
  for (int s = 0; s < ng; ++s) {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        if (fs.obj_map[s][D.mul(x, y)] !=
            D.mul(fs.obj_map[s][x], fs.obj_map[s][y]))
          return Report::violation("factor-regular",
                                   "F^σ not strict on objects", {s, x, y});
    // conjugation by Υ agrees with mor_map on every grade-1 morphism,
    // and the map is strict for tensor and composition
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b) {
        const GCGMorphism f{x, b, 0};
        const int y = target(p, f);
        const GCGMorphism img = compose(
            p, GCGMorphism{y, 0, s},
            compose(p, f, inverse(p, GCGMorphism{x, 0, s})));
        if (img.b != fs.mor_map[s][b] || img.src != fs.obj_map[s][x])
          return Report::violation("factor-regular",
                                   "F^σ disagrees with Υ conjugation",
                                   {s, x, b});
      }
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nb; ++c) {
        // tensor of morphisms to 1: b ⊗ c = b + ϑ_1 c = b + c
        if (fs.mor_map[s][B.mul(b, c)] !=
            B.mul(fs.mor_map[s][b], fs.mor_map[s][c]))
          return Report::violation("factor-regular",
                                   "F^σ not strict on morphisms", {s, b, c});
      }
  }
  return Report::pass();
}

GammaCrossedModule crossed_module_of(const GradedCatGroup& p) {
  const auto& D = p.base.D.group;
  const int nb = p.base.B.order(), nd = D.order();
  const FactorSet fs = factor_set_of(p);

  // B' = grade-1 morphisms into 1, indexed by their b value; operations all
  // read off the categorical structure
  auto mor_to_one = [&](int b) {
    return GCGMorphism{p.base.d.apply(b), b, 0};
  };
  std::vector<std::vector<int>> bmul(nb, std::vector<int>(nb));
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nb; ++c)
      bmul[b][c] = tensor(p, mor_to_one(b), mor_to_one(c)).b;
  FiniteGroup Bgrp = FiniteGroup::from_table(bmul);

  std::vector<std::vector<int>> brow(p.base.gamma().order()),
      drow(p.base.gamma().order());
  for (int s = 0; s < p.base.gamma().order(); ++s) {
    brow[s] = fs.mor_map[s];
    drow[s] = fs.obj_map[s];
  }

  GammaCrossedModule out;
  out.B = make_gamma_group(Bgrp, p.base.gamma(), brow);
  out.D = make_gamma_group(D, p.base.gamma(), drow);
  std::vector<int> dmap(nb);
  for (int b = 0; b < nb; ++b) dmap[b] = mor_to_one(b).src;
  out.d = {Bgrp, D, std::move(dmap)};
  out.theta.assign(nd, std::vector<int>(nb));
  for (int y = 0; y < nd; ++y)
    for (int b = 0; b < nb; ++b) {
      // ϑ_y(b) = id_y ⊗ (b,1) ⊗ id_{y⁻¹}
      const GCGMorphism t1 =
          tensor(p, identity_morphism(p, y), mor_to_one(b));
      const GCGMorphism t2 =
          tensor(p, t1, identity_morphism(p, D.inv(y)));
      out.theta[y][b] = t2.b;
    }
  return out;
}

// ---- regular functors ------------------------------------------------------

GCGMorphism apply_functor(const RegularFunctorData& f, const GCGMorphism& m) {
  const auto& Bp = f.dstM.B.group;
  return {f.obj[m.src], Bp.mul(f.qg(m.src, m.sigma), f.mor1[m.b]), m.sigma};
}

Report validate_regular_functor(const RegularFunctorData& f) {
  const auto& D = f.srcM.D.group;
  const auto& B = f.srcM.B.group;
  const auto& Dp = f.dstM.D.group;
  const auto& Bp = f.dstM.B.group;
  const int nd = D.order(), nb = B.order(), ng = f.srcM.gamma().order();
  if (!(f.srcM.gamma() == f.dstM.gamma()))
    return Report::structural("functor", "source and target differ in Γ");
  if (static_cast<int>(f.obj.size()) != nd ||
      static_cast<int>(f.mor1.size()) != nb ||
      static_cast<int>(f.fQQ.size()) != nd * nd ||
      static_cast<int>(f.fQG.size()) != nd * ng)
    return Report::structural("functor", "tables have wrong dimensions");

  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      if (f.obj[D.mul(x, y)] != Dp.mul(f.obj[x], f.obj[y]))
        return Report::violation("S1", "F(x⊗y) != F(x)⊗F(y)", {x, y});
  for (int s = 0; s < ng; ++s)
    for (int x = 0; x < nd; ++x)
      if (f.obj[f.srcM.D.act(s, x)] != f.dstM.D.act(s, f.obj[x]))
        return Report::violation("S2", "F(σx) != σF(x)", {s, x});
  for (int s = 0; s < ng; ++s)
    for (int b = 0; b < nb; ++b)
      if (f.mor1[f.srcM.B.act(s, b)] != f.dstM.B.act(s, f.mor1[b]))
        return Report::violation("S3", "F(σb) != σF(b)", {s, b});
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nb; ++c)
      if (f.mor1[B.mul(b, c)] != Bp.mul(f.mor1[b], f.mor1[c]))
        return Report::violation("S4", "F(b)⊗F(c) != F(b⊗c)", {b, c});

  // normalization and morphism validity of the (5)-data
  for (int x = 0; x < nd; ++x) {
    if (f.qq(x, 0) != 0 || f.qq(0, x) != 0)
      return Report::violation("functor-norm", "F̃ not normalized", {x});
    if (f.qg(x, 0) != 0)
      return Report::violation("functor-norm", "F(0,1) != id", {x});
  }
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      if (f.dstM.d.apply(f.qq(x, y)) != 0)
        return Report::violation("functor-tilde",
                                 "F̃ value outside Ker d'", {x, y});
  for (int x = 0; x < nd; ++x)
    for (int s = 0; s < ng; ++s)
      if (f.dstM.d.apply(f.qg(x, s)) != 0)
        return Report::violation("functor-sigma",
                                 "F(0,σ) value outside Ker d'", {x, s});

  // H1/H2 of the underlying pair
  for (int b = 0; b < nb; ++b)
    if (f.obj[f.srcM.d.apply(b)] != f.dstM.d.apply(f.mor1[b]))
      return Report::violation("H1", "F breaks d-compatibility", {b});
  for (int x = 0; x < nd; ++x)
    for (int b = 0; b < nb; ++b)
      if (f.mor1[f.srcM.theta_apply(x, b)] !=
          f.dstM.theta_apply(f.obj[x], f.mor1[b]))
        return Report::violation("H2", "F breaks ϑ-compatibility", {x, b});

  const GradedCatGroup src{f.srcM}, dst{f.dstM};
  // functoriality over all composable pairs
  for (int x = 0; x < nd; ++x)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int s1 = 0; s1 < ng; ++s1) {
        const GCGMorphism m1{x, b1, s1};
        const GCGMorphism fm1 = apply_functor(f, m1);
        if (target(dst, fm1) != f.obj[target(src, m1)])
          return Report::violation("functor-target",
                                   "image morphism has wrong target",
                                   {x, b1, s1});
        const int y = target(src, m1);
        for (int b2 = 0; b2 < nb; ++b2)
          for (int s2 = 0; s2 < ng; ++s2) {
            const GCGMorphism m2{y, b2, s2};
            if (!(apply_functor(f, compose(src, m2, m1)) ==
                  compose(dst, apply_functor(f, m2), fm1)))
              return Report::violation("functor-compose",
                                       "F(m2∘m1) != F(m2)∘F(m1)",
                                       {x, b1, s1, b2, s2});
          }
      }

  // naturality of F̃ on all equal-grade pairs
  for (int x1 = 0; x1 < nd; ++x1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int s = 0; s < ng; ++s) {
        const GCGMorphism m1{x1, b1, s};
        const int y1 = target(src, m1);
        for (int x2 = 0; x2 < nd; ++x2)
          for (int b2 = 0; b2 < nb; ++b2) {
            const GCGMorphism m2{x2, b2, s};
            const int y2 = target(src, m2);
            const GCGMorphism tilde_src{
                Dp.mul(f.obj[x1], f.obj[x2]), f.qq(x1, x2), 0};
            const GCGMorphism tilde_dst{
                Dp.mul(f.obj[y1], f.obj[y2]), f.qq(y1, y2), 0};
            const GCGMorphism lhs = compose(
                dst, tilde_dst,
                tensor(dst, apply_functor(f, m1), apply_functor(f, m2)));
            const GCGMorphism rhs = compose(
                dst, apply_functor(f, tensor(src, m1, m2)), tilde_src);
            if (!(lhs == rhs))
              return Report::violation("functor-natural",
                                       "F̃ is not natural", {x1, b1, x2, b2, s});
          }
      }

  // associativity coherence of F̃ (strict constraints on both sides)
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      for (int z = 0; z < nd; ++z) {
        const GCGMorphism fxy{Dp.mul(f.obj[x], f.obj[y]), f.qq(x, y), 0};
        const GCGMorphism fyz{Dp.mul(f.obj[y], f.obj[z]), f.qq(y, z), 0};
        const GCGMorphism lhs =
            compose(dst, GCGMorphism{Dp.mul(f.obj[D.mul(x, y)], f.obj[z]),
                                     f.qq(D.mul(x, y), z), 0},
                    tensor(dst, fxy,
                           identity_morphism(dst, f.obj[z])));
        const GCGMorphism rhs =
            compose(dst, GCGMorphism{Dp.mul(f.obj[x], f.obj[D.mul(y, z)]),
                                     f.qq(x, D.mul(y, z)), 0},
                    tensor(dst, identity_morphism(dst, f.obj[x]), fyz));
        if (!(lhs == rhs))
          return Report::violation("functor-coherence",
                                   "F̃ associativity coherence fails",
                                   {x, y, z});
      }
  return Report::pass();
}

RegularFunctorData functor_from_triple(const CrossedMorphism& t) {
  if (auto r = validate_crossed_morphism(t); !r.ok())
    throw PreconditionError("functor_from_triple: " + r.what);
  const auto& src = t.hom.srcM;
  const auto& dst = t.hom.dstM;
  const CokerData src0 = pi0_data(src);
  const KerData dst1 = pi1_data(dst);
  const int nd = src.D.order(), ng = src.gamma().order();

  RegularFunctorData f;
  f.srcM = src;
  f.dstM = dst;
  f.obj = t.hom.f0.map;
  f.mor1 = t.hom.f1.map;
  f.fQQ.assign(nd * nd, 0);
  f.fQG.assign(nd * ng, 0);
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      f.fQQ[x * nd + y] = dst1.sub.elems[t.phi.qq(src0.q.proj.apply(x),
                                                  src0.q.proj.apply(y))];
  for (int x = 0; x < nd; ++x)
    for (int s = 0; s < ng; ++s)
      f.fQG[x * ng + s] =
          dst1.sub.elems[t.phi.qg(src0.q.proj.apply(x), s)];
  return f;
}

CrossedMorphism triple_of_functor(const RegularFunctorData& f) {
  if (auto r = validate_regular_functor(f); !r.ok())
    throw PreconditionError("triple_of_functor: violates " + r.law + ": " +
                            r.what);
  const CokerData src0 = pi0_data(f.srcM);
  const KerData dst1 = pi1_data(f.dstM);
  const int nd = f.srcM.D.order(), ng = f.srcM.gamma().order();
  const int nc = src0.coker.order();

  // Lemma 4 constancy on cosets, then read φ off the representatives
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      if (f.qq(x, y) != f.qq(src0.q.reps[src0.q.proj.apply(x)],
                             src0.q.reps[src0.q.proj.apply(y)]))
        throw PreconditionError(
            "triple_of_functor: F̃ is not constant on cosets");
  for (int x = 0; x < nd; ++x)
    for (int s = 0; s < ng; ++s)
      if (f.qg(x, s) != f.qg(src0.q.reps[src0.q.proj.apply(x)], s))
        throw PreconditionError(
            "triple_of_functor: F(0,σ) data not constant on cosets");

  CrossedMorphism t;
  t.hom = {f.srcM, f.dstM, {f.srcM.B.group, f.dstM.B.group, f.mor1},
           {f.srcM.D.group, f.dstM.D.group, f.obj}};
  Cochain2 phi = Cochain2::zero(induced_module(f.srcM, f.dstM, f.obj));
  for (int r = 0; r < nc; ++r)
    for (int s = 0; s < nc; ++s)
      phi.fQQ[r * nc + s] =
          dst1.sub.parent_to_sub[f.qq(src0.q.reps[r], src0.q.reps[s])];
  for (int r = 0; r < nc; ++r)
    for (int s = 0; s < ng; ++s)
      phi.fQG[r * ng + s] =
          dst1.sub.parent_to_sub[f.qg(src0.q.reps[r], s)];
  t.phi = std::move(phi);
  if (auto r = validate_crossed_morphism(t); !r.ok())
    throw Error("triple_of_functor: recovered triple invalid: " + r.what);
  return t;
}

RegularFunctorData compose_functors(const RegularFunctorData& g,
                                    const RegularFunctorData& f) {
  if (!(f.dstM == g.srcM))
    throw StructuralError("compose_functors: endpoints mismatch");
  const auto& Bpp = g.dstM.B.group;
  const int nd = f.srcM.D.order(), ng = f.srcM.gamma().order();
  RegularFunctorData out;
  out.srcM = f.srcM;
  out.dstM = g.dstM;
  out.obj.resize(nd);
  for (int x = 0; x < nd; ++x) out.obj[x] = g.obj[f.obj[x]];
  out.mor1.resize(f.srcM.B.order());
  for (int b = 0; b < f.srcM.B.order(); ++b) out.mor1[b] = g.mor1[f.mor1[b]];
  out.fQQ.assign(nd * nd, 0);
  out.fQG.assign(nd * ng, 0);
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      out.fQQ[x * nd + y] =
          Bpp.mul(g.qq(f.obj[x], f.obj[y]), g.mor1[f.qq(x, y)]);
  for (int x = 0; x < nd; ++x)
    for (int s = 0; s < ng; ++s)
      out.fQG[x * ng + s] =
          Bpp.mul(g.qg(f.obj[x], s), g.mor1[f.qg(x, s)]);
  return out;
}

// ---- graded monoidal functors out of ΓDis Q --------------------------------

Report validate_functor(const GradedMonoidalFunctor& f) {
  const auto& Q = f.srcQ;
  const auto& B = f.M.B.group;
  const auto& D = f.M.D.group;
  const auto& G = f.M.gamma();
  const int nq = Q.order(), ng = G.order();
  if (!(Q.gamma() == G))
    return Report::structural("functor", "Q and P have different Γ");
  if (static_cast<int>(f.F0.size()) != nq ||
      static_cast<int>(f.fQQ.size()) != nq * nq ||
      static_cast<int>(f.fQG.size()) != nq * ng)
    return Report::structural("functor", "tables have wrong dimensions");

  if (f.F0[0] != 0)
    return Report::violation("normalization", "F(1) != 1", {0});
  for (int x = 0; x < nq; ++x) {
    if (f.qq(x, 0) != 0 || f.qq(0, x) != 0)
      return Report::violation("normalization", "f(x,1) or f(1,y) != 0", {x});
    if (f.qg(x, 0) != 0)
      return Report::violation("normalization", "f(x,1_Γ) != 0", {x});
  }
  for (int x = 0; x < nq; ++x)
    for (int s = 0; s < ng; ++s)
      if (f.M.D.act(s, f.F0[x]) !=
          D.mul(f.M.d.apply(f.qg(x, s)), f.F0[Q.act(s, x)]))
        return Report::violation("eq-11", "σF(x) != df(x,σ)F(σx)", {x, s});
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      if (D.mul(f.F0[x], f.F0[y]) !=
          D.mul(f.M.d.apply(f.qq(x, y)), f.F0[Q.group.mul(x, y)]))
        return Report::violation("eq-12", "F(x)F(y) != df(x,y)F(xy)", {x, y});

  for (int x = 0; x < nq; ++x)
    for (int s = 0; s < ng; ++s)
      for (int t = 0; t < ng; ++t)
        if (B.mul(f.M.B.act(t, f.qg(x, s)), f.qg(Q.act(s, x), t)) !=
            f.qg(x, G.mul(t, s)))
          return Report::violation("eq-6", "τf(x,σ) + f(σx,τ) != f(x,τσ)",
                                   {x, s, t});
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      for (int s = 0; s < ng; ++s) {
        const int sx = Q.act(s, x), sy = Q.act(s, y);
        const int lhs =
            B.mul(f.M.B.act(s, f.qq(x, y)), f.qg(Q.group.mul(x, y), s));
        const int rhs = B.mul(
            B.mul(f.qg(x, s), f.M.theta_apply(f.F0[sx], f.qg(y, s))),
            f.qq(sx, sy));
        if (lhs != rhs)
          return Report::violation("eq-7", "σ-naturality of F̃ fails",
                                   {x, y, s});
      }
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      for (int z = 0; z < nq; ++z) {
        const int lhs = B.mul(f.M.theta_apply(f.F0[x], f.qq(y, z)),
                              f.qq(x, Q.group.mul(y, z)));
        const int rhs = B.mul(f.qq(x, y), f.qq(Q.group.mul(x, y), z));
        if (lhs != rhs)
          return Report::violation(
              "eq-8", "ϑ_{Fx}f(y,z) + f(x,yz) != f(x,y) + f(xy,z)", {x, y, z});
      }
  return Report::pass();
}

std::optional<std::vector<int>> homotopic(const GradedMonoidalFunctor& f,
                                          const GradedMonoidalFunctor& fp,
                                          const Limits& lim) {
  if (!(f.srcQ == fp.srcQ) || !(f.M == fp.M))
    throw StructuralError("homotopic: functors have different endpoints");
  const auto& Q = f.srcQ;
  const auto& B = f.M.B.group;
  const auto& D = f.M.D.group;
  const int nq = Q.order(), ng = f.M.gamma().order();

  // d-fibers in B for the object-level equation (14)
  std::vector<std::vector<int>> fiber(D.order());
  for (int b = 0; b < B.order(); ++b) fiber[f.M.d.apply(b)].push_back(b);
  std::vector<std::vector<int>> cand(nq);
  for (int x = 0; x < nq; ++x)
    cand[x] = fiber[D.mul(f.F0[x], D.inv(fp.F0[x]))];
  if (cand[0].empty()) return std::nullopt;

  std::vector<int> g(nq, 0);
  // instance buckets over slots 1..nq-1 (slot x assigns g(x))
  struct Nat { int x, s; };
  struct Coh { int x, y; };
  std::vector<std::vector<Nat>> nat(nq);
  std::vector<std::vector<Coh>> coh(nq);
  for (int x = 0; x < nq; ++x)
    for (int s = 0; s < ng; ++s)
      nat[std::max(x, Q.act(s, x))].push_back({x, s});
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y)
      coh[std::max({x, y, Q.group.mul(x, y)})].push_back({x, y});

  auto nat_holds = [&](int x, int s) {
    // f(x,σ) + g(σx) = σ g(x) + f'(x,σ)
    return B.mul(f.qg(x, s), g[Q.act(s, x)]) ==
           B.mul(f.M.B.act(s, g[x]), fp.qg(x, s));
  };
  auto coh_holds = [&](int x, int y) {
    // f(x,y) + g(xy) = g(x) + ϑ_{F'x} g(y) + f'(x,y)
    return B.mul(f.qq(x, y), g[Q.group.mul(x, y)]) ==
           B.mul(B.mul(g[x], f.M.theta_apply(fp.F0[x], g[y])),
                 fp.qq(x, y));
  };
  auto slot_ok = [&](int k) {
    for (const auto& n : nat[k])
      if (!nat_holds(n.x, n.s)) return false;
    for (const auto& c : coh[k])
      if (!coh_holds(c.x, c.y)) return false;
    return true;
  };
  // (14) at the identity needs g(1) = 0
  if (D.mul(f.F0[0], D.inv(fp.F0[0])) != 0) return std::nullopt;
  if (!slot_ok(0)) return std::nullopt;
  if (nq == 1) return g;

  SearchBudget budget(lim, "homotopy search");
  std::vector<size_t> choice(nq, 0);
  int depth = 1;
  while (depth >= 1) {
    if (cand[depth].empty()) return std::nullopt;
    if (choice[depth] == cand[depth].size()) {
      choice[depth] = 0;
      --depth;
      if (depth >= 1) ++choice[depth];
      continue;
    }
    budget.spend();
    g[depth] = cand[depth][choice[depth]];
    if (!slot_ok(depth)) {
      ++choice[depth];
      continue;
    }
    if (depth == nq - 1) return g;
    ++depth;
  }
  return std::nullopt;
}

namespace {

struct FunctorSearch {
  const GammaGroup& q;
  const GroupHom& psi;
  const GradedCatGroup& p;
  const Limits& lim;
  CokerData coker;
  std::vector<std::vector<int>> dfiber;  // d-fiber per D element
  std::vector<std::vector<int>> psi_fiber;  // F0 candidates per Q element

  explicit FunctorSearch(const GammaGroup& q_, const GroupHom& psi_,
                         const GradedCatGroup& p_, const Limits& lim_)
      : q(q_), psi(psi_), p(p_), lim(lim_), coker(pi0_data(p_.base)) {
    if (!(psi.src == q.group) || !(psi.dst == coker.coker.group))
      throw StructuralError("enumerate_functors: ψ endpoints mismatch");
    if (auto r = validate_gamma_hom(psi, q.action, coker.coker.action);
        !r.ok())
      throw PreconditionError("enumerate_functors: ψ is not a Γ-hom: " +
                              r.what);
    const auto& B = p.base.B.group;
    dfiber.assign(p.base.D.order(), {});
    for (int b = 0; b < B.order(); ++b)
      dfiber[p.base.d.apply(b)].push_back(b);
    psi_fiber.assign(q.order(), {});
    for (int x = 0; x < q.order(); ++x)
      for (int v = 0; v < p.base.D.order(); ++v)
        if (coker.q.proj.apply(v) == psi.apply(x)) psi_fiber[x].push_back(v);
  }

  // enumerate in lexicographic (F0, fQG, fQQ) order; emit returns false to
  // stop the search
  void run(const std::function<bool(const GradedMonoidalFunctor&)>& emit) {
    const int nq = q.order(), ng = q.gamma().order();
    GradedMonoidalFunctor f;
    f.srcQ = q;
    f.M = p.base;
    f.F0.assign(nq, 0);
    f.fQQ.assign(nq * nq, 0);
    f.fQG.assign(nq * ng, 0);
    SearchBudget budget(lim, "functor enumeration");
    bool stop = false;

    // slot model: F0 slots x = 1..nq-1, then fQG (x, s>=1), then fQQ
    // (x>=1, y>=1)
    struct Slot {
      int kind;  // 0 F0, 1 fQG, 2 fQQ
      int a, b;
    };
    std::vector<Slot> slots;
    for (int x = 1; x < nq; ++x) slots.push_back({0, x, 0});
    std::vector<int> qg_slot(nq * ng, -1), qq_slot(nq * nq, -1);
    for (int x = 0; x < nq; ++x)
      for (int s = 1; s < ng; ++s) {
        qg_slot[x * ng + s] = static_cast<int>(slots.size());
        slots.push_back({1, x, s});
      }
    for (int x = 1; x < nq; ++x)
      for (int y = 1; y < nq; ++y) {
        qq_slot[x * nq + y] = static_cast<int>(slots.size());
        slots.push_back({2, x, y});
      }
    const int f0_end = nq - 1;

    // identity instances bucketed by their last-filled slot
    struct Ins {
      int kind;  // 6, 7, 8
      int a, b, c;
    };
    std::vector<std::vector<Ins>> bucket(slots.size());
    auto add_ins = [&](Ins ins, std::initializer_list<int> used) {
      int mx = -1;
      for (int s : used) mx = std::max(mx, s);
      if (mx >= 0) bucket[mx].push_back(ins);
    };
    const auto& Qg = q.group;
    const auto& G = q.gamma();
    for (int x = 0; x < nq; ++x)
      for (int s = 0; s < ng; ++s)
        for (int t = 0; t < ng; ++t)
          add_ins({6, x, s, t},
                  {qg_slot[x * ng + s], qg_slot[q.act(s, x) * ng + t],
                   qg_slot[x * ng + G.mul(t, s)]});
    for (int x = 0; x < nq; ++x)
      for (int y = 0; y < nq; ++y)
        for (int s = 0; s < ng; ++s)
          add_ins({7, x, y, s},
                  {qq_slot[x * nq + y], qg_slot[Qg.mul(x, y) * ng + s],
                   qg_slot[x * ng + s], qg_slot[y * ng + s],
                   qq_slot[q.act(s, x) * nq + q.act(s, y)]});
    for (int x = 0; x < nq; ++x)
      for (int y = 0; y < nq; ++y)
        for (int z = 0; z < nq; ++z)
          add_ins({8, x, y, z},
                  {qq_slot[y * nq + z], qq_slot[x * nq + Qg.mul(y, z)],
                   qq_slot[x * nq + y], qq_slot[Qg.mul(x, y) * nq + z]});

    const auto& B = p.base.B.group;
    const auto& D = p.base.D.group;
    auto ins_holds = [&](const Ins& ins) {
      switch (ins.kind) {
        case 6: {
          const int x = ins.a, s = ins.b, t = ins.c;
          return B.mul(p.base.B.act(t, f.qg(x, s)),
                       f.qg(q.act(s, x), t)) == f.qg(x, G.mul(t, s));
        }
        case 7: {
          const int x = ins.a, y = ins.b, s = ins.c;
          const int sx = q.act(s, x), sy = q.act(s, y);
          return B.mul(p.base.B.act(s, f.qq(x, y)), f.qg(Qg.mul(x, y), s)) ==
                 B.mul(B.mul(f.qg(x, s),
                             p.base.theta_apply(f.F0[sx], f.qg(y, s))),
                       f.qq(sx, sy));
        }
        default: {
          const int x = ins.a, y = ins.b, z = ins.c;
          return B.mul(p.base.theta_apply(f.F0[x], f.qq(y, z)),
                       f.qq(x, Qg.mul(y, z))) ==
                 B.mul(f.qq(x, y), f.qq(Qg.mul(x, y), z));
        }
      }
    };

    // candidate values per slot; F0 slots list object fibers, f-slots list
    // the d-fiber of the value pinned by (11)/(12)
    std::function<const std::vector<int>*(int)> candidates =
        [&](int k) -> const std::vector<int>* {
      const Slot& sl = slots[k];
      if (sl.kind == 0) return &psi_fiber[sl.a];
      if (sl.kind == 1) {
        const int x = sl.a, s = sl.b;
        const int v = D.mul(p.base.D.act(s, f.F0[x]),
                            D.inv(f.F0[q.act(s, x)]));
        return &dfiber[v];
      }
      const int x = sl.a, y = sl.b;
      const int v = D.mul(D.mul(f.F0[x], f.F0[y]),
                          D.inv(f.F0[Qg.mul(x, y)]));
      return &dfiber[v];
    };

    auto set_slot = [&](int k, int v) {
      const Slot& sl = slots[k];
      if (sl.kind == 0)
        f.F0[sl.a] = v;
      else if (sl.kind == 1)
        f.fQG[sl.a * ng + sl.b] = v;
      else
        f.fQQ[sl.a * nq + sl.b] = v;
    };

    if (slots.empty()) {
      if (!emit(f)) return;
      return;
    }

    std::function<void(int)> rec = [&](int k) {
      if (stop) return;
      if (k == static_cast<int>(slots.size())) {
        if (!emit(f)) stop = true;
        return;
      }
      const std::vector<int>* cands = candidates(k);
      for (int v : *cands) {
        if (stop) return;
        budget.spend();
        set_slot(k, v);
        bool ok = true;
        if (k >= f0_end)
          for (const auto& ins : bucket[k])
            if (!ins_holds(ins)) {
              ok = false;
              break;
            }
        if (ok) rec(k + 1);
      }
      set_slot(k, 0);
    };
    rec(0);
  }
};

}  // namespace

FunctorEnumeration enumerate_functors(const GammaGroup& q, const GroupHom& psi,
                                      const GradedCatGroup& p,
                                      const Limits& lim) {
  FunctorSearch search(q, psi, p, lim);
  FunctorEnumeration out;
  search.run([&](const GradedMonoidalFunctor& f) {
    out.functors.push_back(f);
    return true;
  });
  // partition into homotopy classes; enumeration order is lexicographic, so
  // the first member of each class is its minimal representative
  out.class_of.assign(out.functors.size(), -1);
  for (size_t i = 0; i < out.functors.size(); ++i) {
    if (out.class_of[i] >= 0) continue;
    const int cls = static_cast<int>(out.reps.size());
    out.reps.push_back(static_cast<int>(i));
    out.class_of[i] = cls;
    for (size_t j = i + 1; j < out.functors.size(); ++j) {
      if (out.class_of[j] >= 0) continue;
      if (homotopic(out.functors[i], out.functors[j], lim)) out.class_of[j] = cls;
    }
  }
  return out;
}

bool any_functor_exists(const GammaGroup& q, const GroupHom& psi,
                        const GradedCatGroup& p, const Limits& lim) {
  FunctorSearch search(q, psi, p, lim);
  bool found = false;
  search.run([&](const GradedMonoidalFunctor&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace exmod
