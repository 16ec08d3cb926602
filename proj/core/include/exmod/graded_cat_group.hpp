#pragma once

#include <optional>
#include <vector>

#include "exmod/crossed_module.hpp"

namespace exmod {

/// Strict Γ-graded categorical group presented by its crossed module.
/// Objects are the elements of D; a σ-morphism x -> y is a pair (b,σ) with
/// σx = d(b)y, so hom-sets and laws are enumerated on demand.
struct GradedCatGroup {
  GammaCrossedModule base;

  int num_objects() const { return base.D.order(); }
};

/// Morphism (b,σ) out of `src`; the target is determined by the grading law.
struct GCGMorphism {
  int src;
  int b;
  int sigma;

  friend bool operator==(const GCGMorphism& a, const GCGMorphism& b) {
    return a.src == b.src && a.b == b.b && a.sigma == b.sigma;
  }
};

/// Validates the crossed module and wraps it.
GradedCatGroup build_P(const GammaCrossedModule& m);

/// The discrete graded categorical group on Q: P of (0, Q, 0, 0).
GradedCatGroup dis_gamma(const GammaGroup& q);

int target(const GradedCatGroup& p, const GCGMorphism& m);
int grade(const GCGMorphism& m);
GCGMorphism identity_morphism(const GradedCatGroup& p, int x);

/// (x -(b,σ)-> y -(c,τ)-> z) = (x -(τb+c, τσ)-> z). m1 first, m2 second.
GCGMorphism compose(const GradedCatGroup& p, const GCGMorphism& m2,
                    const GCGMorphism& m1);

/// (b,σ)⁻¹ = (−σ⁻¹b, σ⁻¹), sourced at the target of m.
GCGMorphism inverse(const GradedCatGroup& p, const GCGMorphism& m);

/// (x -(b,σ)-> y) ⊗ (x' -(c,σ)-> y') = (xx' -(b+ϑ_y c, σ)-> yy').
/// Both factors must have the same grade.
GCGMorphism tensor(const GradedCatGroup& p, const GCGMorphism& m1,
                   const GCGMorphism& m2);

/// Exhaustive groupoid, tensor-functor, grading and unit laws. Used by the
/// law suites; returns the first failure.
Report check_categorical_laws(const GradedCatGroup& p);

/// The canonical regular factor set of P: F^σ is x ↦ σx on objects and
/// (b,1) ↦ (σb,1) on Ker P, with θ^{σ,τ} = id.
struct FactorSet {
  std::vector<std::vector<int>> obj_map;  // per σ, permutation of objects
  std::vector<std::vector<int>> mor_map;  // per σ, map on grade-1 b values
};

FactorSet factor_set_of(const GradedCatGroup& p);

/// Factor-set axioms: F¹ = id, θ^{1,σ} = θ^{σ,1} = id, the θ coherence with
/// θ = id (which here means F^σ F^τ = F^{στ} on the nose), and regularity of
/// each F^σ.
Report validate_factor_set(const GradedCatGroup& p, const FactorSet& fs);

/// Rebuilds the crossed module from categorical data only: objects, grade-1
/// morphisms into 1, tensor, composition and the canonical factor set.
GammaCrossedModule crossed_module_of(const GradedCatGroup& p);

// ---- regular functors between two strict P's (triples ↔ functors) --------

/// Raw data of a regular graded monoidal functor P -> P': object map,
/// grade-1 morphism map, and the (5)-data F(0,σ) = (fQG(x,σ),σ),
/// F̃_{x,y} = (fQQ(x,y),1) with values in B'.
struct RegularFunctorData {
  GammaCrossedModule srcM;
  GammaCrossedModule dstM;
  std::vector<int> obj;   // |D| -> |D'|
  std::vector<int> mor1;  // |B| -> |B'|
  std::vector<int> fQQ;   // |D| x |D|
  std::vector<int> fQG;   // |D| x |Γ|

  int qq(int x, int y) const { return fQQ[x * srcM.D.order() + y]; }
  int qg(int x, int s) const { return fQG[x * srcM.gamma().order() + s]; }
};

/// S1-S4 by name, morphism validity of the (5)-data, functoriality on all
/// composable pairs and naturality of F̃.
Report validate_regular_functor(const RegularFunctorData& f);

/// Image of a morphism under the functor data.
GCGMorphism apply_functor(const RegularFunctorData& f, const GCGMorphism& m);

/// Theorem 6, triple -> functor: F(x) = f0 x, F(b,1) = (f1 b, 1),
/// F(0,σ) = (φ(px,σ),σ), F̃_{x,y} = (φ(px,py),1).
RegularFunctorData functor_from_triple(const CrossedMorphism& t);

/// Theorem 6, functor -> triple; throws PreconditionError naming the first
/// violated S-condition for non-regular data.
CrossedMorphism triple_of_functor(const RegularFunctorData& f);

/// Pointwise composite of functor data (for functoriality checks).
RegularFunctorData compose_functors(const RegularFunctorData& g,
                                    const RegularFunctorData& f);

// ---- graded monoidal functors out of ΓDis Q -------------------------------

/// (F0, f) with F : ΓDis Q -> P_M, F(x) = F0[x],
/// F(x -σ-> σx) = (fQG(x,σ), σ), F̃_{x,y} = (fQQ(x,y), 1), values in B.
struct GradedMonoidalFunctor {
  GammaGroup srcQ;
  GammaCrossedModule M;
  std::vector<int> F0;
  std::vector<int> fQQ;  // |Q| x |Q|
  std::vector<int> fQG;  // |Q| x |Γ|

  int qq(int x, int y) const { return fQQ[x * srcQ.order() + y]; }
  int qg(int x, int s) const { return fQG[x * srcQ.gamma().order() + s]; }

  friend bool operator==(const GradedMonoidalFunctor& a,
                         const GradedMonoidalFunctor& b) {
    return a.srcQ == b.srcQ && a.M == b.M && a.F0 == b.F0 && a.fQQ == b.fQQ &&
           a.fQG == b.fQG;
  }
};

/// Normalization (10), F0(1) = 1, the morphism laws (11) σF(x) = df(x,σ)F(σx)
/// and (12) F(x)F(y) = df(x,y)F(xy), and the identities (6)-(8) with
/// ϑ_{F(.)} in the action slot (values in B, order as derived from the
/// coherence squares).
Report validate_functor(const GradedMonoidalFunctor& f);

/// Homotopy F -> F': g : Q -> B with g(1) = 0, Fx = dg(x)F'x (14),
/// f(x,σ) + g(σx) = σg(x) + f'(x,σ) (15),
/// f(x,y) + g(xy) = g(x) + ϑ_{F'x}g(y) + f'(x,y) (16).
std::optional<std::vector<int>> homotopic(const GradedMonoidalFunctor& f,
                                          const GradedMonoidalFunctor& g,
                                          const Limits& lim = {});

struct FunctorEnumeration {
  std::vector<GradedMonoidalFunctor> functors;  // lexicographic order
  std::vector<int> class_of;                    // homotopy class per functor
  std::vector<int> reps;                        // first (lex-min) per class
};

/// All graded monoidal functors ΓDis Q -> P with F0 inducing ψ, partitioned
/// into homotopy classes. ψ is a Γ-hom into the coker group of p.base.
FunctorEnumeration enumerate_functors(const GammaGroup& q, const GroupHom& psi,
                                      const GradedCatGroup& p,
                                      const Limits& lim = {});

/// True iff at least one such functor exists (early-exit search).
bool any_functor_exists(const GammaGroup& q, const GroupHom& psi,
                        const GradedCatGroup& p, const Limits& lim = {});

}  // namespace exmod
