#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exmod/aut.hpp"
#include "exmod/cohomology.hpp"
#include "exmod/equivariant_module.hpp"

namespace exmod {

/// Γ-crossed module (B, D, d, ϑ). ϑ is stored as one permutation of B per
/// element of D, so validation never needs Aut(B) enumerated.
struct GammaCrossedModule {
  GammaGroup B;
  GammaGroup D;
  GroupHom d;                           // B -> D
  std::vector<std::vector<int>> theta;  // |D| rows, permutations of B

  const FiniteGroup& gamma() const { return B.gamma(); }
  int theta_apply(int x, int b) const { return theta[x][b]; }
  int theta_inv(int x, int b) const;  // ϑ_x^{-1}(b)

  friend bool operator==(const GammaCrossedModule& a,
                         const GammaCrossedModule& b) {
    return a.B == b.B && a.D == b.D && a.d == b.d && a.theta == b.theta;
  }
};

/// Checks, in order: Γ-homomorphism d; ϑ a Γ-compatible family of
/// automorphisms with ϑ_{xy} = ϑ_x ϑ_y; C1 ϑ_{d(b)} = μ_b;
/// C2 d(ϑ_x b) = x d(b) x⁻¹; C3 σ(ϑ_x b) = ϑ_{σx}(σb).
/// Witnesses use (σ,x,b) index triples as applicable.
Report validate_crossed_module(const GammaCrossedModule& m);

// ---- the four standard constructors ---------------------------------------

/// (B, D, i, conjugation) for a normal Γ-invariant subgroup of D given by
/// its element set.
GammaCrossedModule from_inclusion(const GammaGroup& D,
                                  const std::vector<int>& b_elems);

/// (B, D, 0, module action) for an abelian B that is a D-module.
GammaCrossedModule from_module(const GammaGroup& B, const GammaGroup& D,
                               const std::vector<std::vector<int>>& action);

/// (B, Aut B, μ, tautological action) with the Γ-action (σf)(x) = σf(σ⁻¹x).
GammaCrossedModule from_conjugation(const GammaGroup& B,
                                    const Limits& lim = {});

/// (B, D, p, conjugation through sections) for a surjective Γ-hom p with
/// central kernel.
GammaCrossedModule from_central_surjection(const GammaGroup& B,
                                           const GammaGroup& D,
                                           const GroupHom& p);

// ---- invariants ------------------------------------------------------------

struct KerData {
  GammaGroup ker;  // Ker d with the inherited Γ-action
  Subgroup sub;    // embedding data into B
};

struct CokerData {
  GammaGroup coker;  // Coker d with σ[x] = [σx]
  Quotient q;        // quotient data over D
};

KerData pi1_data(const GammaCrossedModule& m);
CokerData pi0_data(const GammaCrossedModule& m);
GammaGroup pi1(const GammaCrossedModule& m);
GammaGroup pi0(const GammaCrossedModule& m);

/// Ker d as a Γ-equivariant Coker d-module, s·a = ϑ_x(a) for any x in s.
/// Well-definedness over coset representatives is checked eagerly;
/// an invalid module raises PreconditionError naming the witness coset.
EquivariantModule pi_module(const GammaCrossedModule& m);

/// π₁(dst) viewed as a π₀(src)-module through the map π₀(src) -> π₀(dst)
/// induced by f0. With src = dst and f0 = id this is pi_module.
EquivariantModule induced_module(const GammaCrossedModule& src,
                                 const GammaCrossedModule& dst,
                                 const std::vector<int>& f0);

/// Ker d as a Q-module through a Γ-hom ψ : Q -> Coker d (given on coker
/// indices), for the Theorem 10 torsor side.
EquivariantModule psi_module(const GammaCrossedModule& m, const GammaGroup& Q,
                             const std::vector<int>& psi);

// ---- homomorphisms and the ΓCross category --------------------------------

struct CrossedModuleHom {
  GammaCrossedModule srcM;
  GammaCrossedModule dstM;
  GroupHom f1;  // B -> B'
  GroupHom f0;  // D -> D'
};

/// Γ-homs, H1 f0 d = d' f1, H2 f1(ϑ_x b) = ϑ'_{f0 x}(f1 b).
Report validate_crossed_hom(const CrossedModuleHom& h);

/// Morphism of ΓCross: a homomorphism plus an equivariant 2-cocycle with
/// coefficients in π₁ of the target.
struct CrossedMorphism {
  CrossedModuleHom hom;
  Cochain2 phi;  // over induced_module(srcM, dstM, f0)
};

Report validate_crossed_morphism(const CrossedMorphism& t);

CrossedMorphism identity_morphism(const GammaCrossedModule& m);

/// (f'₁, f'₀, φ') ∘ (f₁, f₀, φ) = (f'₁f₁, f'₀f₀, (f'₁)_*φ + φ'∘(induced f₀)).
CrossedMorphism compose(const CrossedMorphism& t2, const CrossedMorphism& t1);

/// All crossed-module homs between two fixed modules (for test corpora).
std::vector<CrossedModuleHom> all_crossed_homs(const GammaCrossedModule& src,
                                               const GammaCrossedModule& dst,
                                               const Limits& lim = {});

/// Isomorphism (f1, f0) between crossed modules, if any.
std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_crossed_module_isomorphism(const GammaCrossedModule& a,
                                const GammaCrossedModule& b,
                                const Limits& lim = {});

}  // namespace exmod
