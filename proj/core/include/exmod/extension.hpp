#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exmod/graded_cat_group.hpp"

namespace exmod {

/// Equivariant extension 0 -> B -> E -> Q -> 1 of type B -> D, with
/// ε : E -> D making (id, ε) a homomorphism of crossed modules.
struct Extension {
  GammaCrossedModule M;
  GammaGroup Q;
  GammaGroup E;
  GroupHom j;    // B -> E
  GroupHom p;    // E -> Q
  GroupHom eps;  // E -> D
};

/// Γ-homs, exactness, the conjugation crossed module on (B, E, j) and the
/// (id, ε) homomorphism conditions.
Report validate_extension(const Extension& e);

/// ψ(x) = q(ε(e₀)) for any p-preimage e₀ of x; verified well-defined and a
/// Γ-hom into the coker group of M.
GroupHom induced_psi(const Extension& e);

/// Lemma 7 crossed product E_F = B ×_f Q on pair indices b*|Q|+x with
/// (b,x)+(c,y) = (b + ϑ_{Fx}c + f(x,y), xy), σ(b,x) = (σb + f(x,σ), σx),
/// ε(b,x) = db·Fx.
Extension crossed_product(const GradedMonoidalFunctor& f);

struct ExtEquivalence {
  GroupHom alpha;  // E -> E'
};

Report validate_equivalence(const Extension& e, const Extension& ep,
                            const GroupHom& alpha);

/// Searches Γ-isomorphisms α with α j = j', p' α = p, ε' α = ε; candidates
/// are generated fiberwise over minimal-index transversals.
std::optional<ExtEquivalence> equivalent(const Extension& e,
                                         const Extension& ep,
                                         const Limits& lim = {});

/// One crossed product per homotopy class of functors, pairwise
/// inequivalent; Theorem 8 makes this a full classification.
std::vector<Extension> classify(const GammaGroup& q, const GroupHom& psi,
                                const GammaCrossedModule& m,
                                const Limits& lim = {});

/// True iff an extension inducing ψ exists: the obstruction vanishes
/// exactly when some graded monoidal functor exists.
bool obstruction_vanishes(const GammaGroup& q, const GroupHom& psi,
                          const GammaCrossedModule& m, const Limits& lim = {});

struct TorsorReport {
  long long classes = 0;
  long long h2 = 0;
  bool pass = false;
};

/// |classify| against |H²_Γ(Q, Ker d)| over the ψ-induced module.
TorsorReport torsor_count_check(const GammaGroup& q, const GroupHom& psi,
                                const GammaCrossedModule& m,
                                const Limits& lim = {});

/// Theorem 8 step 2: representatives u_x (minimal index, u_1 = 0), f from
/// u_x u_y = f(x,y) + u_{xy} and σu_x = f(x,σ) + u_{σx}, Fx = ε(u_x).
GradedMonoidalFunctor functor_of_extension(const Extension& e);

struct ExtGammaRow {
  std::vector<int> psi;  // Q -> Out B (coker indices)
  bool vanishes = false;
  std::vector<Extension> classes;
  std::vector<std::string> labels;
};

struct ExtGammaResult {
  GammaCrossedModule holM;  // B -> Aut B
  std::vector<ExtGammaRow> rows;
  long long total_classes = 0;
};

/// Classification of plain equivariant extensions of B by Q across every
/// Γ-hom ψ : Q -> Out B, through the crossed module B -> Aut B.
ExtGammaResult ext_gamma(const GammaGroup& q, const GammaGroup& b,
                         const Limits& lim = {});

/// Brute-force oracle: enumerates every Γ-group structure on the set B x Q
/// with j(b) = (b,1) and p = second projection satisfying all Extension
/// invariants and inducing ψ, with no crossed-product assumption, and
/// partitions the results into equivalence classes.
struct RawOracleResult {
  std::vector<Extension> all;
  std::vector<Extension> class_reps;
};

RawOracleResult raw_enumerate_extensions(const GammaGroup& q,
                                         const GroupHom& psi,
                                         const GammaCrossedModule& m,
                                         const Limits& lim = {});

}  // namespace exmod
