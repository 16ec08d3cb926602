#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "exmod/aut.hpp"
#include "exmod/fingroup.hpp"
#include "helpers.hpp"

using namespace exmod;
using namespace exmod::testing;

TEST_CASE("group validation accepts the standard constructions") {
  CHECK(validate_group(FiniteGroup::trivial()).ok());
  CHECK(validate_group(FiniteGroup::cyclic(4)).ok());
  CHECK(validate_group(FiniteGroup::symmetric(3)).ok());
  CHECK(validate_group(FiniteGroup::symmetric(4)).ok());
  CHECK(validate_group(FiniteGroup::dihedral(4)).ok());
  CHECK(validate_group(FiniteGroup::quaternion8()).ok());
  CHECK(validate_group(FiniteGroup::dicyclic3()).ok());
  CHECK(validate_group(FiniteGroup::alternating4()).ok());
  CHECK(validate_group(
            FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                        FiniteGroup::cyclic(2)))
            .ok());
  CHECK(FiniteGroup::alternating4().order() == 12);
  CHECK(FiniteGroup::symmetric(4).order() == 24);
}

TEST_CASE("corrupted Z/4 table fails with an inverse-law witness at 1") {
  auto rows = FiniteGroup::cyclic(4).rows();
  rows[1][1] = 1;  // was 2
  const FiniteGroup bad = FiniteGroup::from_table(rows);
  const Report r = validate_group(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.law == "inverse");
  REQUIRE_FALSE(r.witness.empty());
  CHECK(r.witness[0] == 1);
}

TEST_CASE("structural errors are distinct from law violations") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), StructuralError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 7}, {1, 0}}), StructuralError);
}

TEST_CASE("gamma hom validation") {
  const GammaGroup z3 = zn_with_inversion(3);
  CHECK(validate_gamma_group(z3).ok());
  CHECK(validate_gamma_hom(identity_hom(z3.group), z3.action, z3.action).ok());

  const GammaGroup one{FiniteGroup::trivial(),
                       GammaAction::trivial(z3.gamma(), FiniteGroup::trivial())};
  CHECK(validate_gamma_hom(trivial_hom(z3.group, one.group), z3.action,
                           one.action)
            .ok());

  // inversion on Z/3 with Γ = 1 is a hom, equivariance vacuous
  const GammaGroup z3t = with_trivial_gamma(FiniteGroup::cyclic(3));
  std::vector<int> invmap(3);
  for (int i = 0; i < 3; ++i) invmap[i] = z3t.group.inv(i);
  CHECK(validate_gamma_hom({z3t.group, z3t.group, invmap}, z3t.action,
                           z3t.action)
            .ok());

  // mismatched Γ is structural
  const Report r = validate_gamma_hom(identity_hom(z3.group), z3.action,
                                      z3t.action);
  CHECK(r.kind == Report::Kind::structural);
}

TEST_CASE("automorphism groups against the brute-force oracle") {
  for (const FiniteGroup& g :
       {FiniteGroup::trivial(), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                    FiniteGroup::cyclic(2)),
        FiniteGroup::symmetric(3), FiniteGroup::quaternion8()}) {
    const AutGroup aut = automorphism_group(g);
    CHECK(aut.perms == brute_automorphisms(g));
    CHECK(validate_group(aut.group).ok());
    // composition convention (fh)(x) = f(h(x))
    for (int f = 0; f < aut.group.order(); ++f)
      for (int h = 0; h < aut.group.order(); ++h)
        for (int x = 0; x < g.order(); ++x)
          CHECK(aut.perms[aut.group.mul(f, h)][x] ==
                aut.perms[f][aut.perms[h][x]]);
  }
  CHECK(automorphism_group(FiniteGroup::trivial()).group.order() == 1);
  CHECK(automorphism_group(FiniteGroup::cyclic(3)).group.order() == 2);
  CHECK(automorphism_group(
            FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                        FiniteGroup::cyclic(2)))
            .group.order() == 6);
  CHECK(automorphism_group(FiniteGroup::quaternion8()).group.order() == 24);
}

TEST_CASE("aut bound raises a resource error") {
  Limits lim;
  lim.aut_order_bound = 5;
  CHECK_THROWS_AS(automorphism_group(FiniteGroup::symmetric(3), lim),
                  ResourceError);
}

TEST_CASE("gamma action on Aut B") {
  SUBCASE("trivial Γ gives the trivial action") {
    const GammaGroup b = with_trivial_gamma(FiniteGroup::cyclic(3));
    const AutGroup aut = automorphism_group(b.group);
    const GammaAction a = gamma_action_on_aut(b, aut);
    CHECK(validate_action(a).ok());
    for (int f = 0; f < aut.group.order(); ++f) CHECK(a.apply(0, f) == f);
  }
  SUBCASE("trivial action on B conjugates to the trivial action on Aut") {
    const GammaGroup b = with_trivial_z2(FiniteGroup::cyclic(3));
    const GammaAction a = gamma_action_on_aut(b, automorphism_group(b.group));
    CHECK(validate_action(a).ok());
    for (int s = 0; s < 2; ++s)
      for (int f = 0; f < a.target.order(); ++f) CHECK(a.apply(s, f) == f);
  }
  SUBCASE("inversion action, checked against the displayed formula") {
    const GammaGroup b = zn_with_inversion(3);
    const AutGroup aut = automorphism_group(b.group);
    const GammaAction a = gamma_action_on_aut(b, aut);
    CHECK(validate_action(a).ok());
    for (int s = 0; s < 2; ++s)
      for (int f = 0; f < aut.group.order(); ++f) {
        std::vector<int> expect(3);
        for (int x = 0; x < 3; ++x)
          expect[x] = b.act(s, aut.apply(f, b.act(b.gamma().inv(s), x)));
        CHECK(aut.perms[a.apply(s, f)] == expect);
      }
  }
}

TEST_CASE("inner hom") {
  SUBCASE("abelian groups have trivial inner automorphisms") {
    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    const AutGroup aut = automorphism_group(z4);
    const GroupHom mu = inner_hom(z4, aut);
    for (int b = 0; b < 4; ++b) CHECK(mu.apply(b) == 0);
    CHECK(kernel(mu).size() == 4);
  }
  SUBCASE("S3 embeds into its automorphism group") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    const AutGroup aut = automorphism_group(s3);
    const GroupHom mu = inner_hom(s3, aut);
    CHECK(validate_hom(mu).ok());
    CHECK(kernel(mu).size() == 1);
    CHECK(image(mu).size() == 6);
  }
  SUBCASE("μ is a Γ-hom for the conjugation action on Aut") {
    for (const GammaGroup& b :
         {zn_with_inversion(3), with_trivial_z2(FiniteGroup::symmetric(3)),
          with_trivial_gamma(FiniteGroup::quaternion8())}) {
      const AutGroup aut = automorphism_group(b.group);
      const GammaAction a = gamma_action_on_aut(b, aut);
      CHECK(validate_gamma_hom(inner_hom(b.group, aut), b.action, a).ok());
    }
  }
}

TEST_CASE("kernel, image, center, quotient") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(center(s3) == std::vector<int>{0});
  CHECK(center(FiniteGroup::quaternion8()).size() == 2);

  CHECK(kernel(identity_hom(s3)) == std::vector<int>{0});

  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const Quotient q = quotient(z4, {0, 2});
  CHECK(q.group.order() == 2);
  CHECK(validate_group(q.group).ok());
  CHECK(validate_hom(q.proj).ok());
  CHECK(image(q.proj).size() == 2);
  CHECK(kernel(q.proj) == std::vector<int>{0, 2});
  CHECK(q.reps[0] == 0);  // identity coset first, minimal representatives

  // non-normal subgroup rejected with a witness
  const std::vector<int> refl = closure(s3, {s3.order_of(1) == 2 ? 1 : 2});
  CHECK(refl.size() == 2);
  CHECK_THROWS_AS(quotient(s3, refl), PreconditionError);
}

TEST_CASE("quotient projection is surjective with kernel N") {
  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  const std::vector<int> zc = center(d4);
  const Quotient q = quotient(d4, zc);
  CHECK(static_cast<int>(image(q.proj).size()) == q.group.order());
  CHECK(kernel(q.proj) == zc);
}

TEST_CASE("hom and isomorphism enumeration") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(all_homomorphisms(z2, z2).size() == 2);
  CHECK(all_homomorphisms(z4, z2).size() == 2);
  CHECK(all_homomorphisms(z2, z4).size() == 2);
  CHECK(is_isomorphic(FiniteGroup::symmetric(3), FiniteGroup::dihedral(3)));
  CHECK_FALSE(is_isomorphic(FiniteGroup::cyclic(4),
                            FiniteGroup::direct_product(z2, z2)));
  CHECK_FALSE(is_isomorphic(FiniteGroup::quaternion8(),
                            FiniteGroup::dihedral(4)));
}
