#include <catch2/catch_amalgamated.hpp>

#include "xmodkit/catalog.hpp"
#include "xmodkit/crossed_module.hpp"
#include "xmodkit/two_groupoid.hpp"

using namespace xmodkit;

namespace {
const CrossedModule& cat_xmod(const std::string& n) {
  return catalog().xmods.at(n).xm;
}
}  // namespace

TEST_CASE("crossed-module axioms hold on the catalog") {
  for (const std::string& n : {"XM1", "XM2", "XM3", "XM4", "CONJ"}) {
    Transcript tr = check_xmod(cat_xmod(n));
    INFO(n);
    REQUIRE(tr.all_ok());
  }
}

TEST_CASE("corrupted action table breaks equivariance with a witness") {
  // identity boundary on the symmetric group but the trivial action:
  // d(^g gamma) = gamma while g d(gamma) g^-1 is a genuine conjugate.
  // First failure in scan order: g=1 (a transposition), gamma=2, since
  // conjugating the transposition 2 by 1 gives 5.
  FiniteGroup s3 = detail::sym3();
  CrossedModule bad{s3, s3, identity_hom(s3),
                    detail::trivial_action_of(s3, s3)};
  Transcript tr = check_xmod(bad);
  REQUIRE_FALSE(tr.all_ok());
  REQUIRE(tr.lines[0].first == "equivariance");
  REQUIRE_FALSE(tr.lines[0].second.ok);
  REQUIRE(tr.lines[0].second.witness.find("Axiom1Fails") == 0);
  REQUIRE(tr.lines[0].second.witness.find("(g=1, gamma=2)") !=
          std::string::npos);
}

TEST_CASE("corrupted boundary table breaks the second axiom with a witness") {
  // conjugation action on the symmetric group but the boundary zeroed out:
  // equivariance holds (both sides trivial) while the second axiom
  // ^{d(gamma)} gamma' = gamma gamma' gamma^-1 fails at the first
  // non-commuting pair, gamma=1, gamma'=2.
  FiniteGroup s3 = detail::sym3();
  CrossedModule bad{s3, s3, zero_hom(s3, s3), detail::conjugation_action(s3)};
  Transcript tr = check_xmod(bad);
  REQUIRE_FALSE(tr.all_ok());
  REQUIRE(tr.lines[0].second.ok);  // equivariance holds for this corruption
  REQUIRE(tr.lines[1].first == "peiffer");
  REQUIRE_FALSE(tr.lines[1].second.ok);
  REQUIRE(tr.lines[1].second.witness.find("Axiom2Fails") == 0);
  REQUIRE(tr.lines[1].second.witness.find("(gamma=1, gamma'=2)") !=
          std::string::npos);
}

TEST_CASE("constructor rejects invalid data") {
  FiniteGroup c2 = cyclic_group(2);
  FiniteGroup c4 = cyclic_group(4);
  // boundary endpoints mismatch
  REQUIRE_THROWS_AS(make_crossed_module(c4, c2, zero_hom(c2, c2),
                                        detail::trivial_action_of(c4, c2)),
                    ValidationError);
  // 1 -> 2 into Z/4 with trivial action is fine
  REQUIRE_NOTHROW(make_crossed_module(c4, c2, make_hom(c2, c4, {0, 2}),
                                      detail::trivial_action_of(c4, c2)));
}

TEST_CASE("cone 2-group satisfies the strict 2-groupoid laws") {
  for (const std::string& n : {"XM1", "XM2", "XM3", "XM4", "CONJ"}) {
    TwoGroup tg = cone_2group(cat_xmod(n));
    Transcript tr = check_two_groupoid(tg.as_two_groupoid());
    INFO(n);
    REQUIRE(tr.all_ok());
  }
}

TEST_CASE("cone morphism structure") {
  TwoGroup tg = cone_2group(cat_xmod("XM2"));
  // mor(g, g') = {gamma | d(gamma) g = g'}; d is 1 -> 2 in Z/4
  REQUIRE(tg.mor_elems(0, 0) == std::vector<int>{0});
  REQUIRE(tg.mor_elems(0, 2) == std::vector<int>{1});
  REQUIRE(tg.mor_elems(1, 3) == std::vector<int>{1});
  REQUIRE(tg.mor_elems(0, 1).empty());
}

TEST_CASE("homotopy groups of the cone (independent oracles)") {
  // zero boundary on Z/2: pi0 = Z/2, pi1 = Z/2
  REQUIRE(pi0_2group(cone_2group(cat_xmod("XM1"))).group.order() == 2);
  REQUIRE(pi1_2group(cone_2group(cat_xmod("XM1"))).group.order() == 2);
  // injective 1 -> 2 into Z/4: pi0 = Z/4 / {0,2} = Z/2, pi1 trivial
  REQUIRE(pi0_2group(cone_2group(cat_xmod("XM2"))).group.order() == 2);
  REQUIRE(pi1_2group(cone_2group(cat_xmod("XM2"))).group.order() == 1);
  // rotation subgroup of the symmetric group: index 2, injective
  REQUIRE(pi0_2group(cone_2group(cat_xmod("XM3"))).group.order() == 2);
  REQUIRE(pi1_2group(cone_2group(cat_xmod("XM3"))).group.order() == 1);
  // Z/2 over the point: pi0 trivial, pi1 = Z/2
  REQUIRE(pi0_2group(cone_2group(cat_xmod("XM4"))).group.order() == 1);
  REQUIRE(pi1_2group(cone_2group(cat_xmod("XM4"))).group.order() == 2);
  // identity boundary: both trivial
  REQUIRE(pi0_2group(cone_2group(cat_xmod("CONJ"))).group.order() == 1);
  REQUIRE(pi1_2group(cone_2group(cat_xmod("CONJ"))).group.order() == 1);
}

TEST_CASE("pi1 must be abelian") {
  // boundary to the trivial group forces pi1 = gm1; a non-abelian gm1 with
  // trivial action is not a crossed module, so check the guard directly
  FiniteGroup s3 = detail::sym3();
  CrossedModule fake{trivial_group(), s3, zero_hom(s3, trivial_group()),
                     detail::trivial_action_of(trivial_group(), s3)};
  REQUIRE_THROWS_AS(pi1_2group(TwoGroup(fake)), ValidationError);
}

TEST_CASE("two-term complex model of an abelian cone") {
  // complex Z/2 -0-> Z/2 -0-> 1: one object, two 1-morphisms, and a Z/2 of
  // 2-cells at each 1-morphism
  FiniteGroup c2 = cyclic_group(2);
  FiniteGroup t1 = trivial_group();
  AbelianComplex c = make_abelian_complex(c2, c2, t1, zero_hom(c2, c2),
                                          zero_hom(c2, t1));
  TwoGroupoid t = two_group_of_complex(c);
  REQUIRE(t.n == 1);
  REQUIRE(t.H(0, 0).num_objects() == 2);
  REQUIRE(t.H(0, 0).hom_size(0, 0) == 2);
  REQUIRE(t.H(0, 0).hom_size(0, 1) == 0);
  REQUIRE(check_two_groupoid(t).all_ok());
  // a complex with d1 ∘ d2 != 0 is rejected
  REQUIRE_THROWS_AS(make_abelian_complex(c2, c2, c2, identity_hom(c2),
                                         identity_hom(c2)),
                    ValidationError);
}
