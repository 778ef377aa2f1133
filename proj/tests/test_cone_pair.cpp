#include <catch2/catch_amalgamated.hpp>

#include "xmodkit/catalog.hpp"
#include "xmodkit/cone_pair.hpp"

using namespace xmodkit;

namespace {
const ConePair& cat_pair(const std::string& n) {
  return catalog().pairs.at(n).pair;
}
}  // namespace

TEST_CASE("crossed-module morphism validation") {
  const CrossedModule& xm1 = catalog().xmods.at("XM1").xm;
  const CrossedModule& xm2 = catalog().xmods.at("XM2").xm;
  FiniteGroup c2 = cyclic_group(2);
  FiniteGroup c4 = cyclic_group(4);
  // degree-0 component 1 -> 2 with zero degree -1 component is a morphism
  REQUIRE_NOTHROW(
      make_xmod_hom(xm1, xm2, make_hom(c2, c4, {0, 2}), zero_hom(c2, c2)));
  // identity on degree -1 breaks the boundary square (d is zero upstairs,
  // injective downstairs)
  REQUIRE_THROWS_AS(
      make_xmod_hom(xm1, xm2, make_hom(c2, c4, {0, 2}), identity_hom(c2)),
      ValidationError);
}

TEST_CASE("two-sided action construction for every pair") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    REQUIRE_NOTHROW(cone_of_pair(cat_pair(n)));
  }
}

TEST_CASE("phi formula agrees with the action for every pair") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    Transcript tr = verify_lemma_phi(cone_of_pair(cat_pair(n)));
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
}

TEST_CASE("stabilizer oracle on the non-abelian pair") {
  // b = g = conjugation module with pi = pi' = id: the stabilizer of g is
  // {(b, gamma) | d(gamma) = b g b^-1 g^-1}, in bijection with B0 since d
  // is the identity, so every stabilizer has order 6
  const ConePair& cp = cat_pair("TS-C");
  ConeSemidirect cs = cone_semidirect(cp);
  REQUIRE(cs.s.group.order() == 36);
  for (int g = 0; g < 6; ++g) {
    Subgroup st = stab_g(cp, cs, g);
    REQUIRE(st.group.order() == 6);
  }
}

TEST_CASE("orbit-stabilizer identity for all pairs and objects") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    const ConePair& cp = cat_pair(n);
    ConeSemidirect cs = cone_semidirect(cp);
    int total = cs.s.group.order();
    for (int g = 0; g < cp.g.g0.order(); ++g) {
      // orbit of g under the semidirect action on objects
      std::vector<bool> in_orbit(cp.g.g0.order(), false);
      for (int s = 0; s < total; ++s)
        in_orbit[cs.on_objects.apply(s, g)] = true;
      int orbit = 0;
      for (bool b : in_orbit) orbit += b;
      REQUIRE(orbit * stab_g(cp, cs, g).group.order() == total);
    }
  }
}

TEST_CASE("abelian pairs match the mapping-cone complex model") {
  int abelian_pairs = 0;
  for (const std::string& n : catalog().pair_order) {
    const ConePair& cp = cat_pair(n);
    if (!is_abelian_pair(cp)) continue;
    ++abelian_pairs;
    INFO(n);
    Transcript tr = easy_case_abelian(cone_of_pair(cp));
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
  // TS1, TS2, TS-A, TSA2, TSA3 are the abelian situations in the catalog
  REQUIRE(abelian_pairs == 5);
}

TEST_CASE("discrete pairs match the quotient groupoid of the semidirect "
          "product") {
  int discrete_pairs = 0;
  for (const std::string& n : catalog().pair_order) {
    const ConePair& cp = cat_pair(n);
    if (!is_discrete_pair(cp)) continue;
    ++discrete_pairs;
    INFO(n);
    Transcript tr = easy_case_discrete(cone_of_pair(cp));
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
  // TS2 and TSB2 have trivial degree -1 acting part
  REQUIRE(discrete_pairs == 2);
}

TEST_CASE("easy cases report non-applicability honestly") {
  // the non-abelian, non-discrete pair is outside both easy cases
  const ConePair& cp = cat_pair("TS-C");
  REQUIRE_FALSE(is_abelian_pair(cp));
  REQUIRE_FALSE(is_discrete_pair(cp));
  Transcript tr = easy_case_abelian(cone_of_pair(cp));
  REQUIRE_FALSE(tr.all_ok());
  REQUIRE(tr.lines[0].first == "applicable");
}
