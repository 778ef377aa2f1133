#include <catch2/catch_amalgamated.hpp>

#include "xmodkit/action.hpp"
#include "xmodkit/catalog.hpp"
#include "xmodkit/cone_pair.hpp"

using namespace xmodkit;

namespace {

// one object whose automorphism group is Z/2
Groupoid two_auto_point() {
  FiniteGroup c2 = cyclic_group(2);
  return Groupoid::make(1, {{2}}, [&](int, int, int, int b, int a) {
    return c2.mul(b, a);
  });
}

// the crossed module Z/2 -> 1 acting on the point: the degree -1 generator
// acts by the order-2 automorphism
StrictAction order_two_point_action() {
  const CrossedModule& xm4 = catalog().xmods.at("XM4").xm;
  Groupoid space = two_auto_point();
  std::vector<std::vector<int>> obj_act = {{0}};
  std::vector<std::vector<std::vector<int>>> mor_act = {{{0, 1}}};
  std::vector<std::vector<int>> tau = {{0}, {1}};
  return make_strict_action(xm4, space, obj_act, mor_act, tau);
}

}  // namespace

TEST_CASE("trivial strict action on a quotient-set groupoid") {
  SetAction sa = make_set_action(cyclic_group(2), 2, {{0, 1}, {1, 0}});
  Groupoid space = quotient_set_groupoid(sa).groupoid;
  StrictAction a = trivial_strict_action(space);
  QuotientTwoGroupoid q = quotient_2groupoid(a);
  // the quotient by the trivial 2-group adds nothing: same 1-morphisms,
  // only identity 2-cells
  REQUIRE(q.n() == 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      REQUIRE(static_cast<int>(q.one[x * 2 + y].size()) ==
              space.hom_size(x, y));
      for (const auto& row : q.two[x * 2 + y])
        for (const auto& cells : row)
          REQUIRE(static_cast<int>(cells.size()) <= 1);
    }
  for (int x = 0; x < 2; ++x) REQUIRE(verify_proposition(q, x).all_ok());
  CanonicalTruncation ct = canonical_truncation_functor(q);
  REQUIRE(ct.checks.all_ok());
  for (int x = 0; x < 2; ++x) REQUIRE(verify_corollary(ct, x).all_ok());
  REQUIRE(verify_banding(ct).all_ok());
}

TEST_CASE("order-two action of a one-object 2-group on the point") {
  StrictAction a = order_two_point_action();
  QuotientTwoGroupoid q = quotient_2groupoid(a);
  REQUIRE(q.n() == 1);
  // 1-morphisms: (unit of B0, f) for both automorphisms f
  REQUIRE(q.one[0].size() == 2);
  REQUIRE(verify_proposition(q, 0).all_ok());

  // phi at the point is the isomorphism Z/2 -> Aut(point)
  PhiAt phi = phi_at(a, 0);
  REQUIRE(phi.pi1.group.order() == 2);
  REQUIRE(phi.hom.map == std::vector<int>{0, 1});
  REQUIRE(kernel_of(phi.hom).group.order() == 1);
  REQUIRE(coker_central(phi.hom).group.order() == 1);

  CanonicalTruncation ct = canonical_truncation_functor(q);
  REQUIRE(ct.checks.all_ok());
  REQUIRE(verify_corollary(ct, 0).all_ok());
  // the truncation collapses both automorphisms: its aut group is trivial
  REQUIRE(aut_group(ct.trunc.gpd, 0).order() == 1);
  REQUIRE(verify_banding(ct).all_ok());
}

TEST_CASE("action axioms are enforced") {
  const CrossedModule& xm4 = catalog().xmods.at("XM4").xm;
  Groupoid space = two_auto_point();
  std::vector<std::vector<int>> obj_act = {{0}};
  std::vector<std::vector<std::vector<int>>> mor_act = {{{0, 1}}};
  // tau that is not a homomorphism into Aut: gamma=1 twice must give the
  // identity, but tau_1 ∘ tau_1 = id holds; instead break unit: tau_0 = 1
  std::vector<std::vector<int>> bad_tau = {{1}, {1}};
  REQUIRE_THROWS_AS(
      make_strict_action(xm4, space, obj_act, mor_act, bad_tau),
      ValidationError);
  try {
    make_strict_action(xm4, space, obj_act, mor_act, bad_tau);
  } catch (const ValidationError& e) {
    REQUIRE(e.kind() == "ActionAxiomFails");
  }
}

TEST_CASE("proposition and corollary hold for all two-sided actions") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    TwoSidedCone c = cone_of_pair(catalog().pairs.at(n).pair);
    QuotientTwoGroupoid q = quotient_2groupoid(c.action);
    CanonicalTruncation ct = canonical_truncation_functor(q);
    REQUIRE(ct.checks.all_ok());
    for (int x = 0; x < q.n(); ++x) {
      REQUIRE(verify_proposition(q, x).all_ok());
      REQUIRE(verify_corollary(ct, x).all_ok());
    }
  }
}

TEST_CASE("kernel and band oracles for specific pairs") {
  // b = g = (Z/2 over the point), pi = pi' = id: phi is the zero map
  // Z/2 -> Aut = 1, so pi2 = Z/2 and the band has order 2
  {
    TwoSidedCone c = cone_of_pair(catalog().pairs.at("TS1").pair);
    QuotientTwoGroupoid q = quotient_2groupoid(c.action);
    PhiAt phi = phi_at(q.action, 0);
    REQUIRE(kernel_of(phi.hom).group.order() == 2);
    REQUIRE(coker_central(phi.hom).group.order() == 2);
  }
  // TS2 has trivial degree -1 actor, so phi has trivial source and the
  // band equals Aut of the space point, of order 2
  {
    TwoSidedCone c = cone_of_pair(catalog().pairs.at("TS2").pair);
    QuotientTwoGroupoid q = quotient_2groupoid(c.action);
    PhiAt phi = phi_at(q.action, 0);
    REQUIRE(phi.pi1.group.order() == 1);
    REQUIRE(coker_central(phi.hom).group.order() == 2);
  }
}

TEST_CASE("banding passes for every catalog pair") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    TwoSidedCone c = cone_of_pair(catalog().pairs.at(n).pair);
    CanonicalTruncation ct =
        canonical_truncation_functor(quotient_2groupoid(c.action));
    Transcript tr = verify_banding(ct);
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
}

TEST_CASE("morphism budget is enforced") {
  // the environment cap applies to every exhaustive construction
  setenv("XMODKIT_MAX_ORDER", "3", 1);
  SetAction sa = make_set_action(cyclic_group(2), 2, {{0, 1}, {1, 0}});
  REQUIRE_THROWS_AS(quotient_set_groupoid(sa), ValidationError);
  unsetenv("XMODKIT_MAX_ORDER");
  REQUIRE_NOTHROW(quotient_set_groupoid(sa));
}
