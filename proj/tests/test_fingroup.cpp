#include <catch2/catch_amalgamated.hpp>

#include "xmodkit/catalog.hpp"
#include "xmodkit/fingroup.hpp"

using namespace xmodkit;

TEST_CASE("multiplication table validation") {
  REQUIRE_NOTHROW(make_group(2, {0, 1, 1, 0}));
  // identity must sit at index 0
  REQUIRE_THROWS_AS(make_group(2, {1, 0, 0, 1}), ValidationError);
  // non-associative magma: a*a = identity for every a on three elements
  REQUIRE_THROWS_AS(make_group(3, {0, 1, 2, 1, 0, 0, 2, 0, 0}),
                    ValidationError);
  REQUIRE_THROWS_AS(make_group(2, {0, 1, 1}), ValidationError);
}

TEST_CASE("cyclic group structure") {
  FiniteGroup c6 = cyclic_group(6);
  REQUIRE(c6.order() == 6);
  REQUIRE(c6.mul(4, 5) == 3);
  REQUIRE(c6.inv(2) == 4);
  REQUIRE(c6.element_order(2) == 3);
  REQUIRE(c6.is_abelian());
}

TEST_CASE("symmetric group on three letters") {
  FiniteGroup s3 = detail::sym3();
  REQUIRE(s3.order() == 6);
  REQUIRE_FALSE(s3.is_abelian());
  // element orders: identity, three transpositions, two rotations
  std::vector<int> orders;
  for (int a = 0; a < 6; ++a) orders.push_back(s3.element_order(a));
  std::sort(orders.begin(), orders.end());
  REQUIRE(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
  // lexicographic listing puts the rotations at indices 3 and 4
  REQUIRE(s3.mul(3, 3) == 4);
  REQUIRE(s3.inv(3) == 4);
}

TEST_CASE("homs, kernel, image, cokernel") {
  FiniteGroup c4 = cyclic_group(4);
  FiniteGroup c2 = cyclic_group(2);
  GroupHom d = make_hom(c2, c4, {0, 2});
  REQUIRE(kernel_of(d).group.order() == 1);
  REQUIRE(image_elements(d) == std::vector<int>{0, 2});
  Quotient q = coker_central(d);
  REQUIRE(q.group.order() == 2);
  REQUIRE(q.project[1] == q.project[3]);
  REQUIRE(q.project[0] == q.project[2]);
  REQUIRE(q.project[0] != q.project[1]);

  GroupHom z = zero_hom(c4, c2);
  REQUIRE(kernel_of(z).group.order() == 4);
  REQUIRE_THROWS_AS(make_hom(c4, c2, {0, 1, 1, 1}), ValidationError);
}

TEST_CASE("quotient by a normal subgroup") {
  FiniteGroup s3 = detail::sym3();
  // rotation subgroup {0, 3, 4} is normal of index 2
  Quotient q = quotient_by_normal(s3, {0, 3, 4});
  REQUIRE(q.group.order() == 2);
  REQUIRE(q.project[0] == 0);
  REQUIRE(q.project[3] == 0);
  REQUIRE(q.project[1] == 1);
  // a transposition does not generate a normal subgroup
  REQUIRE_THROWS_AS(quotient_by_normal(s3, {0, 1}), ValidationError);
}

TEST_CASE("semidirect products") {
  FiniteGroup c2 = cyclic_group(2);
  FiniteGroup c3 = cyclic_group(3);
  // C2 acting on C3 by inversion gives the order-6 symmetric group
  AutoAction invert = make_auto_action(c2, c3, {{0, 1, 2}, {0, 2, 1}});
  SemidirectProduct s = semidirect_product(c2, c3, invert);
  REQUIRE(s.group.order() == 6);
  REQUIRE_FALSE(s.group.is_abelian());
  REQUIRE(find_isomorphism(s.group, detail::sym3()).has_value());
  // trivial action gives the abelian direct product
  SemidirectProduct d = direct_product(c2, c3);
  REQUIRE(d.group.is_abelian());
  REQUIRE(find_isomorphism(d.group, cyclic_group(6)).has_value());
  // projection to the first factor is a hom with kernel the second factor
  GroupHom pb = semidirect_project_b(s, c2);
  REQUIRE(kernel_of(pb).group.order() == 3);
}

TEST_CASE("isomorphism search distinguishes groups") {
  FiniteGroup c4 = cyclic_group(4);
  SemidirectProduct klein = direct_product(cyclic_group(2), cyclic_group(2));
  REQUIRE_FALSE(find_isomorphism(c4, klein.group).has_value());
  REQUIRE(find_isomorphism(c4, cyclic_group(4)).has_value());
  REQUIRE_FALSE(
      find_isomorphism(detail::sym3(), cyclic_group(6)).has_value());
}

TEST_CASE("abelian invariants") {
  REQUIRE(abelian_invariants(cyclic_group(4)) == std::vector<int>{4});
  SemidirectProduct klein = direct_product(cyclic_group(2), cyclic_group(2));
  REQUIRE(abelian_invariants(klein.group) == std::vector<int>{2, 2});
  SemidirectProduct z6 = direct_product(cyclic_group(2), cyclic_group(3));
  REQUIRE(abelian_invariants(z6.group) == std::vector<int>{6});
  REQUIRE(abelian_invariants(trivial_group()).empty());
}

TEST_CASE("subgroup from elements") {
  FiniteGroup s3 = detail::sym3();
  Subgroup rot = subgroup_from_elements(s3, {0, 3, 4});
  REQUIRE(rot.group.order() == 3);
  REQUIRE(rot.group.is_abelian());
  // not closed under multiplication
  REQUIRE_THROWS_AS(subgroup_from_elements(s3, {0, 1, 2}), ValidationError);
}
