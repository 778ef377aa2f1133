#include <catch2/catch_amalgamated.hpp>

#include "xmodkit/catalog.hpp"
#include "xmodkit/groupoid.hpp"

using namespace xmodkit;

namespace {

// the quotient groupoid of Z/2 acting on two points by swapping
QuotientSetGroupoid swap_groupoid() {
  SetAction a = make_set_action(cyclic_group(2), 2, {{0, 1}, {1, 0}});
  return quotient_set_groupoid(a);
}

}  // namespace

TEST_CASE("groupoid construction validates laws") {
  // a one-object groupoid from a group table
  FiniteGroup s3 = detail::sym3();
  Groupoid g = Groupoid::make(1, {{6}}, [&](int, int, int, int b, int a) {
    return s3.mul(b, a);
  });
  REQUIRE(g.hom_size(0, 0) == 6);
  REQUIRE(g.compose(0, 0, 0, 3, 3) == 4);
  REQUIRE(g.inverse(0, 0, 3) == 4);

  // broken composition (projection onto the first argument) is rejected
  REQUIRE_THROWS_AS(
      Groupoid::make(1, {{2}}, [](int, int, int, int b, int) { return b; }),
      ValidationError);
  // a hom set without an identity slot is rejected
  REQUIRE_THROWS_AS(Groupoid::make(1, {{0}},
                                   [](int, int, int, int, int) { return 0; }),
                    ValidationError);
}

TEST_CASE("quotient groupoid of a set action") {
  QuotientSetGroupoid q = swap_groupoid();
  REQUIRE(q.groupoid.num_objects() == 2);
  REQUIRE(q.groupoid.hom_size(0, 0) == 1);
  REQUIRE(q.groupoid.hom_size(0, 1) == 1);
  REQUIRE(q.element_of(0, 1, 0) == 1);
  REQUIRE(q.token_of(0, 0, 0) == 0);
  REQUIRE(q.token_of(0, 0, 1) == -1);

  // trivial action: four isolated points with stabilizer Z/2 each
  SetAction tr = make_set_action(cyclic_group(2), 4,
                                 {{0, 1, 2, 3}, {0, 1, 2, 3}});
  QuotientSetGroupoid qt = quotient_set_groupoid(tr);
  REQUIRE(pi0(qt.groupoid).num_classes() == 4);
  REQUIRE(aut_group(qt.groupoid, 0).order() == 2);
}

TEST_CASE("connected components and automorphism groups") {
  QuotientSetGroupoid q = swap_groupoid();
  Partition p = pi0(q.groupoid);
  REQUIRE(p.num_classes() == 1);
  REQUIRE(p.reps == std::vector<int>{0});
  REQUIRE(aut_group(q.groupoid, 0).order() == 1);

  // S3 acting on 3 points by evaluation: one component, stabilizer order 2
  FiniteGroup s3 = detail::sym3();
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  SetAction ev = make_set_action(s3, 3, perms);
  QuotientSetGroupoid qe = quotient_set_groupoid(ev);
  REQUIRE(pi0(qe.groupoid).num_classes() == 1);
  REQUIRE(aut_group(qe.groupoid, 0).order() == 2);
  // every hom set in a transitive action groupoid has stabilizer size
  REQUIRE(qe.groupoid.hom_size(0, 1) == 2);
  REQUIRE(qe.groupoid.total_morphisms() == 3 * 3 * 2);
}

TEST_CASE("functors, equivalences, gerbes") {
  QuotientSetGroupoid q = swap_groupoid();
  GroupoidFunctor id = identity_functor(q.groupoid);
  REQUIRE(is_equivalence(id).ok);

  // collapse onto the one-object one-morphism groupoid
  Groupoid pt = Groupoid::make(1, {{1}},
                               [](int, int, int, int, int) { return 0; });
  int n = q.groupoid.num_objects();
  std::vector<std::vector<int>> mor_map(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mor_map[x * n + y].assign(q.groupoid.hom_size(x, y), 0);
  GroupoidFunctor collapse =
      make_functor(q.groupoid, pt, std::vector<int>(n, 0), mor_map);
  // connected with trivial automorphisms: an equivalence, hence a gerbe
  REQUIRE(is_equivalence(collapse).ok);
  REQUIRE(is_gerbe(collapse).ok);

  // a non-full functor is not a gerbe: discrete 2 points over the point
  SetAction tr1 = make_set_action(trivial_group(), 2, {{0, 1}});
  QuotientSetGroupoid disc = quotient_set_groupoid(tr1);
  std::vector<std::vector<int>> mm(4);
  mm[0] = {0};
  mm[3] = {0};
  GroupoidFunctor f = make_functor(disc.groupoid, pt, {0, 0}, mm);
  REQUIRE_FALSE(is_gerbe(f).ok);
  REQUIRE_FALSE(is_equivalence(f).ok);
}

TEST_CASE("functor validation rejects non-functorial data") {
  FiniteGroup c2 = cyclic_group(2);
  Groupoid g2 = Groupoid::make(1, {{2}}, [&](int, int, int, int b, int a) {
    return c2.mul(b, a);
  });
  // swapping the tokens does not preserve the identity
  REQUIRE_THROWS_AS(make_functor(g2, g2, {0}, {{1, 0}}), ValidationError);
  REQUIRE_NOTHROW(make_functor(g2, g2, {0}, {{0, 1}}));

  FiniteGroup c4 = cyclic_group(4);
  Groupoid g4 = Groupoid::make(1, {{4}}, [&](int, int, int, int b, int a) {
    return c4.mul(b, a);
  });
  // reduction mod 2 as raw tokens is identity-preserving but breaks
  // composition in the 4-token groupoid
  REQUIRE_THROWS_AS(make_functor(g4, g4, {0}, {{0, 1, 0, 1}}),
                    ValidationError);
}
