#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "xmodkit/action.hpp"
#include "xmodkit/catalog.hpp"
#include "xmodkit/xcm.hpp"

using namespace xmodkit;

namespace {

// discrete base groupoid (identities only) with a constant group H and the
// trivial boundary: the Peiffer identity then demands H be abelian
XCrossedModule discrete_xcm(int objects, const FiniteGroup& h_group) {
  std::vector<std::vector<int>> sizes(objects, std::vector<int>(objects, 0));
  for (int x = 0; x < objects; ++x) sizes[x][x] = 1;
  Groupoid gamma = Groupoid::make(
      objects, sizes, [](int, int, int, int, int) { return 0; });
  std::vector<FiniteGroup> h(objects, h_group);
  std::vector<std::vector<std::vector<int>>> transport(
      static_cast<std::size_t>(objects) * objects);
  for (int x = 0; x < objects; ++x) {
    auto& id_map = transport[x * objects + x];
    id_map.resize(1);
    id_map[0].resize(h_group.order());
    for (int v = 0; v < h_group.order(); ++v) id_map[0][v] = v;
  }
  std::vector<std::vector<int>> d(objects,
                                  std::vector<int>(h_group.order(), 0));
  return XCrossedModule{gamma, h, transport, d};
}

}  // namespace

TEST_CASE("discrete base with trivial boundary forces abelian fibers") {
  REQUIRE(check_xcm(discrete_xcm(2, cyclic_group(4))).all_ok());
  Transcript bad = check_xcm(discrete_xcm(2, detail::sym3()));
  REQUIRE_FALSE(bad.all_ok());
  bool peiffer_failed = false;
  for (const auto& [label, r] : bad.lines)
    if (label == "peiffer" && !r.ok) {
      peiffer_failed = true;
      REQUIRE(r.witness.find("PeifferFails") == 0);
    }
  REQUIRE(peiffer_failed);
}

TEST_CASE("extraction from a one-object cone recovers the crossed module") {
  for (const std::string& n : {"XM1", "XM2", "XM3", "XM4", "CONJ"}) {
    INFO(n);
    const CrossedModule& xm = catalog().xmods.at(n).xm;
    ExtractedXcm e = extract_xcm(cone_2group(xm).as_two_groupoid());
    REQUIRE(e.xcm.n() == 1);
    REQUIRE(check_xcm(e.xcm).all_ok());
    // the fiber at the point is (g, f: g => id), i.e. pairs (d(gamma)^-1,
    // gamma): isomorphic to gm1
    REQUIRE(e.xcm.h[0].order() == xm.gm1.order());
    REQUIRE(find_isomorphism(e.xcm.h[0], xm.gm1).has_value());
  }
}

TEST_CASE("realization of a trivial-fiber module is discrete over the base") {
  XCrossedModule m = discrete_xcm(3, trivial_group());
  TwoGroupoid t = realize_2groupoid(m);
  REQUIRE(t.n == 3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const Groupoid& h = t.H(x, y);
      for (int a = 0; a < h.num_objects(); ++a)
        for (int a2 = 0; a2 < h.num_objects(); ++a2)
          REQUIRE(h.hom_size(a, a2) == (a == a2 ? 1 : 0));
    }
}

TEST_CASE("round-trip realize(extract(-)) is a strict isomorphism") {
  for (const std::string& n : {"XM1", "XM2", "XM3", "XM4", "CONJ"}) {
    INFO(n);
    const CrossedModule& xm = catalog().xmods.at(n).xm;
    Transcript tr = verify_roundtrip(cone_2group(xm).as_two_groupoid());
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    TwoSidedCone c = cone_of_pair(catalog().pairs.at(n).pair);
    QuotientTwoGroupoid q = quotient_2groupoid(c.action);
    Transcript tr = verify_roundtrip(q.tg);
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
}

TEST_CASE("explicit boundary lands in the stabilizer for every pair") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    const ConePair& cp = catalog().pairs.at(n).pair;
    ExplicitXcm e = explicit_xcm_of_pair(cp);
    ConeSemidirect cs = cone_semidirect(cp);
    for (int g = 0; g < cp.g.g0.order(); ++g) {
      Subgroup st = stab_g(cp, cs, g);
      for (int beta = 0; beta < cp.b.gm1.order(); ++beta) {
        int s = e.d_elem[g][beta];
        REQUIRE(std::binary_search(st.embed.begin(), st.embed.end(), s));
      }
    }
  }
}

TEST_CASE("explicit module matches the extracted one for every pair") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    Transcript tr =
        verify_explicit_xcm(cone_of_pair(catalog().pairs.at(n).pair));
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
}

TEST_CASE("explicit boundary on the one-object pair, by hand") {
  // b = g = (Z/2 over the point): the base groupoid has one object, the
  // fiber is Z/2, and d(beta) = (d_B beta, pi1(beta)^-1 · pi1'(beta))
  //                           = (0, beta^-1 · beta) = identity
  const ConePair& cp = catalog().pairs.at("TS1").pair;
  ExplicitXcm e = explicit_xcm_of_pair(cp);
  REQUIRE(e.xcm.n() == 1);
  REQUIRE(e.xcm.h[0].order() == 2);
  REQUIRE(e.d_elem[0] == std::vector<int>{0, 0});
}

TEST_CASE("alternative boundary formula and centralizing image") {
  for (const std::string& n : catalog().pair_order) {
    INFO(n);
    Transcript tr = verify_boundary_remark(catalog().pairs.at(n).pair);
    REQUIRE(tr.lines.size() == 3);
    for (const auto& [label, r] : tr.lines) {
      INFO(label << ": " << r.witness);
      REQUIRE(r.ok);
    }
  }
}
