#include <catch2/catch_amalgamated.hpp>

#include "xmodkit/catalog.hpp"
#include "xmodkit/instance.hpp"

using namespace xmodkit;

TEST_CASE("parses the documented declarations") {
  Instance ins = parse_instance(
      "# a comment line\n"
      "group C2 order 2 table 0 1 1 0\n"
      "hom z from C2 to C2 map 0 0   # trailing comment\n"
      "action tr of C2 on C2 perms 0 1 0 1\n"
      "xmod M g0 C2 gm1 C2 d z act tr\n");
  REQUIRE(ins.groups.at("C2").order() == 2);
  REQUIRE(ins.homs.at("z").hom.map == std::vector<int>{0, 0});
  REQUIRE(ins.actions.at("tr").act.apply(1, 1) == 1);
  REQUIRE(check_xmod(ins.xmods.at("M").xm).all_ok());
}

TEST_CASE("parses a pair declaration") {
  Instance ins = parse_instance(
      "group C2 order 2 table 0 1 1 0\n"
      "hom z from C2 to C2 map 0 0\n"
      "hom i from C2 to C2 map 0 1\n"
      "action tr of C2 on C2 perms 0 1 0 1\n"
      "xmod M g0 C2 gm1 C2 d z act tr\n"
      "pair P b M g M pi0 i pi1 i pi0' z pi1' z\n");
  REQUIRE(ins.pairs.count("P") == 1);
  REQUIRE(ins.pairs.at("P").pair.pi.h0.map == std::vector<int>{0, 1});
}

TEST_CASE("syntax errors carry the line number") {
  auto expect_kind = [](const std::string& text, const std::string& kind,
                        const std::string& fragment) {
    try {
      parse_instance(text);
      FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
      REQUIRE(e.kind() == kind);
      INFO(e.what());
      REQUIRE(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_kind("group G order 2 table 0 1 1\n", "Syntax", "line 1");
  expect_kind("widget W\n", "Syntax", "unknown declaration");
  expect_kind("group G order 2 table 0 1 1 0\n\nhom h from G to X map 0 0\n",
              "Unresolved", "line 3");
  // a duplicate name is a syntax error on the second declaration
  expect_kind("group G order 1 table 0\ngroup G order 1 table 0\n", "Syntax",
              "duplicate name");
  // a bad table is a validation error naming the declaration
  expect_kind("group G order 2 table 0 1 1 1\n", "Validation", "'G'");
  // a non-homomorphism map is a validation error
  expect_kind("group G order 2 table 0 1 1 0\nhom h from G to G map 0 0\n"
              "hom k from G to G map 1 0\n",
              "Validation", "line 3");
}

TEST_CASE("print then parse is the identity") {
  std::string text =
      "group C2 order 2 table 0 1 1 0\n"
      "hom z from C2 to C2 map 0 0\n"
      "action tr of C2 on C2 perms 0 1 0 1\n"
      "xmod M g0 C2 gm1 C2 d z act tr\n"
      "pair P b M g M pi0 z pi1 z pi0' z pi1' z\n";
  Instance ins = parse_instance(text);
  std::string printed = print_instance(ins);
  Instance again = parse_instance(printed);
  REQUIRE(print_instance(again) == printed);
  REQUIRE(again.groups.at("C2").flat_table() ==
          ins.groups.at("C2").flat_table());
  REQUIRE(again.pair_order == ins.pair_order);
}

TEST_CASE("catalog round-trips through the textual format") {
  std::string printed = print_instance(catalog());
  Instance again = parse_instance(printed);
  REQUIRE(print_instance(again) == printed);
  REQUIRE(again.xmod_order == catalog().xmod_order);
  REQUIRE(again.pair_order == catalog().pair_order);
  for (const std::string& n : catalog().group_order)
    REQUIRE(again.groups.at(n) == catalog().groups.at(n));
}

TEST_CASE("catalog contents") {
  const Instance& c = catalog();
  REQUIRE(c.xmods.count("XM1") == 1);
  REQUIRE(c.xmods.count("XM2") == 1);
  REQUIRE(c.xmods.count("XM3") == 1);
  REQUIRE(c.xmods.count("XM4") == 1);
  REQUIRE(c.xmods.count("CONJ") == 1);
  REQUIRE(c.pairs.count("TS1") == 1);
  REQUIRE(c.pairs.count("TS2") == 1);
  REQUIRE(c.pairs.count("TS-A") == 1);
  REQUIRE(c.pairs.count("TS-C") == 1);
  // the conjugation module: identity boundary on the order-6 group
  const CrossedModule& conj = c.xmods.at("CONJ").xm;
  REQUIRE(conj.g0.order() == 6);
  REQUIRE_FALSE(conj.g0.is_abelian());
  REQUIRE(conj.d.map == std::vector<int>{0, 1, 2, 3, 4, 5});
  // and TS-C uses it with identity morphisms on both sides
  const Instance::NamedPair& tsc = c.pairs.at("TS-C");
  REQUIRE(tsc.b == "CONJ");
  REQUIRE(tsc.g == "CONJ");
}
