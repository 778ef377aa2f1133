#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "xmodkit/instance.hpp"

namespace xmodkit {

namespace detail {

/// The symmetric group on three letters with elements the six permutations
/// of {0,1,2} in lexicographic order and product (a*b)(i) = a(b(i)).
inline FiniteGroup sym3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) -
                            perms.begin());
  };
  std::vector<int> flat(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      flat[a * 6 + b] = index_of(c);
    }
  return make_group(6, flat);
}

inline AutoAction trivial_action_of(const FiniteGroup& actor,
                                    const FiniteGroup& acted) {
  std::vector<int> id(acted.order());
  for (int i = 0; i < acted.order(); ++i) id[i] = i;
  return make_auto_action(
      actor, acted, std::vector<std::vector<int>>(actor.order(), id));
}

inline AutoAction conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<int>> perms(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) perms[a][x] = g.conj(a, x);
  return make_auto_action(g, g, perms);
}

/// Conjugation of g0 on the image of an injective hom, transported back to
/// the source: perms[a][x] = embed^{-1}( a · embed(x) · a^{-1} ).
inline AutoAction conjugation_via(const FiniteGroup& g0, const GroupHom& embed) {
  const FiniteGroup& sub = embed.source;
  std::vector<std::vector<int>> perms(g0.order(),
                                      std::vector<int>(sub.order(), -1));
  for (int a = 0; a < g0.order(); ++a)
    for (int x = 0; x < sub.order(); ++x) {
      int img = g0.conj(a, embed.apply(x));
      for (int y = 0; y < sub.order(); ++y)
        if (embed.apply(y) == img) perms[a][x] = y;
      if (perms[a][x] < 0)
        throw ValidationError("BadAction", "image not closed under "
                                           "conjugation");
    }
  return make_auto_action(g0, sub, perms);
}

}  // namespace detail

/// The built-in instance catalog, addressable as @catalog from the CLI.
///
/// Crossed modules:
///   XM1   Z/2 --0--> Z/2, trivial action
///   XM2   Z/2 --1->2--> Z/4, trivial action
///   XM3   Z/3 embedded as the rotation subgroup of the order-6 symmetric
///         group S3, conjugation action
///   XM4   Z/2 --> 1 (one-object, two-automorphism situation)
///   CONJ  S3 --id--> S3, conjugation action
/// Pairs (two-sided situations):
///   TS1   b = g = XM4, pi = pi' = id          (abelian, one object)
///   TS2   b = (1 -> Z/2), g = XM1, pi0 = id, pi0' = 0   (discrete 2-cells)
///   TS-A  b = g = XM1, pi = id, pi' = 0       (abelian)
///   TSA2  b = g = XM2, pi = id, pi' = 0       (abelian)
///   TSA3  b = XM1, g = XM2, pi = (1->2, 0), pi' = 0     (abelian)
///   TSB2  b = (1 -> S3), g = CONJ, pi = pi' = (id, 0)   (discrete 2-cells)
///   TS-C  b = g = CONJ, pi = pi' = id         (non-abelian stress instance)
inline const Instance& catalog() {
  static const Instance ins = [] {
    Instance c;
    auto add_group = [&](const std::string& n, const FiniteGroup& g) {
      c.groups.emplace(n, g);
      c.group_order.push_back(n);
    };
    auto add_hom = [&](const std::string& n, const std::string& from,
                       const std::string& to, const GroupHom& h) {
      c.homs.emplace(n, Instance::NamedHom{from, to, h});
      c.hom_order.push_back(n);
    };
    auto add_action = [&](const std::string& n, const std::string& of,
                          const std::string& on, const AutoAction& a) {
      c.actions.emplace(n, Instance::NamedAction{of, on, a});
      c.action_order.push_back(n);
    };
    auto add_xmod = [&](const std::string& n, const std::string& g0,
                        const std::string& gm1, const std::string& d,
                        const std::string& act) {
      CrossedModule xm = make_crossed_module(c.groups.at(g0),
                                             c.groups.at(gm1),
                                             c.homs.at(d).hom,
                                             c.actions.at(act).act);
      c.xmods.emplace(n, Instance::NamedXmod{g0, gm1, d, act, std::move(xm)});
      c.xmod_order.push_back(n);
    };
    auto add_pair = [&](const std::string& n, const std::string& b,
                        const std::string& g, const std::string& p0,
                        const std::string& p1, const std::string& q0,
                        const std::string& q1) {
      const CrossedModule& xb = c.xmods.at(b).xm;
      const CrossedModule& xg = c.xmods.at(g).xm;
      XModHom pi =
          make_xmod_hom(xb, xg, c.homs.at(p0).hom, c.homs.at(p1).hom);
      XModHom pip =
          make_xmod_hom(xb, xg, c.homs.at(q0).hom, c.homs.at(q1).hom);
      ConePair cp = make_cone_pair(xb, xg, pi, pip);
      c.pairs.emplace(n,
                      Instance::NamedPair{b, g, p0, p1, q0, q1, std::move(cp)});
      c.pair_order.push_back(n);
    };

    add_group("T", trivial_group());
    add_group("C2", cyclic_group(2));
    add_group("C3", cyclic_group(3));
    add_group("C4", cyclic_group(4));
    add_group("S3", detail::sym3());

    const FiniteGroup& t = c.groups.at("T");
    const FiniteGroup& c2 = c.groups.at("C2");
    const FiniteGroup& c3 = c.groups.at("C3");
    const FiniteGroup& c4 = c.groups.at("C4");
    const FiniteGroup& s3 = c.groups.at("S3");

    add_hom("idT", "T", "T", identity_hom(t));
    add_hom("zC2_C2", "C2", "C2", zero_hom(c2, c2));
    add_hom("idC2", "C2", "C2", identity_hom(c2));
    add_hom("zT_C2", "T", "C2", zero_hom(t, c2));
    add_hom("zC2_T", "C2", "T", zero_hom(c2, t));
    add_hom("dC2_C4", "C2", "C4", make_hom(c2, c4, {0, 2}));
    add_hom("zC2_C4", "C2", "C4", zero_hom(c2, c4));
    add_hom("idC4", "C4", "C4", identity_hom(c4));
    add_hom("zC4_C4", "C4", "C4", zero_hom(c4, c4));
    // the rotation subgroup {identity, (0 1 2), (0 2 1)} of S3
    add_hom("dC3_S3", "C3", "S3", make_hom(c3, s3, {0, 3, 4}));
    add_hom("idS3", "S3", "S3", identity_hom(s3));
    add_hom("zS3_S3", "S3", "S3", zero_hom(s3, s3));
    add_hom("zT_S3", "T", "S3", zero_hom(t, s3));

    add_action("trC2_C2", "C2", "C2", detail::trivial_action_of(c2, c2));
    add_action("trC4_C2", "C4", "C2", detail::trivial_action_of(c4, c2));
    add_action("trT_C2", "T", "C2", detail::trivial_action_of(t, c2));
    add_action("trC2_T", "C2", "T", detail::trivial_action_of(c2, t));
    add_action("trS3_T", "S3", "T", detail::trivial_action_of(s3, t));
    add_action("cjS3_C3", "S3", "C3",
               detail::conjugation_via(s3, c.homs.at("dC3_S3").hom));
    add_action("cjS3_S3", "S3", "S3", detail::conjugation_action(s3));

    add_xmod("XM1", "C2", "C2", "zC2_C2", "trC2_C2");
    add_xmod("XM2", "C4", "C2", "dC2_C4", "trC4_C2");
    add_xmod("XM3", "S3", "C3", "dC3_S3", "cjS3_C3");
    add_xmod("XM4", "T", "C2", "zC2_T", "trT_C2");
    add_xmod("CONJ", "S3", "S3", "idS3", "cjS3_S3");
    // degree -1 trivial actors for the discrete situations
    add_xmod("DB1", "C2", "T", "zT_C2", "trC2_T");
    add_xmod("DB2", "S3", "T", "zT_S3", "trS3_T");

    add_pair("TS1", "XM4", "XM4", "idT", "idC2", "idT", "idC2");
    add_pair("TS2", "DB1", "XM1", "idC2", "zT_C2", "zC2_C2", "zT_C2");
    add_pair("TS-A", "XM1", "XM1", "idC2", "idC2", "zC2_C2", "zC2_C2");
    add_pair("TSA2", "XM2", "XM2", "idC4", "idC2", "zC4_C4", "zC2_C2");
    add_pair("TSA3", "XM1", "XM2", "dC2_C4", "zC2_C2", "zC2_C4", "zC2_C2");
    add_pair("TSB2", "DB2", "CONJ", "idS3", "zT_S3", "idS3", "zT_S3");
    add_pair("TS-C", "CONJ", "CONJ", "idS3", "idS3", "idS3", "idS3");
    return c;
  }();
  return ins;
}

}  // namespace xmodkit
