#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "xmodkit/core.hpp"
#include "xmodkit/crossed_module.hpp"
#include "xmodkit/fingroup.hpp"
#include "xmodkit/groupoid.hpp"
#include "xmodkit/two_groupoid.hpp"

namespace xmodkit {

/// A strict action of the 2-group Cone(actor) on a groupoid: g0 acts by
/// groupoid automorphisms, and each gamma in gm1 gives a natural family
/// tau_gamma(x): x -> d(gamma)·x subject to unit, cocycle, naturality and
/// equivariance axioms. All five axiom families are verified at
/// construction.
struct StrictAction {
  CrossedModule actor;
  Groupoid space;
  std::vector<std::vector<int>> obj_act;               // [g][x]
  std::vector<std::vector<std::vector<int>>> mor_act;  // [g][x*n+y][token]
  std::vector<std::vector<int>> tau;  // [gamma][x]: token in mor(x, d(gamma)·x)

  int act_obj(int g, int x) const { return obj_act[g][x]; }
  int act_mor(int g, int x, int y, int t) const {
    return mor_act[g][x * space.num_objects() + y][t];
  }
  int tau_at(int gamma, int x) const { return tau[gamma][x]; }
};

inline StrictAction make_strict_action(
    const CrossedModule& actor, const Groupoid& space,
    const std::vector<std::vector<int>>& obj_act,
    const std::vector<std::vector<std::vector<int>>>& mor_act,
    const std::vector<std::vector<int>>& tau) {
  StrictAction a{actor, space, obj_act, mor_act, tau};
  int n = space.num_objects();
  auto axiom_fail = [](const std::string& axiom, const std::string& w) {
    throw ValidationError("ActionAxiomFails", axiom + ": " + w);
  };

  // shape checks
  if (static_cast<int>(obj_act.size()) != actor.g0.order() ||
      static_cast<int>(mor_act.size()) != actor.g0.order() ||
      static_cast<int>(tau.size()) != actor.gm1.order())
    throw ValidationError("BadAction", "field sizes mismatch");

  // obj_act is an action of g0 on objects
  for (int x = 0; x < n; ++x)
    if (a.act_obj(0, x) != x) axiom_fail("unit-object", std::to_string(x));
  for (int g = 0; g < actor.g0.order(); ++g)
    for (int h = 0; h < actor.g0.order(); ++h)
      for (int x = 0; x < n; ++x)
        if (a.act_obj(actor.g0.mul(g, h), x) != a.act_obj(g, a.act_obj(h, x)))
          axiom_fail("object-action",
                     "(g=" + std::to_string(g) + ", h=" + std::to_string(h) +
                         ", x=" + std::to_string(x) + ")");

  // each g acts as a functor (identities + composition), and mor_act is a
  // homomorphism into Aut(space)
  for (int g = 0; g < actor.g0.order(); ++g) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (static_cast<int>(mor_act[g][x * n + y].size()) !=
            space.hom_size(x, y))
          throw ValidationError("BadAction", "morphism action size mismatch");
        for (int t : mor_act[g][x * n + y])
          if (t < 0 || t >= space.hom_size(a.act_obj(g, x), a.act_obj(g, y)))
            throw ValidationError("BadAction",
                                  "morphism action out of range");
      }
    for (int x = 0; x < n; ++x)
      if (a.act_mor(g, x, x, 0) != 0)
        axiom_fail("functor-identity",
                   "(g=" + std::to_string(g) + ", x=" + std::to_string(x) +
                       ")");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int b = 0; b < space.hom_size(y, z); ++b)
            for (int c = 0; c < space.hom_size(x, y); ++c) {
              int lhs = a.act_mor(g, x, z, space.compose(x, y, z, b, c));
              int rhs = space.compose(a.act_obj(g, x), a.act_obj(g, y),
                                      a.act_obj(g, z), a.act_mor(g, y, z, b),
                                      a.act_mor(g, x, y, c));
              if (lhs != rhs)
                axiom_fail("functor-composition",
                           "(g=" + std::to_string(g) + ")");
            }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int t = 0; t < space.hom_size(x, y); ++t)
        if (a.act_mor(0, x, y, t) != t)
          axiom_fail("unit-morphism",
                     "(" + std::to_string(x) + "->" + std::to_string(y) +
                         ", token " + std::to_string(t) + ")");
  for (int g = 0; g < actor.g0.order(); ++g)
    for (int h = 0; h < actor.g0.order(); ++h)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int t = 0; t < space.hom_size(x, y); ++t)
            if (a.act_mor(actor.g0.mul(g, h), x, y, t) !=
                a.act_mor(g, a.act_obj(h, x), a.act_obj(h, y),
                          a.act_mor(h, x, y, t)))
              axiom_fail("action-homomorphism",
                         "(g=" + std::to_string(g) + ", h=" +
                             std::to_string(h) + ")");

  // tau shape: tau_gamma(x) lands in mor(x, d(gamma)·x)
  for (int gamma = 0; gamma < actor.gm1.order(); ++gamma) {
    if (static_cast<int>(tau[gamma].size()) != n)
      throw ValidationError("BadAction", "tau size mismatch");
    for (int x = 0; x < n; ++x) {
      int tgt = a.act_obj(actor.d.apply(gamma), x);
      if (tau[gamma][x] < 0 || tau[gamma][x] >= space.hom_size(x, tgt))
        throw ValidationError("BadAction",
                              "tau out of range at (gamma=" +
                                  std::to_string(gamma) + ", x=" +
                                  std::to_string(x) + ")");
    }
  }

  // unit: tau_1(x) = id
  for (int x = 0; x < n; ++x)
    if (a.tau_at(0, x) != 0) axiom_fail("tau-unit", "x=" + std::to_string(x));

  // cocycle: tau_{γγ'}(x) = tau_γ(d(γ')·x) ∘ tau_{γ'}(x)
  for (int g1 = 0; g1 < actor.gm1.order(); ++g1)
    for (int g2 = 0; g2 < actor.gm1.order(); ++g2)
      for (int x = 0; x < n; ++x) {
        int mid = a.act_obj(actor.d.apply(g2), x);
        int end = a.act_obj(actor.d.apply(actor.gm1.mul(g1, g2)), x);
        int rhs = space.compose(x, mid, end, a.tau_at(g1, mid),
                                a.tau_at(g2, x));
        if (a.tau_at(actor.gm1.mul(g1, g2), x) != rhs)
          axiom_fail("tau-cocycle",
                     "(gamma=" + std::to_string(g1) + ", gamma'=" +
                         std::to_string(g2) + ", x=" + std::to_string(x) +
                         ")");
      }

  // naturality: tau_γ(y) ∘ ψ = (d(γ)·ψ) ∘ tau_γ(x)
  for (int gamma = 0; gamma < actor.gm1.order(); ++gamma) {
    int dg = actor.d.apply(gamma);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int psi = 0; psi < space.hom_size(x, y); ++psi) {
          int gx = a.act_obj(dg, x), gy = a.act_obj(dg, y);
          int lhs = space.compose(x, y, gy, a.tau_at(gamma, y), psi);
          int rhs = space.compose(x, gx, gy, a.act_mor(dg, x, y, psi),
                                  a.tau_at(gamma, x));
          if (lhs != rhs)
            axiom_fail("tau-naturality",
                       "(gamma=" + std::to_string(gamma) + ", psi: " +
                           std::to_string(x) + "->" + std::to_string(y) +
                           " token " + std::to_string(psi) + ")");
        }
  }

  // equivariance: g·tau_γ(x) = tau_{^g γ}(g·x)
  for (int g = 0; g < actor.g0.order(); ++g)
    for (int gamma = 0; gamma < actor.gm1.order(); ++gamma)
      for (int x = 0; x < n; ++x) {
        int tgt = a.act_obj(actor.d.apply(gamma), x);
        int lhs = a.act_mor(g, x, tgt, a.tau_at(gamma, x));
        int rhs = a.tau_at(actor.act_on(g, gamma), a.act_obj(g, x));
        if (lhs != rhs)
          axiom_fail("tau-equivariance",
                     "(g=" + std::to_string(g) + ", gamma=" +
                         std::to_string(gamma) + ", x=" + std::to_string(x) +
                         ")");
      }

  return a;
}

/// Strict action of the trivial 2-group on a groupoid.
inline StrictAction trivial_strict_action(const Groupoid& space) {
  CrossedModule xm = trivial_crossed_module();
  int n = space.num_objects();
  std::vector<std::vector<int>> obj_act(1, std::vector<int>(n));
  std::iota(obj_act[0].begin(), obj_act[0].end(), 0);
  std::vector<std::vector<std::vector<int>>> mor_act(1);
  mor_act[0].assign(static_cast<std::size_t>(n) * n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mor_act[0][x * n + y].resize(space.hom_size(x, y));
      std::iota(mor_act[0][x * n + y].begin(), mor_act[0][x * n + y].end(),
                0);
    }
  std::vector<std::vector<int>> tau(1, std::vector<int>(n, 0));
  return make_strict_action(xm, space, obj_act, mor_act, tau);
}

/// The quotient 2-groupoid X/G of a strict action, with access to the pair
/// data behind each 1-morphism and the gm1 element behind each 2-cell.
struct QuotientTwoGroupoid {
  StrictAction action;
  TwoGroupoid tg;
  // one[x1*n+x2][p] = (g, f) with f a token in mor(x2, g·x1)
  std::vector<std::vector<std::pair<int, int>>> one;
  // two[x1*n+x2][p][q] = sorted gamma elements of 2-cells p => q
  std::vector<std::vector<std::vector<std::vector<int>>>> two;

  int n() const { return action.space.num_objects(); }

  int one_index(int x1, int x2, int g, int f) const {
    const auto& v = one[x1 * n() + x2];
    auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(g, f));
    return (it != v.end() && *it == std::make_pair(g, f))
               ? static_cast<int>(it - v.begin())
               : -1;
  }

  int two_token(int x1, int x2, int p, int q, int gamma) const {
    const auto& v = two[x1 * n() + x2][p][q];
    auto it = std::lower_bound(v.begin(), v.end(), gamma);
    return (it != v.end() && *it == gamma)
               ? static_cast<int>(it - v.begin())
               : -1;
  }

  int two_element(int x1, int x2, int p, int q, int token) const {
    return two[x1 * n() + x2][p][q][token];
  }

  /// Index of the horizontal composite of 1-morphisms b: y->z after a: x->y.
  int compose_one(int x, int y, int z, int b, int a) const {
    auto [g1, f1] = one[y * n() + z][b];
    auto [g2, f2] = one[x * n() + y][a];
    int g1y = action.act_obj(g1, y);
    int gx = action.act_obj(action.actor.g0.mul(g1, g2), x);
    int moved = action.act_mor(g1, y, action.act_obj(g2, x), f2);
    int f = action.space.compose(z, g1y, gx, moved, f1);
    return one_index(x, z, action.actor.g0.mul(g1, g2), f);
  }
};

inline QuotientTwoGroupoid quotient_2groupoid(const StrictAction& a) {
  auto q = std::make_shared<QuotientTwoGroupoid>();
  q->action = a;
  const Groupoid& sp = a.space;
  const CrossedModule& xm = a.actor;
  int n = sp.num_objects();
  q->one.assign(static_cast<std::size_t>(n) * n, {});
  q->two.assign(static_cast<std::size_t>(n) * n, {});
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) {
      auto& pairs = q->one[x1 * n + x2];
      for (int g = 0; g < xm.g0.order(); ++g)
        for (int f = 0; f < sp.hom_size(x2, a.act_obj(g, x1)); ++f)
          pairs.emplace_back(g, f);
      auto& cells = q->two[x1 * n + x2];
      int k = static_cast<int>(pairs.size());
      cells.assign(k, std::vector<std::vector<int>>(k));
      for (int p = 0; p < k; ++p) {
        auto [g, f] = pairs[p];
        int gx = a.act_obj(g, x1);
        int f_inv = sp.inverse(x2, gx, f);
        for (int gamma = 0; gamma < xm.gm1.order(); ++gamma) {
          int g2 = xm.g0.mul(xm.d.apply(gamma), g);
          int gx2 = a.act_obj(g2, x1);
          // the 2-cell condition: tau_gamma(g·x1) = f' ∘ f^{-1}
          int lhs = a.tau_at(gamma, gx);
          for (int f2 = 0; f2 < sp.hom_size(x2, gx2); ++f2) {
            if (sp.compose(gx, x2, gx2, f2, f_inv) == lhs) {
              int qi = q->one_index(x1, x2, g2, f2);
              cells[p][qi].push_back(gamma);
            }
          }
        }
        for (auto& v : cells[p]) std::sort(v.begin(), v.end());
      }
    }

  TwoGroupoid t;
  t.n = n;
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) {
      const auto& pairs = q->one[x1 * n + x2];
      int k = static_cast<int>(pairs.size());
      std::vector<std::vector<int>> sizes(k, std::vector<int>(k));
      for (int p = 0; p < k; ++p)
        for (int r = 0; r < k; ++r)
          sizes[p][r] =
              static_cast<int>(q->two[x1 * n + x2][p][r].size());
      t.hom.push_back(Groupoid::make(
          k, sizes, [q, x1, x2](int p, int r, int s, int second, int first) {
            int gamma = q->action.actor.gm1.mul(
                q->two_element(x1, x2, r, s, second),
                q->two_element(x1, x2, p, r, first));
            return q->two_token(x1, x2, p, s, gamma);
          }));
    }
  t.id1.assign(n, 0);
  t.hcomp_obj = [q](int x, int y, int z, int b, int a2) {
    return q->compose_one(x, y, z, b, a2);
  };
  t.hcomp_mor = [q](int x, int y, int z, int b, int b2, int tb, int a2,
                    int a3, int ta) {
    const StrictAction& act = q->action;
    int gb = q->two_element(y, z, b, b2, tb);
    int ga = q->two_element(x, y, a2, a3, ta);
    int g1 = q->one[y * q->n() + z][b].first;
    int gamma = act.actor.gm1.mul(gb, act.actor.act_on(g1, ga));
    return q->two_token(x, z, q->compose_one(x, y, z, b, a2),
                        q->compose_one(x, y, z, b2, a3), gamma);
  };
  q->tg = finish_two_groupoid(std::move(t), "quotient_2groupoid");
  return *q;
}

/// The 1-truncation of a 2-groupoid: same objects, hom-sets are the pi0 of
/// each morphism groupoid, composition descends (checked).
struct Truncation {
  Groupoid gpd;
  std::vector<Partition> classes;  // per hom pair [x*n+y]

  int class_of(int x, int y, int one_morphism, int n) const {
    return classes[x * n + y].class_of[one_morphism];
  }
};

inline Truncation one_truncation(const TwoGroupoid& t) {
  int n = t.n;
  Truncation tr;
  tr.classes.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> sizes(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      tr.classes[x * n + y] = pi0(t.H(x, y));
      sizes[x][y] = tr.classes[x * n + y].num_classes();
    }
  for (int x = 0; x < n; ++x)
    if (tr.classes[x * n + x].class_of[t.id1[x]] != 0)
      throw ValidationError("CompositionNotDescending",
                            "identity 1-morphism of object " +
                                std::to_string(x) +
                                " is not in the first pi0 class");
  // well-definedness of descended composition
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int b = 0; b < t.H(y, z).num_objects(); ++b)
          for (int a = 0; a < t.H(x, y).num_objects(); ++a) {
            int base = tr.classes[x * n + z]
                           .class_of[t.hcomp_obj(x, y, z, b, a)];
            int rb = tr.classes[y * n + z]
                         .reps[tr.classes[y * n + z].class_of[b]];
            int ra = tr.classes[x * n + y]
                         .reps[tr.classes[x * n + y].class_of[a]];
            if (tr.classes[x * n + z]
                    .class_of[t.hcomp_obj(x, y, z, rb, ra)] != base)
              throw ValidationError("CompositionNotDescending",
                                    "at objects (" + std::to_string(x) + "," +
                                        std::to_string(y) + "," +
                                        std::to_string(z) + ")");
          }
  auto classes = tr.classes;  // copy for the closure
  tr.gpd = Groupoid::make(
      n, sizes, [&t, classes, n](int x, int y, int z, int second, int first) {
        int rb = classes[y * n + z].reps[second];
        int ra = classes[x * n + y].reps[first];
        return classes[x * n + z].class_of[t.hcomp_obj(x, y, z, rb, ra)];
      });
  return tr;
}

/// The automorphism 2-group of the point gamma |-> tau_gamma(x), i.e. the
/// homomorphism phi from the kernel of the boundary into Aut(x). The image
/// is central (a consequence of naturality, verified with a witness).
struct PhiAt {
  int x = 0;
  Subgroup pi1;        // kernel of the boundary, as a subgroup of gm1
  FiniteGroup aut;     // mor(x,x) with mul(a,b) = a after b
  FiniteGroup aut_op;  // same set, reversed multiplication
  GroupHom hom;        // pi1.group -> aut
};

inline PhiAt phi_at(const StrictAction& a, int x) {
  PhiAt p;
  p.x = x;
  p.pi1 = kernel_of(a.actor.d);
  p.aut = aut_group(a.space, x);
  int m = p.aut.order();
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) flat[u * m + v] = p.aut.mul(v, u);
  p.aut_op = make_group(m, flat);
  std::vector<int> map(p.pi1.group.order());
  for (int i = 0; i < p.pi1.group.order(); ++i)
    map[i] = a.tau_at(p.pi1.embed[i], x);
  for (int i = 0; i < p.pi1.group.order(); ++i)
    for (int j = 0; j < p.pi1.group.order(); ++j)
      if (map[p.pi1.group.mul(i, j)] != p.aut.mul(map[i], map[j]))
        throw ValidationError("PhiNotHomomorphism",
                              "at kernel elements (" + std::to_string(i) +
                                  "," + std::to_string(j) + ") over object " +
                                  std::to_string(x));
  for (int i = 0; i < p.pi1.group.order(); ++i)
    for (int t = 0; t < m; ++t)
      if (p.aut.mul(map[i], t) != p.aut.mul(t, map[i]))
        throw ValidationError("CentralityFails",
                              "phi(" + std::to_string(i) +
                                  ") does not commute with automorphism " +
                                  std::to_string(t) + " of object " +
                                  std::to_string(x));
  p.hom = make_hom(p.pi1.group, p.aut, map);
  return p;
}

/// The crossed module (ker d -> Aut(x)^op) presenting the automorphism
/// 2-group of a point of the quotient; the opposite multiplication makes the
/// comparison functor of verify_proposition strictly monoidal.
inline CrossedModule cone_phi(const StrictAction& a, int x) {
  PhiAt p = phi_at(a, x);
  GroupHom d_op = make_hom(p.pi1.group, p.aut_op, p.hom.map);
  return make_crossed_module(p.aut_op, p.pi1.group, d_op,
                             trivial_auto_action(p.aut_op, p.pi1.group));
}

/// The kernel 2-group at a point x of a quotient 2-groupoid: the full
/// sub-2-group of mor(x,x) on the 1-morphisms whose group component lies in
/// the image of the boundary (those that become the identity downstairs).
struct Kernel2Group {
  QuotientTwoGroupoid quotient;
  int x = 0;
  std::vector<int> objs;    // ascending quotient 1-morphism indices
  std::vector<int> sub_of;  // quotient index -> kernel index or -1
  TwoGroupoid tg;           // one object
};

inline Kernel2Group kernel_2group(const QuotientTwoGroupoid& q, int x) {
  auto k = std::make_shared<Kernel2Group>();
  k->quotient = q;
  k->x = x;
  int n = q.n();
  std::vector<bool> in_image(q.action.actor.g0.order(), false);
  for (int e : image_elements(q.action.actor.d)) in_image[e] = true;
  const auto& pairs = q.one[x * n + x];
  k->sub_of.assign(pairs.size(), -1);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (in_image[pairs[p].first]) {
      k->sub_of[p] = static_cast<int>(k->objs.size());
      k->objs.push_back(static_cast<int>(p));
    }
  int m = static_cast<int>(k->objs.size());
  std::vector<std::vector<int>> sizes(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sizes[i][j] =
          static_cast<int>(q.two[x * n + x][k->objs[i]][k->objs[j]].size());
  TwoGroupoid t;
  t.n = 1;
  t.hom.push_back(Groupoid::make(
      m, sizes, [k, x, n](int i, int j, int l, int second, int first) {
        const auto& q2 = k->quotient;
        int gamma = q2.action.actor.gm1.mul(
            q2.two_element(x, x, k->objs[j], k->objs[l], second),
            q2.two_element(x, x, k->objs[i], k->objs[j], first));
        return q2.two_token(x, x, k->objs[i], k->objs[l], gamma);
      }));
  if (k->sub_of[q.one_index(x, x, 0, 0)] != 0)
    throw ValidationError("BadKernel",
                          "identity 1-morphism not first in the kernel");
  t.id1 = {0};
  t.hcomp_obj = [k, x](int, int, int, int b, int a) {
    return k->sub_of[k->quotient.compose_one(x, x, x, k->objs[b],
                                             k->objs[a])];
  };
  t.hcomp_mor = [k, x](int, int, int, int b, int b2, int tb, int a, int a2,
                       int ta) {
    const auto& q2 = k->quotient;
    int gb = q2.two_element(x, x, k->objs[b], k->objs[b2], tb);
    int ga = q2.two_element(x, x, k->objs[a], k->objs[a2], ta);
    int g1 = q2.one[x * q2.n() + x][k->objs[b]].first;
    int gamma = q2.action.actor.gm1.mul(gb, q2.action.actor.act_on(g1, ga));
    return q2.two_token(x, x, q2.compose_one(x, x, x, k->objs[b], k->objs[a]),
                        q2.compose_one(x, x, x, k->objs[b2], k->objs[a2]),
                        gamma);
  };
  k->tg = finish_two_groupoid(std::move(t), "kernel_2group");
  return *k;
}

/// Verifies that the one-object 2-groupoid of the crossed module
/// (ker d -> Aut(x)^op) maps to the kernel 2-group at x by a strictly
/// monoidal functor that is essentially surjective and fully faithful.
inline Transcript verify_proposition(const QuotientTwoGroupoid& q, int x) {
  Transcript tr;
  tr.name = "kernel-2group-equivalence(x=" + std::to_string(x) + ")";
  const StrictAction& a = q.action;

  PhiAt phi;
  try {
    phi = phi_at(a, x);
    tr.add("phi-homomorphism-central", CheckResult::pass());
  } catch (const ValidationError& e) {
    tr.add("phi-homomorphism-central", CheckResult::fail(e.what()));
    return tr;
  }
  CrossedModule cxm = cone_phi(a, x);
  TwoGroup cone(cxm);
  TwoGroupoid ctg = cone.as_two_groupoid();
  Kernel2Group ker = kernel_2group(q, x);
  int n = q.n();
  int m = phi.aut.order();

  // the comparison functor on 1-morphisms: f |-> (identity group element, f)
  std::vector<int> f1(m, -1);
  {
    CheckResult r = CheckResult::pass();
    for (int f = 0; f < m && r.ok; ++f) {
      int p = q.one_index(x, x, 0, f);
      f1[f] = (p >= 0) ? ker.sub_of[p] : -1;
      if (f1[f] < 0)
        r = CheckResult::fail("automorphism " + std::to_string(f) +
                              " has no kernel 1-morphism");
    }
    tr.add("one-morphism-map", r);
    if (!r.ok) return tr;
  }

  // the comparison functor on 2-cells
  auto f2 = [&](int fa, int fb, int tok) {
    int kidx = cone.mor_elems(fa, fb)[tok];  // index in ker d
    int gamma = phi.pi1.embed[kidx];
    return q.two_token(x, x, ker.objs[f1[fa]], ker.objs[f1[fb]], gamma);
  };

  {
    CheckResult r = CheckResult::pass();
    for (int fa = 0; fa < m && r.ok; ++fa)
      for (int fb = 0; fb < m && r.ok; ++fb)
        for (int tok = 0; tok < ctg.H(0, 0).hom_size(fa, fb) && r.ok; ++tok)
          if (f2(fa, fb, tok) < 0)
            r = CheckResult::fail("2-cell (" + std::to_string(fa) + "=>" +
                                  std::to_string(fb) + ", " +
                                  std::to_string(tok) +
                                  ") has no kernel image");
    tr.add("two-cell-map", r);
    if (!r.ok) return tr;
  }

  // functor laws: identity 2-cells and vertical composition
  {
    CheckResult r = CheckResult::pass();
    for (int fa = 0; fa < m && r.ok; ++fa)
      if (f2(fa, fa, 0) != 0)
        r = CheckResult::fail("identity 2-cell at " + std::to_string(fa));
    for (int fa = 0; fa < m && r.ok; ++fa)
      for (int fb = 0; fb < m && r.ok; ++fb)
        for (int fc = 0; fc < m && r.ok; ++fc)
          for (int t1 = 0; t1 < ctg.H(0, 0).hom_size(fa, fb) && r.ok; ++t1)
            for (int t2 = 0; t2 < ctg.H(0, 0).hom_size(fb, fc) && r.ok;
                 ++t2) {
              int lhs = f2(fa, fc, ctg.H(0, 0).compose(fa, fb, fc, t2, t1));
              int rhs = ker.tg.H(0, 0).compose(f1[fa], f1[fb], f1[fc],
                                               f2(fb, fc, t2),
                                               f2(fa, fb, t1));
              if (lhs != rhs)
                r = CheckResult::fail("vertical composition at (" +
                                      std::to_string(fa) + "," +
                                      std::to_string(fb) + "," +
                                      std::to_string(fc) + ")");
            }
    tr.add("functor-laws", r);
  }

  // strict monoidality at both levels
  {
    CheckResult r = CheckResult::pass();
    if (f1[0] != 0) r = CheckResult::fail("unit 1-morphism not preserved");
    for (int fa = 0; fa < m && r.ok; ++fa)
      for (int fb = 0; fb < m && r.ok; ++fb)
        if (f1[ctg.hcomp_obj(0, 0, 0, fa, fb)] !=
            ker.tg.hcomp_obj(0, 0, 0, f1[fa], f1[fb]))
          r = CheckResult::fail("tensor of 1-morphisms at (" +
                                std::to_string(fa) + "," +
                                std::to_string(fb) + ")");
    for (int fa = 0; fa < m && r.ok; ++fa)
      for (int fa2 = 0; fa2 < m && r.ok; ++fa2)
        for (int ta = 0; ta < ctg.H(0, 0).hom_size(fa, fa2) && r.ok; ++ta)
          for (int fb = 0; fb < m && r.ok; ++fb)
            for (int fb2 = 0; fb2 < m && r.ok; ++fb2)
              for (int tb = 0; tb < ctg.H(0, 0).hom_size(fb, fb2) && r.ok;
                   ++tb) {
                int src = ctg.hcomp_obj(0, 0, 0, fa, fb);
                int dst = ctg.hcomp_obj(0, 0, 0, fa2, fb2);
                int lhs = f2(src, dst,
                             ctg.hcomp_mor(0, 0, 0, fa, fa2, ta, fb, fb2,
                                           tb));
                int rhs = ker.tg.hcomp_mor(0, 0, 0, f1[fa], f1[fa2],
                                           f2(fa, fa2, ta), f1[fb], f1[fb2],
                                           f2(fb, fb2, tb));
                if (lhs != rhs)
                  r = CheckResult::fail("tensor of 2-cells at (" +
                                        std::to_string(fa) + "," +
                                        std::to_string(fb) + ")");
              }
    tr.add("strictly-monoidal", r);
  }

  // essentially surjective: bijective on connected components of 1-morphisms
  {
    Partition ps = pi0(ctg.H(0, 0));
    Partition pt = pi0(ker.tg.H(0, 0));
    CheckResult r = CheckResult::pass();
    if (ps.num_classes() != pt.num_classes())
      r = CheckResult::fail("component counts differ: " +
                            std::to_string(ps.num_classes()) + " vs " +
                            std::to_string(pt.num_classes()));
    std::vector<int> img(ps.num_classes(), -1);
    std::vector<bool> hit(pt.num_classes(), false);
    for (int f = 0; f < m && r.ok; ++f) {
      int c = ps.class_of[f];
      int d = pt.class_of[f1[f]];
      if (img[c] < 0) {
        img[c] = d;
        if (hit[d])
          r = CheckResult::fail("components collide at class " +
                                std::to_string(c));
        hit[d] = true;
      } else if (img[c] != d) {
        r = CheckResult::fail("component map ill-defined at " +
                              std::to_string(f));
      }
    }
    for (int d = 0; d < pt.num_classes() && r.ok; ++d)
      if (!hit[d])
        r = CheckResult::fail("kernel component " + std::to_string(d) +
                              " not reached");
    tr.add("essentially-surjective", r);
  }

  // fully faithful on 2-cells
  {
    CheckResult r = CheckResult::pass();
    for (int fa = 0; fa < m && r.ok; ++fa)
      for (int fb = 0; fb < m && r.ok; ++fb) {
        int hs = ctg.H(0, 0).hom_size(fa, fb);
        int ht = ker.tg.H(0, 0).hom_size(f1[fa], f1[fb]);
        if (hs != ht) {
          r = CheckResult::fail("2-cell counts differ at (" +
                                std::to_string(fa) + "," +
                                std::to_string(fb) + ")");
          break;
        }
        std::vector<bool> used(ht, false);
        for (int tok = 0; tok < hs; ++tok) {
          int v = f2(fa, fb, tok);
          if (used[v]) {
            r = CheckResult::fail("2-cell map not injective at (" +
                                  std::to_string(fa) + "," +
                                  std::to_string(fb) + ")");
            break;
          }
          used[v] = true;
        }
      }
    tr.add("fully-faithful", r);
  }
  (void)n;
  return tr;
}

/// The canonical functor from the 1-truncation of X/G to the set-level
/// quotient X' of pi0(X) by pi0(G), with its descent and surjectivity
/// checks.
struct CanonicalTruncation {
  QuotientTwoGroupoid quotient;
  Truncation trunc;
  Partition comps;  // pi0 of the space
  Quotient pi0g;    // g0 / image of the boundary
  QuotientSetGroupoid xprime;
  GroupoidFunctor functor;  // trunc.gpd -> xprime.groupoid
  Transcript checks;
};

inline CanonicalTruncation canonical_truncation_functor(
    const QuotientTwoGroupoid& q) {
  CanonicalTruncation ct;
  ct.quotient = q;
  ct.trunc = one_truncation(q.tg);
  const StrictAction& a = q.action;
  int n = a.space.num_objects();
  ct.comps = pi0(a.space);
  ct.pi0g = quotient_by_normal(a.actor.g0, image_elements(a.actor.d));
  int nc = ct.comps.num_classes();
  ct.checks.name = "canonical-truncation";

  // the induced action of pi0(G) on pi0(X)
  std::vector<int> greps(ct.pi0g.group.order(), -1);
  for (int g = a.actor.g0.order() - 1; g >= 0; --g)
    greps[ct.pi0g.project[g]] = g;
  std::vector<std::vector<int>> perm(ct.pi0g.group.order(),
                                     std::vector<int>(nc));
  for (int e = 0; e < ct.pi0g.group.order(); ++e)
    for (int c = 0; c < nc; ++c)
      perm[e][c] = ct.comps.class_of[a.act_obj(greps[e], ct.comps.reps[c])];
  {
    CheckResult r = CheckResult::pass();
    for (int g = 0; g < a.actor.g0.order() && r.ok; ++g)
      for (int x = 0; x < n && r.ok; ++x)
        if (ct.comps.class_of[a.act_obj(g, x)] !=
            perm[ct.pi0g.project[g]][ct.comps.class_of[x]])
          r = CheckResult::fail("at (g=" + std::to_string(g) + ", x=" +
                                std::to_string(x) + ")");
    ct.checks.add("action-descends", r);
    if (!r.ok) return ct;
  }
  ct.xprime = quotient_set_groupoid(make_set_action(ct.pi0g.group, nc, perm));

  // the functor: object x to its component, a 1-morphism class to the class
  // of its group component
  std::vector<int> obj(n);
  for (int x = 0; x < n; ++x) obj[x] = ct.comps.class_of[x];
  std::vector<std::vector<int>> mor(static_cast<std::size_t>(n) * n);
  {
    CheckResult r = CheckResult::pass();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const Partition& part = ct.trunc.classes[x * n + y];
        auto& mm = mor[x * n + y];
        mm.assign(part.num_classes(), -1);
        for (int p = 0;
             p < static_cast<int>(q.one[x * n + y].size()) && r.ok; ++p) {
          int g = q.one[x * n + y][p].first;
          int tok = ct.xprime.token_of(obj[x], obj[y], ct.pi0g.project[g]);
          if (tok < 0) {
            r = CheckResult::fail("1-morphism (" + std::to_string(x) + "->" +
                                  std::to_string(y) + ", " +
                                  std::to_string(p) +
                                  ") has no downstairs image");
            break;
          }
          int c = part.class_of[p];
          if (mm[c] < 0)
            mm[c] = tok;
          else if (mm[c] != tok)
            r = CheckResult::fail("class " + std::to_string(c) + " at (" +
                                  std::to_string(x) + "->" +
                                  std::to_string(y) +
                                  ") maps to two distinct images");
        }
      }
    ct.checks.add("morphism-map-descends", r);
    if (!r.ok) return ct;
  }
  ct.functor = make_functor(ct.trunc.gpd, ct.xprime.groupoid, obj, mor);
  ct.checks.add("functor-laws", CheckResult::pass());

  // surjectivity on objects and fullness on morphisms
  {
    CheckResult r = CheckResult::pass();
    std::vector<bool> hit(nc, false);
    for (int x = 0; x < n; ++x) hit[obj[x]] = true;
    for (int c = 0; c < nc && r.ok; ++c)
      if (!hit[c])
        r = CheckResult::fail("downstairs object " + std::to_string(c) +
                              " not reached");
    ct.checks.add("surjective-on-objects", r);
  }
  {
    CheckResult r = CheckResult::pass();
    for (int x = 0; x < n && r.ok; ++x)
      for (int y = 0; y < n && r.ok; ++y) {
        std::vector<bool> hit(
            ct.xprime.groupoid.hom_size(obj[x], obj[y]), false);
        for (int c = 0; c < ct.trunc.gpd.hom_size(x, y); ++c)
          hit[mor[x * n + y][c]] = true;
        for (std::size_t t = 0; t < hit.size(); ++t)
          if (!hit[t]) {
            r = CheckResult::fail("downstairs morphism (" +
                                  std::to_string(obj[x]) + "->" +
                                  std::to_string(obj[y]) + ", " +
                                  std::to_string(t) + ") has no lift from (" +
                                  std::to_string(x) + "->" +
                                  std::to_string(y) + ")");
            break;
          }
      }
    ct.checks.add("full-on-morphisms", r);
  }
  return ct;
}

/// Verifies, at a point x: (i) the kernel of Aut(x) in the truncation
/// mapping to Aut([x]) downstairs is isomorphic to Coker(phi_x); (ii) the
/// group of 2-cells of the identity 1-morphism at x equals Ker(phi_x).
inline Transcript verify_corollary(const CanonicalTruncation& ct, int x) {
  Transcript tr;
  tr.name = "truncation-fibers(x=" + std::to_string(x) + ")";
  const QuotientTwoGroupoid& q = ct.quotient;
  int n = q.n();
  PhiAt phi;
  try {
    phi = phi_at(q.action, x);
  } catch (const ValidationError& e) {
    tr.add("phi", CheckResult::fail(e.what()));
    return tr;
  }

  // (i) kernel of the truncated automorphism group over the quotient set
  {
    FiniteGroup big = aut_group(ct.trunc.gpd, x);
    std::vector<int> ker_elems;
    for (int c = 0; c < big.order(); ++c)
      if (ct.functor.apply_mor(x, x, c) == 0) ker_elems.push_back(c);
    Subgroup ker = subgroup_from_elements(big, ker_elems);
    Quotient cok = coker_central(phi.hom);
    if (ker.group.order() != cok.group.order())
      tr.add("kernel-is-coker-phi",
             CheckResult::fail("orders differ: " +
                               std::to_string(ker.group.order()) + " vs " +
                               std::to_string(cok.group.order())));
    else if (find_isomorphism(ker.group, cok.group))
      tr.add("kernel-is-coker-phi", CheckResult::pass());
    else
      tr.add("kernel-is-coker-phi",
             CheckResult::fail("groups of order " +
                               std::to_string(ker.group.order()) +
                               " are not isomorphic"));
  }

  // (ii) 2-cells of the identity 1-morphism form Ker(phi_x)
  {
    int id1 = q.tg.id1[x];
    const auto& gammas = q.two[x * n + x][id1][id1];
    std::vector<int> ker_phi;
    for (int i = 0; i < phi.pi1.group.order(); ++i)
      if (phi.hom.apply(i) == 0) ker_phi.push_back(phi.pi1.embed[i]);
    std::sort(ker_phi.begin(), ker_phi.end());
    if (gammas == ker_phi)
      tr.add("pi2-is-ker-phi", CheckResult::pass());
    else
      tr.add("pi2-is-ker-phi",
             CheckResult::fail("identity 2-cell group has " +
                               std::to_string(gammas.size()) +
                               " elements, Ker(phi) has " +
                               std::to_string(ker_phi.size())));
  }
  return tr;
}

/// The band of the quotient gerbe: a functor from the quotient set groupoid
/// X' to groups, sending a component to Coker(phi) at its representative and
/// each downstairs morphism to a transport isomorphism. Construction
/// verifies the transport is independent of all lift choices.
struct BandFunctor {
  std::vector<PhiAt> phis;      // one per X' object, at the component rep
  std::vector<Quotient> coker;  // Coker(phi) per X' object
  // maps[c1 * k + c2][token][band element of c1] = band element of c2
  std::vector<std::vector<std::vector<int>>> maps;
  Transcript checks;
};

inline BandFunctor band_functor(const CanonicalTruncation& ct) {
  BandFunctor bf;
  bf.checks.name = "band-functor";
  const QuotientTwoGroupoid& q = ct.quotient;
  const StrictAction& a = q.action;
  const Groupoid& sp = a.space;
  int nc = ct.comps.num_classes();

  for (int c = 0; c < nc; ++c) {
    bf.phis.push_back(phi_at(a, ct.comps.reps[c]));
    bf.coker.push_back(coker_central(bf.phis.back().hom));
  }
  {
    CheckResult r = CheckResult::pass();
    for (int c = 0; c < nc && r.ok; ++c)
      if (!bf.coker[c].group.is_abelian())
        r = CheckResult::fail("band at component " + std::to_string(c) +
                              " is not abelian");
    bf.checks.add("band-abelian", r);
  }

  // transport along each downstairs morphism, checked against every lift
  bf.maps.assign(static_cast<std::size_t>(nc) * nc, {});
  CheckResult indep = CheckResult::pass();
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = 0; c2 < nc; ++c2) {
      int x1 = ct.comps.reps[c1], x2 = ct.comps.reps[c2];
      int hs = ct.xprime.groupoid.hom_size(c1, c2);
      bf.maps[c1 * nc + c2].assign(hs, {});
      for (int m = 0; m < hs; ++m) {
        int e = ct.xprime.element_of(c1, c2, m);
        std::vector<int>& out = bf.maps[c1 * nc + c2][m];
        for (int g = 0; g < a.actor.g0.order(); ++g) {
          if (ct.pi0g.project[g] != e) continue;
          int gx1 = a.act_obj(g, x1);
          for (int f = 0; f < sp.hom_size(gx1, x2); ++f) {
            int f_inv = sp.inverse(gx1, x2, f);
            std::vector<int> cand(bf.coker[c1].group.order(), -1);
            bool good = true;
            for (int t = 0; t < bf.phis[c1].aut.order() && good; ++t) {
              int gt = a.act_mor(g, x1, x1, t);
              int half = sp.compose(gx1, gx1, x2, f, gt);
              int img = sp.compose(x2, gx1, x2, half, f_inv);
              int src = bf.coker[c1].project[t];
              int dst = bf.coker[c2].project[img];
              if (cand[src] < 0)
                cand[src] = dst;
              else if (cand[src] != dst)
                good = false;
            }
            if (!good) {
              if (indep.ok)
                indep = CheckResult::fail(
                    "transport not constant on band classes at downstairs "
                    "morphism (" +
                    std::to_string(c1) + "->" + std::to_string(c2) + ", " +
                    std::to_string(m) + ")");
              continue;
            }
            if (out.empty())
              out = cand;
            else if (out != cand && indep.ok)
              indep = CheckResult::fail(
                  "transport depends on the lift at downstairs morphism (" +
                  std::to_string(c1) + "->" + std::to_string(c2) + ", " +
                  std::to_string(m) + ")");
          }
        }
        if (out.empty() && indep.ok)
          indep = CheckResult::fail("no lift for downstairs morphism (" +
                                    std::to_string(c1) + "->" +
                                    std::to_string(c2) + ", " +
                                    std::to_string(m) + ")");
      }
    }
  bf.checks.add("transport-independent-of-lift", indep);
  if (!indep.ok) return bf;

  // functoriality of the band
  {
    CheckResult r = CheckResult::pass();
    for (int c = 0; c < nc && r.ok; ++c)
      for (int v = 0; v < bf.coker[c].group.order() && r.ok; ++v)
        if (bf.maps[c * nc + c][0][v] != v)
          r = CheckResult::fail("identity morphism at component " +
                                std::to_string(c) + " moves band element " +
                                std::to_string(v));
    for (int c1 = 0; c1 < nc && r.ok; ++c1)
      for (int c2 = 0; c2 < nc && r.ok; ++c2)
        for (int c3 = 0; c3 < nc && r.ok; ++c3)
          for (int m2 = 0;
               m2 < ct.xprime.groupoid.hom_size(c2, c3) && r.ok; ++m2)
            for (int m1 = 0;
                 m1 < ct.xprime.groupoid.hom_size(c1, c2) && r.ok; ++m1) {
              int mc = ct.xprime.groupoid.compose(c1, c2, c3, m2, m1);
              for (int v = 0; v < bf.coker[c1].group.order(); ++v)
                if (bf.maps[c1 * nc + c3][mc][v] !=
                    bf.maps[c2 * nc + c3][m2]
                           [bf.maps[c1 * nc + c2][m1][v]]) {
                  r = CheckResult::fail("composite at (" +
                                        std::to_string(c1) + "," +
                                        std::to_string(c2) + "," +
                                        std::to_string(c3) + ")");
                  break;
                }
            }
    for (int c1 = 0; c1 < nc && r.ok; ++c1)
      for (int c2 = 0; c2 < nc && r.ok; ++c2)
        for (int m = 0; m < ct.xprime.groupoid.hom_size(c1, c2) && r.ok;
             ++m)
          for (int v = 0; v < bf.coker[c1].group.order() && r.ok; ++v)
            for (int w = 0; w < bf.coker[c1].group.order() && r.ok; ++w)
              if (bf.maps[c1 * nc + c2][m][bf.coker[c1].group.mul(v, w)] !=
                  bf.coker[c2].group.mul(bf.maps[c1 * nc + c2][m][v],
                                         bf.maps[c1 * nc + c2][m][w]))
                r = CheckResult::fail("transport is not a homomorphism at "
                                      "downstairs morphism (" +
                                      std::to_string(c1) + "->" +
                                      std::to_string(c2) + ", " +
                                      std::to_string(m) + ")");
    bf.checks.add("band-functorial", r);
  }
  return bf;
}

/// Verifies that the truncated quotient is a gerbe over X' banded by
/// Coker(phi): nonempty connected fibers, a canonical fiber isomorphism
/// from the vertical automorphisms to the band, and naturality of that
/// isomorphism with respect to transport.
inline Transcript verify_banding(const CanonicalTruncation& ct) {
  Transcript tr;
  tr.name = "gerbe-banding";
  for (const auto& line : ct.checks.lines) tr.add(line.first, line.second);
  if (!ct.checks.all_ok()) return tr;
  const QuotientTwoGroupoid& q = ct.quotient;
  const StrictAction& a = q.action;
  const Groupoid& sp = a.space;
  int n = q.n();
  int nc = ct.comps.num_classes();

  tr.add("gerbe", is_gerbe(ct.functor));

  BandFunctor bf = band_functor(ct);
  for (const auto& line : bf.checks.lines) tr.add(line.first, line.second);
  if (!bf.checks.all_ok() || !tr.all_ok()) return tr;

  // the canonical fiber isomorphism at each component representative:
  // a vertical automorphism class [(g, f)] with g = d(gamma) maps to the
  // band class of tau_{gamma^{-1}}(g·x) ∘ f
  std::vector<std::vector<int>> canon(nc);  // [c][kernel class] = band elem
  {
    CheckResult r = CheckResult::pass();
    for (int c = 0; c < nc && r.ok; ++c) {
      int x = ct.comps.reps[c];
      const Partition& part = ct.trunc.classes[x * n + x];
      const auto& pairs = q.one[x * n + x];
      std::vector<int> ker_class_of(part.num_classes(), -1);
      std::vector<int> image(part.num_classes(), -1);
      for (int p = 0; p < static_cast<int>(pairs.size()) && r.ok; ++p) {
        auto [g, f] = pairs[p];
        if (ct.pi0g.project[g] != 0) continue;  // not a vertical morphism
        int gx = a.act_obj(g, x);
        for (int i = 0; i < a.actor.gm1.order(); ++i) {
          if (a.actor.d.apply(i) != a.actor.g0.inv(g)) continue;
          int val = sp.compose(x, gx, x, a.tau_at(i, gx), f);
          int band = bf.coker[c].project[val];
          int cls = part.class_of[p];
          if (image[cls] < 0)
            image[cls] = band;
          else if (image[cls] != band)
            r = CheckResult::fail(
                "fiber map not constant on class " + std::to_string(cls) +
                " at component " + std::to_string(c));
        }
      }
      if (!r.ok) break;
      // bijectivity onto the band
      std::vector<bool> hit(bf.coker[c].group.order(), false);
      int vertical = 0;
      for (int cls = 0; cls < part.num_classes(); ++cls) {
        if (image[cls] < 0) continue;  // class not vertical
        ++vertical;
        if (hit[image[cls]]) {
          r = CheckResult::fail("fiber map not injective at component " +
                                std::to_string(c));
          break;
        }
        hit[image[cls]] = true;
      }
      if (r.ok && vertical != bf.coker[c].group.order())
        r = CheckResult::fail("fiber map not onto the band at component " +
                              std::to_string(c));
      if (r.ok) {
        canon[c].assign(part.num_classes(), -1);
        for (int cls = 0; cls < part.num_classes(); ++cls)
          canon[c][cls] = image[cls];
      }
      (void)ker_class_of;
    }
    tr.add("canonical-fiber-iso", r);
    if (!r.ok) return tr;
  }

  // naturality: conjugating a vertical automorphism along any truncated
  // morphism over a downstairs morphism agrees with band transport
  {
    CheckResult r = CheckResult::pass();
    for (int c1 = 0; c1 < nc && r.ok; ++c1)
      for (int c2 = 0; c2 < nc && r.ok; ++c2) {
        int x1 = ct.comps.reps[c1], x2 = ct.comps.reps[c2];
        const Groupoid& tg = ct.trunc.gpd;
        for (int t = 0; t < tg.hom_size(x1, x2) && r.ok; ++t) {
          int m = ct.functor.apply_mor(x1, x2, t);
          int t_inv = tg.inverse(x1, x2, t);
          const Partition& part1 = ct.trunc.classes[x1 * n + x1];
          for (int cls = 0; cls < part1.num_classes() && r.ok; ++cls) {
            if (canon[c1][cls] < 0) continue;
            int half = tg.compose(x1, x1, x2, t, cls);
            int conj = tg.compose(x2, x1, x2, half, t_inv);
            int lhs = canon[c2][conj];
            int rhs = bf.maps[c1 * nc + c2][m][canon[c1][cls]];
            if (lhs != rhs)
              r = CheckResult::fail(
                  "naturality square at components (" + std::to_string(c1) +
                  "->" + std::to_string(c2) + "), morphism class " +
                  std::to_string(t) + ", vertical class " +
                  std::to_string(cls));
          }
        }
      }
    tr.add("banding-natural", r);
  }
  return tr;
}

}  // namespace xmodkit
