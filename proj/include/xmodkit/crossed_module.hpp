#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xmodkit/core.hpp"
#include "xmodkit/fingroup.hpp"
#include "xmodkit/two_groupoid.hpp"

namespace xmodkit {

/// A crossed module: groups g0, gm1, a boundary d: gm1 -> g0 and an action
/// of g0 on gm1 satisfying equivariance and the Peiffer identity.
struct CrossedModule {
  FiniteGroup g0;
  FiniteGroup gm1;
  GroupHom d;       // gm1 -> g0
  AutoAction act;   // g0 on gm1

  int boundary(int gamma) const { return d.apply(gamma); }
  int act_on(int g, int gamma) const { return act.apply(g, gamma); }
};

/// Verifies the two crossed-module identities; returns the first witness on
/// failure.
inline Transcript check_xmod(const CrossedModule& xm) {
  Transcript tr;
  tr.name = "crossed-module-axioms";
  {
    CheckResult r = CheckResult::pass();
    for (int g = 0; g < xm.g0.order() && r.ok; ++g)
      for (int gamma = 0; gamma < xm.gm1.order() && r.ok; ++gamma)
        if (xm.d.apply(xm.act_on(g, gamma)) !=
            xm.g0.conj(g, xm.d.apply(gamma)))
          r = CheckResult::fail("Axiom1Fails at (g=" + std::to_string(g) +
                                ", gamma=" + std::to_string(gamma) + ")");
    tr.add("equivariance", r);
  }
  {
    CheckResult r = CheckResult::pass();
    for (int gamma = 0; gamma < xm.gm1.order() && r.ok; ++gamma)
      for (int gamma2 = 0; gamma2 < xm.gm1.order() && r.ok; ++gamma2)
        if (xm.act_on(xm.d.apply(gamma), gamma2) !=
            xm.gm1.conj(gamma, gamma2))
          r = CheckResult::fail("Axiom2Fails at (gamma=" +
                                std::to_string(gamma) + ", gamma'=" +
                                std::to_string(gamma2) + ")");
    tr.add("peiffer", r);
  }
  return tr;
}

inline CrossedModule make_crossed_module(const FiniteGroup& g0,
                                         const FiniteGroup& gm1,
                                         const GroupHom& d,
                                         const AutoAction& act) {
  if (!(d.source == gm1) || !(d.target == g0))
    throw ValidationError("BadCrossedModule", "boundary endpoints mismatch");
  if (!(act.actor == g0) || !(act.acted == gm1))
    throw ValidationError("BadCrossedModule", "action endpoints mismatch");
  CrossedModule xm{g0, gm1, d, act};
  Transcript tr = check_xmod(xm);
  for (const auto& [label, r] : tr.lines)
    if (!r.ok) throw ValidationError("CrossedModuleAxiomFails", r.witness);
  return xm;
}

inline bool is_abelian_xmod(const CrossedModule& xm) {
  if (!xm.g0.is_abelian() || !xm.gm1.is_abelian()) return false;
  for (int g = 0; g < xm.g0.order(); ++g)
    for (int gamma = 0; gamma < xm.gm1.order(); ++gamma)
      if (xm.act_on(g, gamma) != gamma) return false;
  return true;
}

inline CrossedModule trivial_crossed_module() {
  FiniteGroup t = trivial_group();
  return make_crossed_module(t, t, zero_hom(t, t), trivial_auto_action(t, t));
}

/// The strict 2-group Cone(gm1 -> g0): objects are g0, mor(g,g') are the
/// gamma with d(gamma)·g = g', vertical composition is the product in gm1
/// and the tensor of morphisms is (gamma1, gamma2) -> gamma1 · ^{g1}gamma2.
class TwoGroup {
 public:
  explicit TwoGroup(CrossedModule xm) : xm_(std::move(xm)) {
    int n = xm_.g0.order();
    mor_.assign(static_cast<std::size_t>(n) * n, {});
    for (int gamma = 0; gamma < xm_.gm1.order(); ++gamma)
      for (int g = 0; g < n; ++g)
        mor_[g * n + xm_.g0.mul(xm_.d.apply(gamma), g)].push_back(gamma);
    // gamma lists are pushed in increasing order already
  }

  const CrossedModule& xm() const { return xm_; }
  int num_objects() const { return xm_.g0.order(); }

  const std::vector<int>& mor_elems(int g, int g2) const {
    return mor_[g * num_objects() + g2];
  }

  int token_of(int g, int g2, int gamma) const {
    const auto& v = mor_elems(g, g2);
    auto it = std::lower_bound(v.begin(), v.end(), gamma);
    return (it != v.end() && *it == gamma)
               ? static_cast<int>(it - v.begin())
               : -1;
  }

  /// The one-object strict 2-groupoid view: 1-morphisms are objects of the
  /// 2-group, horizontal composition is the tensor.
  TwoGroupoid as_two_groupoid() const {
    auto self = std::make_shared<TwoGroup>(*this);
    const CrossedModule& xm = self->xm_;
    int n = self->num_objects();
    TwoGroupoid t;
    t.n = 1;
    std::vector<std::vector<int>> sizes(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
      for (int g2 = 0; g2 < n; ++g2)
        sizes[g][g2] = static_cast<int>(self->mor_elems(g, g2).size());
    t.hom.push_back(Groupoid::make(
        n, sizes, [self](int g, int g2, int g3, int second, int first) {
          // vertical composition: product in gm1
          int gamma = self->xm_.gm1.mul(self->mor_elems(g2, g3)[second],
                                        self->mor_elems(g, g2)[first]);
          return self->token_of(g, g3, gamma);
        }));
    t.id1 = {0};  // the unit object of g0
    t.hcomp_obj = [self](int, int, int, int b, int a) {
      return self->xm_.g0.mul(b, a);
    };
    t.hcomp_mor = [self](int, int, int, int b, int b2, int tb, int a, int a2,
                         int ta) {
      const CrossedModule& m = self->xm_;
      int gb = self->mor_elems(b, b2)[tb];
      int ga = self->mor_elems(a, a2)[ta];
      int gamma = m.gm1.mul(gb, m.act_on(b, ga));
      return self->token_of(m.g0.mul(b, a), m.g0.mul(b2, a2), gamma);
    };
    (void)xm;
    return t;
  }

 private:
  CrossedModule xm_;
  std::vector<std::vector<int>> mor_;
};

inline TwoGroup cone_2group(const CrossedModule& xm) { return TwoGroup(xm); }

/// pi0 = g0 / d(gm1); the image is normal by equivariance.
inline Quotient pi0_2group(const TwoGroup& t) {
  return quotient_by_normal(t.xm().g0, image_elements(t.xm().d));
}

/// pi1 = Aut(unit object) = Ker d; asserts it is abelian.
inline Subgroup pi1_2group(const TwoGroup& t) {
  Subgroup k = kernel_of(t.xm().d);
  if (!k.group.is_abelian())
    throw ValidationError("Pi1NotAbelian",
                          "kernel of the boundary is not abelian");
  return k;
}

/// A 3-term complex of abelian groups 0 -> c2 -> c1 -> c0 -> 0.
struct AbelianComplex {
  FiniteGroup c2, c1, c0;
  GroupHom d2;  // c2 -> c1
  GroupHom d1;  // c1 -> c0
};

inline AbelianComplex make_abelian_complex(const FiniteGroup& c2,
                                           const FiniteGroup& c1,
                                           const FiniteGroup& c0,
                                           const GroupHom& d2,
                                           const GroupHom& d1) {
  if (!c2.is_abelian() || !c1.is_abelian() || !c0.is_abelian())
    throw ValidationError("NotAbelian", "complex groups must be abelian");
  if (!(d2.source == c2) || !(d2.target == c1) || !(d1.source == c1) ||
      !(d1.target == c0))
    throw ValidationError("BadComplex", "differential endpoints mismatch");
  for (int z = 0; z < c2.order(); ++z)
    if (d1.apply(d2.apply(z)) != 0)
      throw ValidationError("BadComplex",
                            "d1∘d2 != 0 at " + std::to_string(z));
  return AbelianComplex{c2, c1, c0, d2, d1};
}

namespace detail {

struct ComplexModel {
  AbelianComplex c;
  // one_elems[c*n+c'] = sorted {x in C1 | d1(x) = c' - c}
  std::vector<std::vector<int>> one_elems;
  // two_elems[x][x'] over C1 elements: sorted {z in C2 | x·d2(z) = x'}
  std::vector<std::vector<std::vector<int>>> two_elems;

  int one_token(int a, int b, int x) const {
    const auto& v = one_elems[a * c.c0.order() + b];
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return (it != v.end() && *it == x) ? static_cast<int>(it - v.begin())
                                       : -1;
  }
  int two_token(int x, int x2, int z) const {
    const auto& v = two_elems[x][x2];
    auto it = std::lower_bound(v.begin(), v.end(), z);
    return (it != v.end() && *it == z) ? static_cast<int>(it - v.begin())
                                       : -1;
  }
};

}  // namespace detail

/// The strict 2-group of a 3-term abelian complex, as a 2-groupoid: objects
/// are C0, a 1-morphism c -> c' is an x in C1 with d1(x) = c' - c, and
/// 2-morphisms x => x' are the z in C2 with x·d2(z) = x'.
inline TwoGroupoid two_group_of_complex(const AbelianComplex& c) {
  auto model = std::make_shared<detail::ComplexModel>();
  model->c = c;
  int n = c.c0.order();
  model->one_elems.assign(static_cast<std::size_t>(n) * n, {});
  for (int x = 0; x < c.c1.order(); ++x)
    for (int a = 0; a < n; ++a)
      model->one_elems[a * n + c.c0.mul(c.d1.apply(x), a)].push_back(x);
  model->two_elems.assign(c.c1.order(), {});
  for (int x = 0; x < c.c1.order(); ++x) {
    model->two_elems[x].assign(c.c1.order(), {});
    for (int z = 0; z < c.c2.order(); ++z)
      model->two_elems[x][c.c1.mul(x, c.d2.apply(z))].push_back(z);
    for (auto& v : model->two_elems[x]) std::sort(v.begin(), v.end());
  }
  for (auto& v : model->one_elems) std::sort(v.begin(), v.end());

  TwoGroupoid t;
  t.n = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& objs = model->one_elems[a * n + b];
      int k = static_cast<int>(objs.size());
      std::vector<std::vector<int>> sizes(k, std::vector<int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sizes[i][j] =
              static_cast<int>(model->two_elems[objs[i]][objs[j]].size());
      t.hom.push_back(Groupoid::make(
          k, sizes,
          [model, a, b](int i, int j, int l, int second, int first) {
            const auto& objs2 =
                model->one_elems[a * model->c.c0.order() + b];
            int z = model->c.c2.mul(
                model->two_elems[objs2[j]][objs2[l]][second],
                model->two_elems[objs2[i]][objs2[j]][first]);
            return model->two_token(objs2[i], objs2[l], z);
          }));
    }
  t.id1.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int tok = model->one_token(a, a, 0);
    if (tok != 0)
      throw ValidationError("BadComplex", "unit 1-morphism not at token 0");
    t.id1[a] = tok;
  }
  t.hcomp_obj = [model](int x, int y, int z, int b, int a) {
    int m = model->c.c0.order();
    int xa = model->one_elems[x * m + y][a];
    int xb = model->one_elems[y * m + z][b];
    return model->one_token(x, z, model->c.c1.mul(xb, xa));
  };
  t.hcomp_mor = [model](int x, int y, int z, int b, int b2, int tb, int a,
                        int a2, int ta) {
    int m = model->c.c0.order();
    int xb = model->one_elems[y * m + z][b];
    int xb2 = model->one_elems[y * m + z][b2];
    int xa = model->one_elems[x * m + y][a];
    int xa2 = model->one_elems[x * m + y][a2];
    int zb = model->two_elems[xb][xb2][tb];
    int za = model->two_elems[xa][xa2][ta];
    return model->two_token(model->c.c1.mul(xb, xa),
                            model->c.c1.mul(xb2, xa2),
                            model->c.c2.mul(zb, za));
  };
  return finish_two_groupoid(std::move(t), "two_group_of_complex");
}

}  // namespace xmodkit
