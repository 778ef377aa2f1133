#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "xmodkit/core.hpp"
#include "xmodkit/fingroup.hpp"

namespace xmodkit {

/// A finite groupoid. Morphism tokens are opaque integers scoped to each
/// ordered object pair; the identity token in mor(x,x) is always 0.
/// compose(x,y,z,second,first) is the composite of first: x->y followed by
/// second: y->z. Immutable after validation.
class Groupoid {
 public:
  Groupoid() = default;

  int num_objects() const { return n_; }
  int hom_size(int x, int y) const { return sizes_[x * n_ + y]; }
  int identity(int /*x*/) const { return 0; }

  int compose(int x, int y, int z, int second, int first) const {
    return comp_[(x * n_ + y) * n_ + z][second * hom_size(x, y) + first];
  }

  int inverse(int x, int y, int t) const { return inv_[x * n_ + y][t]; }

  long long total_morphisms() const {
    long long s = 0;
    for (int v : sizes_) s += v;
    return s;
  }

  /// Builds and exhaustively validates a groupoid from hom-set sizes and a
  /// composition callback.
  static Groupoid make(
      int n, const std::vector<std::vector<int>>& sizes,
      const std::function<int(int, int, int, int, int)>& compose_fn) {
    Groupoid g;
    g.n_ = n;
    g.sizes_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) g.sizes_[x * n + y] = sizes[x][y];
    require_budget(g.total_morphisms(), "Groupoid::make");
    for (int x = 0; x < n; ++x)
      if (g.hom_size(x, x) < 1)
        throw ValidationError("MissingIdentity",
                              "object " + std::to_string(x));
    g.comp_.assign(static_cast<std::size_t>(n) * n * n, {});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          auto& tbl = g.comp_[(x * n + y) * n + z];
          tbl.assign(static_cast<std::size_t>(g.hom_size(y, z)) *
                         g.hom_size(x, y),
                     -1);
          for (int b = 0; b < g.hom_size(y, z); ++b)
            for (int a = 0; a < g.hom_size(x, y); ++a) {
              int r = compose_fn(x, y, z, b, a);
              if (r < 0 || r >= g.hom_size(x, z))
                throw ValidationError(
                    "BadComposition",
                    "composite out of range at (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")");
              tbl[b * g.hom_size(x, y) + a] = r;
            }
        }
    g.validate();
    return g;
  }

 private:
  void validate() {
    int n = n_;
    // unit laws: token 0 of mor(x,x) is a two-sided identity
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int a = 0; a < hom_size(x, y); ++a) {
          if (compose(x, x, y, a, 0) != a)
            throw ValidationError("UnitLawFails",
                                  "right unit at (" + std::to_string(x) +
                                      "->" + std::to_string(y) + ", token " +
                                      std::to_string(a) + ")");
          if (compose(x, y, y, 0, a) != a)
            throw ValidationError("UnitLawFails",
                                  "left unit at (" + std::to_string(x) +
                                      "->" + std::to_string(y) + ", token " +
                                      std::to_string(a) + ")");
        }
    // associativity
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int w = 0; w < n; ++w)
            for (int c = 0; c < hom_size(z, w); ++c)
              for (int b = 0; b < hom_size(y, z); ++b)
                for (int a = 0; a < hom_size(x, y); ++a)
                  if (compose(x, y, w, compose(y, z, w, c, b), a) !=
                      compose(x, z, w, c, compose(x, y, z, b, a)))
                    throw ValidationError(
                        "NotAssociative",
                        "objects (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + "," +
                            std::to_string(w) + ") tokens (" +
                            std::to_string(c) + "," + std::to_string(b) + "," +
                            std::to_string(a) + ")");
    // two-sided inverses
    inv_.assign(static_cast<std::size_t>(n) * n, {});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto& iv = inv_[x * n + y];
        iv.assign(hom_size(x, y), -1);
        for (int a = 0; a < hom_size(x, y); ++a) {
          for (int b = 0; b < hom_size(y, x); ++b)
            if (compose(x, y, x, b, a) == 0 && compose(y, x, y, a, b) == 0) {
              iv[a] = b;
              break;
            }
          if (iv[a] < 0)
            throw ValidationError("MissingInverse",
                                  "morphism (" + std::to_string(x) + "->" +
                                      std::to_string(y) + ", token " +
                                      std::to_string(a) + ")");
        }
      }
  }

  int n_ = 0;
  std::vector<int> sizes_;
  std::vector<std::vector<int>> comp_;
  std::vector<std::vector<int>> inv_;
};

/// A functor between finite groupoids: object map plus a token map per
/// ordered object pair. Validated exhaustively.
struct GroupoidFunctor {
  Groupoid source;
  Groupoid target;
  std::vector<int> obj_map;
  std::vector<std::vector<int>> mor_map;  // [x*n+y][token]

  int apply_obj(int x) const { return obj_map[x]; }
  int apply_mor(int x, int y, int t) const {
    return mor_map[x * source.num_objects() + y][t];
  }
};

inline GroupoidFunctor make_functor(
    const Groupoid& source, const Groupoid& target,
    const std::vector<int>& obj_map,
    const std::vector<std::vector<int>>& mor_map) {
  int n = source.num_objects();
  for (int x : obj_map)
    if (x < 0 || x >= target.num_objects())
      throw ValidationError("BadFunctor", "object image out of range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& mm = mor_map[x * n + y];
      if (static_cast<int>(mm.size()) != source.hom_size(x, y))
        throw ValidationError("BadFunctor",
                              "morphism map size mismatch at (" +
                                  std::to_string(x) + "," +
                                  std::to_string(y) + ")");
      for (int t : mm)
        if (t < 0 || t >= target.hom_size(obj_map[x], obj_map[y]))
          throw ValidationError("BadFunctor",
                                "morphism image out of range at (" +
                                    std::to_string(x) + "," +
                                    std::to_string(y) + ")");
    }
  for (int x = 0; x < n; ++x)
    if (mor_map[x * n + x][0] != 0)
      throw ValidationError("NotFunctorial",
                            "identity of object " + std::to_string(x) +
                                " not preserved");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int b = 0; b < source.hom_size(y, z); ++b)
          for (int a = 0; a < source.hom_size(x, y); ++a) {
            int lhs = mor_map[x * n + z][source.compose(x, y, z, b, a)];
            int rhs = target.compose(obj_map[x], obj_map[y], obj_map[z],
                                     mor_map[y * n + z][b],
                                     mor_map[x * n + y][a]);
            if (lhs != rhs)
              throw ValidationError("NotFunctorial",
                                    "composition at (" + std::to_string(x) +
                                        "," + std::to_string(y) + "," +
                                        std::to_string(z) + ") tokens (" +
                                        std::to_string(b) + "," +
                                        std::to_string(a) + ")");
          }
  return GroupoidFunctor{source, target, obj_map, mor_map};
}

inline GroupoidFunctor identity_functor(const Groupoid& g) {
  int n = g.num_objects();
  std::vector<int> obj(n);
  std::iota(obj.begin(), obj.end(), 0);
  std::vector<std::vector<int>> mor(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mor[x * n + y].resize(g.hom_size(x, y));
      std::iota(mor[x * n + y].begin(), mor[x * n + y].end(), 0);
    }
  return make_functor(g, g, obj, mor);
}

/// A permutation action of a finite group on a finite set.
struct SetAction {
  FiniteGroup group;
  int set_size = 0;
  std::vector<std::vector<int>> perm;  // perm[g][x]

  int apply(int g, int x) const { return perm[g][x]; }
};

inline SetAction make_set_action(const FiniteGroup& group, int set_size,
                                 const std::vector<std::vector<int>>& perm) {
  if (static_cast<int>(perm.size()) != group.order())
    throw ValidationError("NotAnAction", "one permutation per group element "
                                         "required");
  for (const auto& p : perm) {
    if (static_cast<int>(p.size()) != set_size)
      throw ValidationError("NotAnAction", "permutation length mismatch");
    std::vector<bool> seen(set_size, false);
    for (int v : p) {
      if (v < 0 || v >= set_size || seen[v])
        throw ValidationError("NotAnAction", "assignment not a permutation");
      seen[v] = true;
    }
  }
  for (int x = 0; x < set_size; ++x)
    if (perm[0][x] != x)
      throw ValidationError("NotAnAction",
                            "identity moves point " + std::to_string(x));
  for (int g = 0; g < group.order(); ++g)
    for (int h = 0; h < group.order(); ++h)
      for (int x = 0; x < set_size; ++x)
        if (perm[group.mul(g, h)][x] != perm[g][perm[h][x]])
          throw ValidationError("NotAnAction",
                                "(" + std::to_string(g) + "," +
                                    std::to_string(h) + ") at point " +
                                    std::to_string(x));
  return SetAction{group, set_size, perm};
}

/// The quotient groupoid of a set by a group action: objects are the set,
/// mor(x,y) = {g | g·x = y} (tokens in increasing element order), and
/// composition is group multiplication.
struct QuotientSetGroupoid {
  Groupoid groupoid;
  SetAction action;
  std::vector<std::vector<int>> elems;  // elems[x*n+y][token] = group element

  int token_of(int x, int y, int g) const {
    const auto& v = elems[x * action.set_size + y];
    auto it = std::lower_bound(v.begin(), v.end(), g);
    return (it != v.end() && *it == g) ? static_cast<int>(it - v.begin()) : -1;
  }
  int element_of(int x, int y, int t) const {
    return elems[x * action.set_size + y][t];
  }
};

inline QuotientSetGroupoid quotient_set_groupoid(const SetAction& act) {
  int n = act.set_size;
  QuotientSetGroupoid q;
  q.action = act;
  q.elems.assign(static_cast<std::size_t>(n) * n, {});
  std::vector<std::vector<int>> sizes(n, std::vector<int>(n, 0));
  for (int g = 0; g < act.group.order(); ++g)
    for (int x = 0; x < n; ++x) q.elems[x * n + act.apply(g, x)].push_back(g);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto& v = q.elems[x * n + y];
      std::sort(v.begin(), v.end());
      sizes[x][y] = static_cast<int>(v.size());
    }
  q.groupoid = Groupoid::make(
      n, sizes, [&](int x, int y, int z, int second, int first) {
        int g = act.group.mul(q.elems[y * n + z][second],
                              q.elems[x * n + y][first]);
        return q.token_of(x, z, g);
      });
  return q;
}

/// Connected components with deterministic smallest-index representatives.
struct Partition {
  std::vector<int> class_of;  // object -> class id
  std::vector<int> reps;      // class id -> smallest object index

  int num_classes() const { return static_cast<int>(reps.size()); }
};

inline Partition pi0(const Groupoid& g) {
  int n = g.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.hom_size(x, y) > 0) {
        int a = find(x), b = find(y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  Partition p;
  p.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (r == x) {
      p.class_of[x] = static_cast<int>(p.reps.size());
      p.reps.push_back(x);
    }
  }
  for (int x = 0; x < n; ++x) p.class_of[x] = p.class_of[find(x)];
  return p;
}

/// mor(x,x) as a finite group under composition: mul(a,b) = a∘b (b first).
inline FiniteGroup aut_group(const Groupoid& g, int x) {
  int m = g.hom_size(x, x);
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) flat[a * m + b] = g.compose(x, x, x, a, b);
  return make_group(m, flat);
}

/// True iff every fiber of F is nonempty and connected; the witness names
/// the offending target object.
inline CheckResult is_gerbe(const GroupoidFunctor& f) {
  int n = f.source.num_objects();
  for (int t = 0; t < f.target.num_objects(); ++t) {
    std::vector<int> fiber;
    for (int x = 0; x < n; ++x)
      if (f.obj_map[x] == t) fiber.push_back(x);
    if (fiber.empty())
      return CheckResult::fail("empty fiber over target object " +
                               std::to_string(t));
    // connectivity via morphisms mapping to id_t
    std::vector<int> comp(fiber.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(std::size_t)> find = [&](std::size_t a) {
      while (comp[a] != static_cast<int>(a))
        a = comp[a] = comp[comp[a]];
      return static_cast<int>(a);
    };
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (std::size_t j = 0; j < fiber.size(); ++j)
        for (int m = 0; m < f.source.hom_size(fiber[i], fiber[j]); ++m)
          if (f.apply_mor(fiber[i], fiber[j], m) == 0) {
            int a = find(i), b = find(j);
            if (a != b) comp[std::max(a, b)] = std::min(a, b);
          }
    for (std::size_t i = 0; i < fiber.size(); ++i)
      if (find(i) != 0)
        return CheckResult::fail("disconnected fiber over target object " +
                                 std::to_string(t));
  }
  return CheckResult::pass();
}

/// True iff F is essentially surjective and fully faithful (exhaustive).
inline CheckResult is_equivalence(const GroupoidFunctor& f) {
  int n = f.source.num_objects();
  int m = f.target.num_objects();
  for (int t = 0; t < m; ++t) {
    bool hit = false;
    for (int x = 0; x < n && !hit; ++x)
      if (f.target.hom_size(f.obj_map[x], t) > 0) hit = true;
    if (!hit)
      return CheckResult::fail("not essentially surjective at target object " +
                               std::to_string(t));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int hs = f.source.hom_size(x, y);
      int ht = f.target.hom_size(f.obj_map[x], f.obj_map[y]);
      std::vector<bool> hit(ht, false);
      for (int a = 0; a < hs; ++a) {
        int img = f.apply_mor(x, y, a);
        if (hit[img])
          return CheckResult::fail("not faithful at (" + std::to_string(x) +
                                   "->" + std::to_string(y) + ")");
        hit[img] = true;
      }
      for (int b = 0; b < ht; ++b)
        if (!hit[b])
          return CheckResult::fail("not full at (" + std::to_string(x) +
                                   "->" + std::to_string(y) + ")");
    }
  return CheckResult::pass();
}

}  // namespace xmodkit
