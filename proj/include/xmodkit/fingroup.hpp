#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "xmodkit/core.hpp"

namespace xmodkit {

/// A finite group given by its multiplication table. Element 0 is the
/// identity; elements are indices 0..order-1 with no intrinsic labels.
/// Instances are immutable after validation.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<int>& flat_table() const { return table_; }

  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }

  int element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

  friend FiniteGroup make_group(int order, const std::vector<int>& flat);

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
};

/// Validates a multiplication table and returns the group.
/// Errors name the first violating tuple: NoIdentityAtZero, NotAssociative,
/// MissingInverse, BadTable.
inline FiniteGroup make_group(int order, const std::vector<int>& flat) {
  if (order <= 0 || static_cast<long long>(order) * order !=
                        static_cast<long long>(flat.size()))
    throw ValidationError("BadTable", "expected " + std::to_string(order) +
                                          "x" + std::to_string(order) +
                                          " entries");
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] < 0 || flat[i] >= order)
      throw ValidationError("BadTable", "entry " + std::to_string(i) +
                                            " out of range: " +
                                            std::to_string(flat[i]));
  FiniteGroup g;
  g.n_ = order;
  g.table_ = flat;
  for (int a = 0; a < order; ++a) {
    if (g.mul(0, a) != a)
      throw ValidationError("NoIdentityAtZero",
                            "0*" + std::to_string(a) + " = " +
                                std::to_string(g.mul(0, a)));
    if (g.mul(a, 0) != a)
      throw ValidationError("NoIdentityAtZero",
                            std::to_string(a) + "*0 = " +
                                std::to_string(g.mul(a, 0)));
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError("NotAssociative",
                                "(" + std::to_string(a) + "," +
                                    std::to_string(b) + "," +
                                    std::to_string(c) + ")");
  g.inv_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0)
      throw ValidationError("MissingInverse", "element " + std::to_string(a));
  }
  return g;
}

inline FiniteGroup make_group(const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw ValidationError("BadTable", "non-square table");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return make_group(static_cast<int>(rows.size()), flat);
}

inline FiniteGroup trivial_group() { return make_group(1, {0}); }

inline FiniteGroup cyclic_group(int n) {
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[a * n + b] = (a + b) % n;
  return make_group(n, flat);
}

/// A group homomorphism, stored as an element-index map of length
/// source.order.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> map;

  int apply(int a) const { return map[a]; }
};

inline GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target,
                         const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.order())
    throw ValidationError("BadHom", "map length " +
                                        std::to_string(map.size()) +
                                        " != source order " +
                                        std::to_string(source.order()));
  for (int v : map)
    if (v < 0 || v >= target.order())
      throw ValidationError("BadHom", "image out of range: " +
                                          std::to_string(v));
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        throw ValidationError("NotHomomorphism",
                              "(" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
  return GroupHom{source, target, map};
}

inline GroupHom zero_hom(const FiniteGroup& source,
                         const FiniteGroup& target) {
  return make_hom(source, target, std::vector<int>(source.order(), 0));
}

inline GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<int> m(g.order());
  for (int i = 0; i < g.order(); ++i) m[i] = i;
  return make_hom(g, g, m);
}

inline GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
  std::vector<int> m(inner.source.order());
  for (int i = 0; i < inner.source.order(); ++i)
    m[i] = outer.apply(inner.apply(i));
  return make_hom(inner.source, outer.target, m);
}

/// An action of `actor` on `acted` by group automorphisms.
struct AutoAction {
  FiniteGroup actor;
  FiniteGroup acted;
  std::vector<std::vector<int>> perms;  // perms[g][x] = image of x under g

  int apply(int g, int x) const { return perms[g][x]; }
};

inline AutoAction make_auto_action(const FiniteGroup& actor,
                                   const FiniteGroup& acted,
                                   const std::vector<std::vector<int>>& perms) {
  if (static_cast<int>(perms.size()) != actor.order())
    throw ValidationError("BadAction", "expected one permutation per actor "
                                       "element");
  for (int g = 0; g < actor.order(); ++g) {
    const auto& p = perms[g];
    if (static_cast<int>(p.size()) != acted.order())
      throw ValidationError("BadAction",
                            "permutation " + std::to_string(g) +
                                " has wrong length");
    std::vector<bool> seen(acted.order(), false);
    for (int v : p) {
      if (v < 0 || v >= acted.order() || seen[v])
        throw ValidationError("NotAutomorphism",
                              "assignment " + std::to_string(g) +
                                  " is not a permutation");
      seen[v] = true;
    }
    for (int a = 0; a < acted.order(); ++a)
      for (int b = 0; b < acted.order(); ++b)
        if (p[acted.mul(a, b)] != acted.mul(p[a], p[b]))
          throw ValidationError("NotAutomorphism",
                                "g=" + std::to_string(g) + " at (" +
                                    std::to_string(a) + "," +
                                    std::to_string(b) + ")");
  }
  for (int a = 0; a < acted.order(); ++a)
    if (perms[0][a] != a)
      throw ValidationError("IdentityActsNontrivially",
                            "element " + std::to_string(a));
  for (int g = 0; g < actor.order(); ++g)
    for (int h = 0; h < actor.order(); ++h)
      for (int a = 0; a < acted.order(); ++a)
        if (perms[actor.mul(g, h)][a] != perms[g][perms[h][a]])
          throw ValidationError("NotActionHom",
                                "(" + std::to_string(g) + "," +
                                    std::to_string(h) + ") at " +
                                    std::to_string(a));
  return AutoAction{actor, acted, perms};
}

inline AutoAction trivial_auto_action(const FiniteGroup& actor,
                                      const FiniteGroup& acted) {
  std::vector<int> id(acted.order());
  for (int i = 0; i < acted.order(); ++i) id[i] = i;
  return make_auto_action(actor, acted,
                          std::vector<std::vector<int>>(actor.order(), id));
}

/// Conjugation action of a group on itself.
inline AutoAction conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<int>> perms(g.order(),
                                      std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) perms[a][x] = g.conj(a, x);
  return make_auto_action(g, g, perms);
}

/// A subgroup realized as a fresh FiniteGroup plus the inclusion indices.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embed;  // embed[i] = ambient index of element i

  int index_of(int ambient) const {
    auto it = std::lower_bound(embed.begin(), embed.end(), ambient);
    if (it == embed.end() || *it != ambient) return -1;
    return static_cast<int>(it - embed.begin());
  }
};

/// Builds the subgroup on a set of ambient elements (must be closed and
/// contain the identity; checked).
inline Subgroup subgroup_from_elements(const FiniteGroup& ambient,
                                       std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0)
    throw ValidationError("BadSubgroup", "identity not in element set");
  auto pos = [&](int a) {
    auto it = std::lower_bound(elems.begin(), elems.end(), a);
    return (it != elems.end() && *it == a)
               ? static_cast<int>(it - elems.begin())
               : -1;
  };
  int m = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = pos(ambient.mul(elems[i], elems[j]));
      if (p < 0)
        throw ValidationError("BadSubgroup",
                              "not closed at (" + std::to_string(elems[i]) +
                                  "," + std::to_string(elems[j]) + ")");
      flat[i * m + j] = p;
    }
  return Subgroup{make_group(m, flat), elems};
}

/// A quotient realized as a fresh FiniteGroup plus the projection indices.
struct Quotient {
  FiniteGroup group;
  std::vector<int> project;  // project[a] = class index of ambient element a
};

inline bool is_normal_subset(const FiniteGroup& g,
                             const std::vector<int>& elems) {
  std::vector<bool> in(g.order(), false);
  for (int e : elems) in[e] = true;
  for (int s = 0; s < g.order(); ++s)
    for (int e : elems)
      if (!in[g.conj(s, e)]) return false;
  return true;
}

/// Quotient by a normal subgroup given by its element set. Class indices are
/// ordered by smallest coset representative, so the identity class is 0.
inline Quotient quotient_by_normal(const FiniteGroup& g,
                                   const std::vector<int>& normal_elems) {
  subgroup_from_elements(g, normal_elems);  // closure + identity
  if (!is_normal_subset(g, normal_elems))
    throw ValidationError("NotNormal", "subgroup is not normal");
  std::vector<int> coset_rep(g.order(), -1);
  for (int a = 0; a < g.order(); ++a) {
    if (coset_rep[a] >= 0) continue;
    for (int e : normal_elems) {
      int b = g.mul(a, e);
      if (coset_rep[b] < 0) coset_rep[b] = a;
    }
    // a is the smallest element of its coset since we scan in order.
  }
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a)
    if (coset_rep[a] == a) reps.push_back(a);
  std::vector<int> project(g.order());
  for (int a = 0; a < g.order(); ++a)
    project[a] = static_cast<int>(
        std::lower_bound(reps.begin(), reps.end(), coset_rep[a]) -
        reps.begin());
  int m = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      flat[i * m + j] = project[g.mul(reps[i], reps[j])];
  return Quotient{make_group(m, flat), project};
}

/// Kernel of a homomorphism, as a subgroup of the source.
inline Subgroup kernel_of(const GroupHom& h) {
  std::vector<int> elems;
  for (int a = 0; a < h.source.order(); ++a)
    if (h.apply(a) == 0) elems.push_back(a);
  return subgroup_from_elements(h.source, elems);
}

inline std::vector<int> image_elements(const GroupHom& h) {
  std::vector<int> img;
  for (int a = 0; a < h.source.order(); ++a) img.push_back(h.apply(a));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

/// Cokernel of a homomorphism with central image. Checks centrality and
/// reports a witness pair on failure.
inline Quotient coker_central(const GroupHom& h) {
  auto img = image_elements(h);
  for (int e : img)
    for (int t = 0; t < h.target.order(); ++t)
      if (h.target.mul(e, t) != h.target.mul(t, e))
        throw ValidationError("ImageNotCentral",
                              "image element " + std::to_string(e) +
                                  " does not commute with " +
                                  std::to_string(t));
  return quotient_by_normal(h.target, img);
}

/// Semidirect product B ⋉ N for an action of B on N by automorphisms.
/// Elements are pairs (b, n) encoded as b*|N|+n, representing the word b·n
/// with n·b = b·(action(inv b, n)); so
/// (b,n)(b',n') = (bb', action(inv b', n)·n').
struct SemidirectProduct {
  FiniteGroup group;
  int b_order = 0;
  int n_order = 0;

  int encode(int b, int n) const { return b * n_order + n; }
  int b_of(int s) const { return s / n_order; }
  int n_of(int s) const { return s % n_order; }
};

inline SemidirectProduct semidirect_product(const FiniteGroup& b0,
                                            const FiniteGroup& n,
                                            const AutoAction& via) {
  if (!(via.actor == b0) || !(via.acted == n))
    throw ValidationError("ActorMismatch",
                          "action does not match the given factors");
  int bn = b0.order(), nn = n.order();
  int m = bn * nn;
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int b = 0; b < bn; ++b)
    for (int x = 0; x < nn; ++x)
      for (int b2 = 0; b2 < bn; ++b2)
        for (int x2 = 0; x2 < nn; ++x2) {
          int rb = b0.mul(b, b2);
          int rx = n.mul(via.apply(b0.inv(b2), x), x2);
          flat[(b * nn + x) * m + (b2 * nn + x2)] = rb * nn + rx;
        }
  SemidirectProduct s;
  s.group = make_group(m, flat);
  s.b_order = bn;
  s.n_order = nn;
  return s;
}

inline SemidirectProduct direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  return semidirect_product(a, b, trivial_auto_action(a, b));
}

inline GroupHom semidirect_inject_b(const SemidirectProduct& s,
                                    const FiniteGroup& b0) {
  std::vector<int> m(b0.order());
  for (int b = 0; b < b0.order(); ++b) m[b] = s.encode(b, 0);
  return make_hom(b0, s.group, m);
}

inline GroupHom semidirect_inject_n(const SemidirectProduct& s,
                                    const FiniteGroup& n) {
  std::vector<int> m(n.order());
  for (int x = 0; x < n.order(); ++x) m[x] = s.encode(0, x);
  return make_hom(n, s.group, m);
}

inline GroupHom semidirect_project_b(const SemidirectProduct& s,
                                     const FiniteGroup& b0) {
  std::vector<int> m(s.group.order());
  for (int x = 0; x < s.group.order(); ++x) m[x] = s.b_of(x);
  return make_hom(s.group, b0, m);
}

namespace detail {

inline std::vector<int> generated_subgroup(const FiniteGroup& g,
                                           const std::vector<int>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> stack{0}, out{0};
  in[0] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int x : gens) {
      int b = g.mul(a, x);
      if (!in[b]) {
        in[b] = true;
        out.push_back(b);
        stack.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool extend_iso(const FiniteGroup& g, const FiniteGroup& h,
                       const std::vector<int>& gens, std::size_t k,
                       std::vector<int>& map) {
  if (k == gens.size()) {
    // Close the partial map over products of generators.
    std::vector<int> full(g.order(), -1);
    full[0] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < g.order(); ++a) {
        if (full[a] < 0) continue;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          int b = g.mul(a, gens[i]);
          int img = h.mul(full[a], map[i]);
          if (full[b] < 0) {
            full[b] = img;
            changed = true;
          } else if (full[b] != img) {
            return false;
          }
        }
      }
    }
    std::vector<bool> hit(h.order(), false);
    for (int a = 0; a < g.order(); ++a) {
      if (full[a] < 0 || hit[full[a]]) return false;
      hit[full[a]] = true;
    }
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (full[g.mul(a, b)] != h.mul(full[a], full[b])) return false;
    map = full;
    return true;
  }
  int ord = g.element_order(gens[k]);
  for (int cand = 0; cand < h.order(); ++cand) {
    if (h.element_order(cand) != ord) continue;
    map.resize(k + 1);
    map[k] = cand;
    std::vector<int> saved(map.begin(), map.begin() + k + 1);
    if (extend_iso(g, h, gens, k + 1, map)) return true;
    map = saved;
  }
  return false;
}

}  // namespace detail

/// Bounded backtracking search for an explicit isomorphism G -> H over
/// generator images; deterministic ordering. Returns the full element map on
/// success.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                        const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int a = 1; a < g.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = detail::generated_subgroup(g, gens);
    if (static_cast<int>(span.size()) == g.order()) break;
  }
  std::vector<int> map;
  if (g.order() == 1) return std::vector<int>{0};
  if (detail::extend_iso(g, h, gens, 0, map)) return map;
  return std::nullopt;
}

/// Invariant factors of a finite abelian group, largest first
/// (e.g. Z/4 x Z/2 -> {4, 2}).
inline std::vector<int> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw ValidationError("NotAbelian", "invariant factors need an abelian "
                                        "group");
  std::vector<int> out;
  FiniteGroup cur = g;
  while (cur.order() > 1) {
    int best = 1, best_ord = 1;
    for (int a = 1; a < cur.order(); ++a) {
      int o = cur.element_order(a);
      if (o > best_ord) {
        best_ord = o;
        best = a;
      }
    }
    out.push_back(best_ord);
    cur = quotient_by_normal(cur,
                             detail::generated_subgroup(cur, {best}))
              .group;
  }
  return out;
}

}  // namespace xmodkit
