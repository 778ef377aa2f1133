#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xmodkit/core.hpp"
#include "xmodkit/groupoid.hpp"

namespace xmodkit {

/// A finite strict 2-groupoid. Objects are indices; hom(x,y) is a Groupoid
/// whose objects are the 1-morphisms x->y and whose morphisms are the
/// 2-morphisms. Horizontal composition is given by callbacks:
///   hcomp_obj(x,y,z, b, a)  = composite of a: x->y followed by b: y->z;
///   hcomp_mor(x,y,z, b,b2,tb, a,a2,ta) = horizontal composite of the 2-cell
///     tb: b=>b2 in hom(y,z) with ta: a=>a2 in hom(x,y), a 2-cell
///     hcomp_obj(b,a) => hcomp_obj(b2,a2).
struct TwoGroupoid {
  int n = 0;
  std::vector<Groupoid> hom;  // hom[x*n+y]
  std::vector<int> id1;       // identity 1-morphism per object
  std::function<int(int, int, int, int, int)> hcomp_obj;
  std::function<int(int, int, int, int, int, int, int, int, int)> hcomp_mor;

  const Groupoid& H(int x, int y) const { return hom[x * n + y]; }

  long long total_morphisms() const {
    long long s = 0;
    for (const auto& h : hom) s += h.num_objects() + h.total_morphisms();
    return s;
  }
};

namespace detail {

/// Flat enumeration of the 2-cells of one hom-groupoid, plus tabulated
/// horizontal composition. Tabulating first keeps the exhaustive law checks
/// at array-lookup cost.
struct TwoGroupoidTables {
  int n = 0;
  // cell_off[x*n+y][a][a2] = flat id of the first 2-cell a => a2
  std::vector<std::vector<std::vector<int>>> cell_off;
  std::vector<int> cell_count;  // per hom pair
  // cell_src/cell_tgt/cell_tok[x*n+y][id]
  std::vector<std::vector<int>> cell_src, cell_tgt, cell_tok;
  // ho[(x*n+y)*n+z][b * H(x,y).num_objects() + a]
  std::vector<std::vector<int>> ho;
  // hm[(x*n+y)*n+z][idyz * cell_count(x,y) + idxy] = flat id in (x,z)
  std::vector<std::vector<int>> hm;

  int flat(int x, int y, int a, int a2, int tok) const {
    return cell_off[x * n + y][a][a2] + tok;
  }

  explicit TwoGroupoidTables(const TwoGroupoid& t) : n(t.n) {
    cell_off.resize(static_cast<std::size_t>(n) * n);
    cell_count.resize(static_cast<std::size_t>(n) * n);
    cell_src.resize(static_cast<std::size_t>(n) * n);
    cell_tgt.resize(static_cast<std::size_t>(n) * n);
    cell_tok.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const Groupoid& h = t.H(x, y);
        auto& off = cell_off[x * n + y];
        off.assign(h.num_objects(),
                   std::vector<int>(h.num_objects(), 0));
        int cnt = 0;
        for (int a = 0; a < h.num_objects(); ++a)
          for (int a2 = 0; a2 < h.num_objects(); ++a2) {
            off[a][a2] = cnt;
            for (int tok = 0; tok < h.hom_size(a, a2); ++tok) {
              cell_src[x * n + y].push_back(a);
              cell_tgt[x * n + y].push_back(a2);
              cell_tok[x * n + y].push_back(tok);
              ++cnt;
            }
          }
        cell_count[x * n + y] = cnt;
      }
    ho.resize(static_cast<std::size_t>(n) * n * n);
    hm.resize(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int kyz = t.H(y, z).num_objects();
          int kxy = t.H(x, y).num_objects();
          auto& o = ho[(x * n + y) * n + z];
          o.assign(static_cast<std::size_t>(kyz) * kxy, -1);
          for (int b = 0; b < kyz; ++b)
            for (int a = 0; a < kxy; ++a)
              o[b * kxy + a] = t.hcomp_obj(x, y, z, b, a);
          int cyz = cell_count[y * n + z];
          int cxy = cell_count[x * n + y];
          auto& m = hm[(x * n + y) * n + z];
          m.assign(static_cast<std::size_t>(cyz) * cxy, -1);
          for (int ib = 0; ib < cyz; ++ib)
            for (int ia = 0; ia < cxy; ++ia) {
              int b = cell_src[y * n + z][ib];
              int b2 = cell_tgt[y * n + z][ib];
              int tb = cell_tok[y * n + z][ib];
              int a = cell_src[x * n + y][ia];
              int a2 = cell_tgt[x * n + y][ia];
              int ta = cell_tok[x * n + y][ia];
              int r = t.hcomp_mor(x, y, z, b, b2, tb, a, a2, ta);
              int src = o[b * kxy + a];
              int tgt = o[b2 * kxy + a2];
              if (r >= 0 && r < t.H(x, z).hom_size(src, tgt))
                m[ib * cxy + ia] = cell_off[x * n + z][src][tgt] + r;
            }
        }
  }
};

}  // namespace detail

/// Exhaustive verification of the strict 2-groupoid laws; one line per law
/// family, each with the first witness on failure.
inline Transcript check_two_groupoid(const TwoGroupoid& t) {
  Transcript tr;
  tr.name = "two-groupoid-laws";
  int n = t.n;
  auto fail = [&](const std::string& label, const std::string& w) {
    tr.add(label, CheckResult::fail(w));
  };
  detail::TwoGroupoidTables tab(t);
  // flat-id vertical composition within one hom pair; -1 if not composable
  auto vcomp = [&](int x, int y, int i1, int i2) {
    const auto& src = tab.cell_src[x * n + y];
    const auto& tgt = tab.cell_tgt[x * n + y];
    if (tgt[i1] != src[i2]) return -1;
    int tok = t.H(x, y).compose(src[i1], tgt[i1], tgt[i2],
                                tab.cell_tok[x * n + y][i2],
                                tab.cell_tok[x * n + y][i1]);
    return tab.flat(x, y, src[i1], tgt[i2], tok);
  };

  // identity 1-morphisms and unit law for horizontal composition
  {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int kxy = t.H(x, y).num_objects();
        for (int a = 0; a < kxy && ok; ++a) {
          if (tab.ho[(x * n + y) * n + y][t.id1[y] * kxy + a] != a ||
              tab.ho[(x * n + x) * n + y][a * t.H(x, x).num_objects() +
                                          t.id1[x]] != a) {
            fail("unit-1",
                 "1-morphism (" + std::to_string(x) + "->" +
                     std::to_string(y) + ", " + std::to_string(a) + ")");
            ok = false;
          }
        }
      }
    if (ok) tr.add("unit-1", CheckResult::pass());
  }

  // associativity of horizontal composition on 1-morphisms
  {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          for (int w = 0; w < n && ok; ++w) {
            int kxy = t.H(x, y).num_objects();
            int kyz = t.H(y, z).num_objects();
            int kzw = t.H(z, w).num_objects();
            int kxz = t.H(x, z).num_objects();
            for (int c = 0; c < kzw && ok; ++c)
              for (int b = 0; b < kyz && ok; ++b)
                for (int a = 0; a < kxy && ok; ++a) {
                  int cb = tab.ho[(y * n + z) * n + w][c * kyz + b];
                  int ba = tab.ho[(x * n + y) * n + z][b * kxy + a];
                  if (tab.ho[(x * n + y) * n + w][cb * kxy + a] !=
                      tab.ho[(x * n + z) * n + w][c * kxz + ba]) {
                    fail("assoc-1", "objects (" + std::to_string(x) + "," +
                                        std::to_string(y) + "," +
                                        std::to_string(z) + "," +
                                        std::to_string(w) + ")");
                    ok = false;
                  }
                }
          }
    if (ok) tr.add("assoc-1", CheckResult::pass());
  }

  // hcomp_mor well-typed and functorial: preserves identity 2-cells and
  // vertical composition (the interchange law)
  {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) {
          int kxy = t.H(x, y).num_objects();
          int kyz = t.H(y, z).num_objects();
          int cxy = tab.cell_count[x * n + y];
          const auto& m = tab.hm[(x * n + y) * n + z];
          const auto& o = tab.ho[(x * n + y) * n + z];
          for (int b = 0; b < kyz && ok; ++b)
            for (int a = 0; a < kxy && ok; ++a) {
              int ib = tab.flat(y, z, b, b, 0);
              int ia = tab.flat(x, y, a, a, 0);
              int ba = o[b * kxy + a];
              if (m[ib * cxy + ia] != tab.flat(x, z, ba, ba, 0)) {
                fail("interchange",
                     "identity 2-cells not preserved at 1-morphisms (" +
                         std::to_string(b) + "," + std::to_string(a) + ")");
                ok = false;
              }
            }
          // interchange: (β'∘β) * (α'∘α) = (β'*α') ∘ (β*α)
          int cyz = tab.cell_count[y * n + z];
          for (int ib1 = 0; ib1 < cyz && ok; ++ib1)
            for (int ib2 = 0; ib2 < cyz && ok; ++ib2) {
              int ivb = vcomp(y, z, ib1, ib2);
              if (ivb < 0) continue;
              for (int ia1 = 0; ia1 < cxy && ok; ++ia1)
                for (int ia2 = 0; ia2 < cxy && ok; ++ia2) {
                  int iva = vcomp(x, y, ia1, ia2);
                  if (iva < 0) continue;
                  int lhs = m[ivb * cxy + iva];
                  int rhs = vcomp(x, z, m[ib1 * cxy + ia1],
                                  m[ib2 * cxy + ia2]);
                  if (lhs < 0 || lhs != rhs) {
                    fail("interchange",
                         "at objects (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) +
                             ")");
                    ok = false;
                  }
                }
            }
        }
    if (ok) tr.add("interchange", CheckResult::pass());
  }

  // unit and associativity of horizontal composition on 2-cells
  {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int cxy = tab.cell_count[x * n + y];
        int cxx = tab.cell_count[x * n + x];
        for (int ia = 0; ia < cxy && ok; ++ia) {
          int iy = tab.flat(y, y, t.id1[y], t.id1[y], 0);
          int ix = tab.flat(x, x, t.id1[x], t.id1[x], 0);
          int l = tab.hm[(x * n + y) * n + y][iy * cxy + ia];
          int r = tab.hm[(x * n + x) * n + y][ia * cxx + ix];
          if (l != ia || r != ia) {
            fail("unit-2", "2-cell at (" + std::to_string(x) + "->" +
                               std::to_string(y) + ")");
            ok = false;
          }
        }
      }
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          for (int w = 0; w < n && ok; ++w) {
            int cxy = tab.cell_count[x * n + y];
            int cyz = tab.cell_count[y * n + z];
            int czw = tab.cell_count[z * n + w];
            int cxz = tab.cell_count[x * n + z];
            const auto& m_yzw = tab.hm[(y * n + z) * n + w];
            const auto& m_xyw = tab.hm[(x * n + y) * n + w];
            const auto& m_xyz = tab.hm[(x * n + y) * n + z];
            const auto& m_xzw = tab.hm[(x * n + z) * n + w];
            for (int ic = 0; ic < czw && ok; ++ic)
              for (int ib = 0; ib < cyz && ok; ++ib) {
                int icb = m_yzw[ic * cyz + ib];
                for (int ia = 0; ia < cxy && ok; ++ia) {
                  int lhs = (icb < 0) ? -1 : m_xyw[icb * cxy + ia];
                  int iba = m_xyz[ib * cxy + ia];
                  int rhs = (iba < 0) ? -1 : m_xzw[ic * cxz + iba];
                  if (lhs < 0 || lhs != rhs) {
                    fail("assoc-2",
                         "at objects (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) +
                             "," + std::to_string(w) + ")");
                    ok = false;
                  }
                }
              }
          }
    if (ok) tr.add("assoc-2", CheckResult::pass());
  }

  // every 1-morphism is invertible up to a 2-cell
  {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int a = 0; a < t.H(x, y).num_objects() && ok; ++a) {
          bool found = false;
          for (int b = 0; b < t.H(y, x).num_objects() && !found; ++b) {
            int ba = t.hcomp_obj(x, y, x, b, a);
            int ab = t.hcomp_obj(y, x, y, a, b);
            if (t.H(x, x).hom_size(ba, t.id1[x]) > 0 &&
                t.H(y, y).hom_size(ab, t.id1[y]) > 0)
              found = true;
          }
          if (!found) {
            fail("invertible-1", "1-morphism (" + std::to_string(x) + "->" +
                                     std::to_string(y) + ", " +
                                     std::to_string(a) + ")");
            ok = false;
          }
        }
    if (ok) tr.add("invertible-1", CheckResult::pass());
  }

  return tr;
}

/// Validates a freshly built 2-groupoid, throwing on the first violated law.
inline TwoGroupoid finish_two_groupoid(TwoGroupoid t,
                                       const std::string& where) {
  require_budget(t.total_morphisms(), where);
  Transcript tr = check_two_groupoid(t);
  for (const auto& [label, r] : tr.lines)
    if (!r.ok) throw ValidationError("TwoGroupoidLawFails",
                                     where + ": " + label + ": " + r.witness);
  return t;
}

/// A candidate strict isomorphism of 2-groupoids: bijective on objects,
/// 1-morphisms, and 2-cells, preserving all structure.
struct TwoGroupoidMap {
  std::vector<int> obj_map;
  std::vector<std::vector<int>> one_map;  // [x*n+y][1-morphism]
  // 2-cell map: (x, y, a, a2, token) -> token between mapped 1-morphisms
  std::function<int(int, int, int, int, int)> two_map;
};

/// Checks that `m` is a strict isomorphism from s to t; the witness names
/// the level and first violation.
inline CheckResult check_strict_iso(const TwoGroupoid& s, const TwoGroupoid& t,
                                    const TwoGroupoidMap& m) {
  int n = s.n;
  if (t.n != n) return CheckResult::fail("objects: object counts differ");
  std::vector<bool> hit(n, false);
  for (int x : m.obj_map) {
    if (x < 0 || x >= n || hit[x])
      return CheckResult::fail("objects: map is not a bijection");
    hit[x] = true;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Groupoid& hs = s.H(x, y);
      const Groupoid& ht = t.H(m.obj_map[x], m.obj_map[y]);
      const auto& om = m.one_map[x * n + y];
      if (static_cast<int>(om.size()) != hs.num_objects() ||
          hs.num_objects() != ht.num_objects())
        return CheckResult::fail("1-morphisms: count mismatch at (" +
                                 std::to_string(x) + "," + std::to_string(y) +
                                 ")");
      std::vector<bool> used(ht.num_objects(), false);
      for (int a = 0; a < hs.num_objects(); ++a) {
        if (om[a] < 0 || om[a] >= ht.num_objects() || used[om[a]])
          return CheckResult::fail("1-morphisms: not a bijection at (" +
                                   std::to_string(x) + "," +
                                   std::to_string(y) + ")");
        used[om[a]] = true;
      }
      for (int a = 0; a < hs.num_objects(); ++a)
        for (int a2 = 0; a2 < hs.num_objects(); ++a2) {
          if (hs.hom_size(a, a2) != ht.hom_size(om[a], om[a2]))
            return CheckResult::fail("2-cells: count mismatch at (" +
                                     std::to_string(x) + "," +
                                     std::to_string(y) + ") 1-morphisms (" +
                                     std::to_string(a) + "," +
                                     std::to_string(a2) + ")");
          std::vector<bool> used2(ht.hom_size(om[a], om[a2]), false);
          for (int tk = 0; tk < hs.hom_size(a, a2); ++tk) {
            int img = m.two_map(x, y, a, a2, tk);
            if (img < 0 || img >= static_cast<int>(used2.size()) ||
                used2[img])
              return CheckResult::fail("2-cells: not a bijection at (" +
                                       std::to_string(x) + "," +
                                       std::to_string(y) + ")");
            used2[img] = true;
          }
        }
    }
  for (int x = 0; x < n; ++x)
    if (m.one_map[x * n + x][s.id1[x]] != t.id1[m.obj_map[x]])
      return CheckResult::fail("identity 1-morphism of object " +
                               std::to_string(x) + " not preserved");
  // vertical composition and 2-identities
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Groupoid& hs = s.H(x, y);
      const Groupoid& ht = t.H(m.obj_map[x], m.obj_map[y]);
      const auto& om = m.one_map[x * n + y];
      for (int a = 0; a < hs.num_objects(); ++a)
        if (m.two_map(x, y, a, a, 0) != 0)
          return CheckResult::fail("identity 2-cell not preserved at (" +
                                   std::to_string(x) + "," +
                                   std::to_string(y) + ", " +
                                   std::to_string(a) + ")");
      for (int a = 0; a < hs.num_objects(); ++a)
        for (int a2 = 0; a2 < hs.num_objects(); ++a2)
          for (int a3 = 0; a3 < hs.num_objects(); ++a3)
            for (int t1 = 0; t1 < hs.hom_size(a, a2); ++t1)
              for (int t2 = 0; t2 < hs.hom_size(a2, a3); ++t2) {
                int lhs = m.two_map(x, y, a, a3, hs.compose(a, a2, a3, t2, t1));
                int rhs = ht.compose(om[a], om[a2], om[a3],
                                     m.two_map(x, y, a2, a3, t2),
                                     m.two_map(x, y, a, a2, t1));
                if (lhs != rhs)
                  return CheckResult::fail(
                      "vertical composition not preserved at (" +
                      std::to_string(x) + "," + std::to_string(y) + ")");
              }
    }
  // horizontal composition at both levels
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Groupoid& gyz = s.H(y, z);
        const Groupoid& gxy = s.H(x, y);
        for (int b = 0; b < gyz.num_objects(); ++b)
          for (int a = 0; a < gxy.num_objects(); ++a) {
            int lhs = m.one_map[x * n + z][s.hcomp_obj(x, y, z, b, a)];
            int rhs = t.hcomp_obj(m.obj_map[x], m.obj_map[y], m.obj_map[z],
                                  m.one_map[y * n + z][b],
                                  m.one_map[x * n + y][a]);
            if (lhs != rhs)
              return CheckResult::fail(
                  "horizontal composition of 1-morphisms not preserved at (" +
                  std::to_string(x) + "," + std::to_string(y) + "," +
                  std::to_string(z) + ")");
          }
        for (int b = 0; b < gyz.num_objects(); ++b)
          for (int b2 = 0; b2 < gyz.num_objects(); ++b2)
            for (int tb = 0; tb < gyz.hom_size(b, b2); ++tb)
              for (int a = 0; a < gxy.num_objects(); ++a)
                for (int a2 = 0; a2 < gxy.num_objects(); ++a2)
                  for (int ta = 0; ta < gxy.hom_size(a, a2); ++ta) {
                    int src = s.hcomp_obj(x, y, z, b, a);
                    int dst = s.hcomp_obj(x, y, z, b2, a2);
                    int lhs = m.two_map(
                        x, z, src, dst,
                        s.hcomp_mor(x, y, z, b, b2, tb, a, a2, ta));
                    int rhs = t.hcomp_mor(
                        m.obj_map[x], m.obj_map[y], m.obj_map[z],
                        m.one_map[y * n + z][b], m.one_map[y * n + z][b2],
                        m.two_map(y, z, b, b2, tb), m.one_map[x * n + y][a],
                        m.one_map[x * n + y][a2],
                        m.two_map(x, y, a, a2, ta));
                    if (lhs != rhs)
                      return CheckResult::fail(
                          "horizontal composition of 2-cells not preserved "
                          "at (" +
                          std::to_string(x) + "," + std::to_string(y) + "," +
                          std::to_string(z) + ")");
                  }
      }
  return CheckResult::pass();
}

}  // namespace xmodkit
