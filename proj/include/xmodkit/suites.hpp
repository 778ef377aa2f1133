#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xmodkit/action.hpp"
#include "xmodkit/catalog.hpp"
#include "xmodkit/cone_pair.hpp"
#include "xmodkit/crossed_module.hpp"
#include "xmodkit/instance.hpp"
#include "xmodkit/xcm.hpp"

namespace xmodkit {

struct SuiteReport {
  std::string text;
  bool all_pass = true;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms",  "cone",       "proposition", "corollary", "banding",
      "lemma-phi", "easy-cases", "xcm",       "remark"};
  return names;
}

namespace detail {

/// Shared per-pair constructions reused by several suites in one run.
struct PairContext {
  const ConePair* cp = nullptr;
  std::optional<TwoSidedCone> cone;
  std::optional<QuotientTwoGroupoid> quotient;
  std::optional<CanonicalTruncation> truncation;

  const TwoSidedCone& get_cone() {
    if (!cone) cone = cone_of_pair(*cp);
    return *cone;
  }
  const QuotientTwoGroupoid& get_quotient() {
    if (!quotient) quotient = quotient_2groupoid(get_cone().action);
    return *quotient;
  }
  const CanonicalTruncation& get_truncation() {
    if (!truncation) truncation = canonical_truncation_functor(get_quotient());
    return *truncation;
  }
};

struct SuiteRun {
  const Instance& ins;
  bool witnesses;
  std::ostringstream out;
  bool all_pass = true;
  std::map<std::string, PairContext> pair_ctx;

  SuiteRun(const Instance& instances, bool with_witnesses)
      : ins(instances), witnesses(with_witnesses) {
    for (const std::string& n : ins.pair_order)
      pair_ctx[n].cp = &ins.pairs.at(n).pair;
  }

  void line(const std::string& suite, const std::string& name,
            const std::string& check, const CheckResult& r) {
    out << suite << ' ' << name << ' ' << check << ": "
        << (r.ok ? "PASS" : "FAIL");
    if (!r.ok) {
      all_pass = false;
      if (witnesses) out << " [" << r.witness << ']';
    }
    out << '\n';
  }

  void transcript(const std::string& suite, const std::string& name,
                  const Transcript& tr) {
    for (const auto& [label, r] : tr.lines) line(suite, name, label, r);
  }

  /// Runs one verification; a thrown ValidationError becomes a FAIL line.
  template <typename Fn>
  void guarded(const std::string& suite, const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const ValidationError& e) {
      if (e.kind() == "BudgetExceeded") throw;
      line(suite, name, "construction", CheckResult::fail(e.what()));
    }
  }

  void run(const std::string& suite) {
    if (suite == "axioms") {
      for (const std::string& n : ins.xmod_order)
        transcript(suite, n, check_xmod(ins.xmods.at(n).xm));
    } else if (suite == "cone") {
      for (const std::string& n : ins.xmod_order)
        guarded(suite, n, [&] {
          TwoGroup tg = cone_2group(ins.xmods.at(n).xm);
          transcript(suite, n, check_two_groupoid(tg.as_two_groupoid()));
        });
    } else if (suite == "proposition") {
      for (const std::string& n : ins.pair_order)
        guarded(suite, n, [&] {
          const QuotientTwoGroupoid& q = pair_ctx.at(n).get_quotient();
          for (int x = 0; x < q.n(); ++x)
            transcript(suite, n + " object " + std::to_string(x),
                       verify_proposition(q, x));
        });
    } else if (suite == "corollary") {
      for (const std::string& n : ins.pair_order)
        guarded(suite, n, [&] {
          const CanonicalTruncation& ct = pair_ctx.at(n).get_truncation();
          for (int x = 0; x < ct.quotient.n(); ++x)
            transcript(suite, n + " object " + std::to_string(x),
                       verify_corollary(ct, x));
        });
    } else if (suite == "banding") {
      for (const std::string& n : ins.pair_order)
        guarded(suite, n, [&] {
          transcript(suite, n,
                     verify_banding(pair_ctx.at(n).get_truncation()));
        });
    } else if (suite == "lemma-phi") {
      for (const std::string& n : ins.pair_order)
        guarded(suite, n, [&] {
          transcript(suite, n, verify_lemma_phi(pair_ctx.at(n).get_cone()));
        });
    } else if (suite == "easy-cases") {
      for (const std::string& n : ins.pair_order)
        guarded(suite, n, [&] {
          const TwoSidedCone& c = pair_ctx.at(n).get_cone();
          bool applicable = false;
          if (is_abelian_pair(c.pair)) {
            applicable = true;
            transcript(suite, n + " abelian", easy_case_abelian(c));
          }
          if (is_discrete_pair(c.pair)) {
            applicable = true;
            transcript(suite, n + " discrete", easy_case_discrete(c));
          }
          if (!applicable)
            line(suite, n, "not-applicable", CheckResult::pass());
        });
    } else if (suite == "xcm") {
      for (const std::string& n : ins.xmod_order)
        guarded(suite, n + " cone", [&] {
          transcript(suite, n + " cone",
                     verify_roundtrip(
                         cone_2group(ins.xmods.at(n).xm).as_two_groupoid()));
        });
      for (const std::string& n : ins.pair_order) {
        guarded(suite, n + " quotient", [&] {
          transcript(suite, n + " quotient",
                     verify_roundtrip(pair_ctx.at(n).get_quotient().tg));
        });
        guarded(suite, n, [&] {
          transcript(suite, n,
                     verify_explicit_xcm(pair_ctx.at(n).get_cone()));
        });
      }
    } else if (suite == "remark") {
      for (const std::string& n : ins.pair_order)
        guarded(suite, n, [&] {
          transcript(suite, n, verify_boundary_remark(ins.pairs.at(n).pair));
        });
    } else {
      throw ValidationError("UnknownSuite", suite);
    }
  }
};

}  // namespace detail

/// Runs one named verification suite (or "all") over an instance set; the
/// report has one line per (instance, check). Throws
/// ValidationError("UnknownSuite") for an unrecognized name.
inline SuiteReport run_suite(const Instance& ins, const std::string& suite,
                             bool witnesses = false) {
  detail::SuiteRun run(ins, witnesses);
  if (suite == "all") {
    for (const std::string& s : suite_names()) run.run(s);
  } else {
    run.run(suite);
  }
  return SuiteReport{run.out.str(), run.all_pass};
}

namespace detail {

inline std::string group_desc(const FiniteGroup& g) {
  std::string s = "order " + std::to_string(g.order());
  if (g.order() > 1 && g.is_abelian()) {
    s += " = ";
    std::vector<int> inv = abelian_invariants(g);
    for (std::size_t i = 0; i < inv.size(); ++i) {
      if (i) s += " x ";
      s += "Z/" + std::to_string(inv[i]);
    }
  }
  return s;
}

}  // namespace detail

/// Deterministic invariant table: for crossed modules the homotopy groups of
/// the cone 2-group; for pairs, per quotient object, the automorphism group
/// of the truncation, the group of 2-automorphisms of the identity, the band,
/// and the stabilizer order, plus the component count.
inline std::string report_invariants(const Instance& ins) {
  std::ostringstream out;
  for (const std::string& n : ins.xmod_order) {
    TwoGroup tg = cone_2group(ins.xmods.at(n).xm);
    out << "xmod " << n << " pi0 " << detail::group_desc(pi0_2group(tg).group)
        << " | pi1 " << detail::group_desc(pi1_2group(tg).group) << '\n';
  }
  for (const std::string& n : ins.pair_order) {
    const ConePair& cp = ins.pairs.at(n).pair;
    TwoSidedCone cone = cone_of_pair(cp);
    QuotientTwoGroupoid q = quotient_2groupoid(cone.action);
    CanonicalTruncation ct = canonical_truncation_functor(q);
    ConeSemidirect cs = cone_semidirect(cp);
    out << "pair " << n << " components "
        << pi0(ct.trunc.gpd).num_classes() << '\n';
    for (int x = 0; x < q.n(); ++x) {
      PhiAt phi = phi_at(q.action, x);
      out << "pair " << n << " object " << x << " pi1 "
          << detail::group_desc(aut_group(ct.trunc.gpd, x)) << " | pi2 "
          << detail::group_desc(kernel_of(phi.hom).group) << " | band "
          << detail::group_desc(coker_central(phi.hom).group) << " | stab "
          << stab_g(cp, cs, x).group.order() << '\n';
    }
  }
  return out.str();
}

}  // namespace xmodkit
