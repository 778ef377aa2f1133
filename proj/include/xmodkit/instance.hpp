#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "xmodkit/cone_pair.hpp"
#include "xmodkit/core.hpp"
#include "xmodkit/crossed_module.hpp"
#include "xmodkit/fingroup.hpp"

namespace xmodkit {

/// A resolved set of named declarations from one instance file.
///
/// The textual format is line-oriented: one declaration per line, tokens
/// separated by whitespace, `#` starts a comment. Declarations:
///
///   group NAME order N table <N*N entries, row-major>
///   hom NAME from G to H map <|G| images>
///   action NAME of G on H perms <|G| x |H| images, one block per G element>
///   xmod NAME g0 G gm1 H d DHOM act ACT
///   pair NAME b XB g XG pi0 H0 pi1 H1 pi0' H0P pi1' H1P
///
/// Names must be unique across all kinds; references must resolve to an
/// earlier declaration and every object validates through its constructor.
struct Instance {
  struct NamedHom {
    std::string from, to;
    GroupHom hom;
  };
  struct NamedAction {
    std::string of, on;
    AutoAction act;
  };
  struct NamedXmod {
    std::string g0, gm1, d, act;
    CrossedModule xm;
  };
  struct NamedPair {
    std::string b, g, pi0, pi1, pip0, pip1;
    ConePair pair;
  };

  std::vector<std::string> group_order, hom_order, action_order, xmod_order,
      pair_order;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, NamedHom> homs;
  std::map<std::string, NamedAction> actions;
  std::map<std::string, NamedXmod> xmods;
  std::map<std::string, NamedPair> pairs;

  bool has_name(const std::string& n) const {
    return groups.count(n) || homs.count(n) || actions.count(n) ||
           xmods.count(n) || pairs.count(n);
  }
};

namespace detail {

struct LineTokens {
  int line = 0;
  std::vector<std::string> toks;
  std::size_t pos = 0;

  [[noreturn]] void syntax(const std::string& why) const {
    throw ValidationError("Syntax",
                          "line " + std::to_string(line) + ": " + why);
  }
  bool done() const { return pos >= toks.size(); }
  const std::string& word(const std::string& what) {
    if (done()) syntax("expected " + what);
    return toks[pos++];
  }
  void keyword(const std::string& kw) {
    const std::string& w = word("keyword '" + kw + "'");
    if (w != kw) syntax("expected keyword '" + kw + "', got '" + w + "'");
  }
  int number(const std::string& what) {
    const std::string& w = word(what);
    try {
      std::size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (const std::exception&) {
      syntax("expected integer for " + what + ", got '" + w + "'");
    }
  }
  std::vector<int> numbers(int count, const std::string& what) {
    std::vector<int> v;
    v.reserve(count);
    for (int i = 0; i < count; ++i) v.push_back(number(what));
    return v;
  }
};

}  // namespace detail

/// Parses and validates one instance file. Throws ValidationError with kind
/// Syntax (with line number), Unresolved (bad reference), or Validation
/// (a declaration rejected by its constructor, with the cause).
inline Instance parse_instance(const std::string& text) {
  Instance ins;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    detail::LineTokens lt;
    lt.line = line_no;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) lt.toks.push_back(tok);
    if (lt.toks.empty()) continue;

    const std::string kind = lt.word("declaration keyword");
    const std::string name = lt.word("name");
    if (ins.has_name(name))
      lt.syntax("duplicate name '" + name + "'");

    auto need_group = [&](const std::string& n) -> const FiniteGroup& {
      auto it = ins.groups.find(n);
      if (it == ins.groups.end())
        throw ValidationError("Unresolved", "line " + std::to_string(line_no) +
                                                ": unknown group '" + n + "'");
      return it->second;
    };
    auto need_hom = [&](const std::string& n) -> const Instance::NamedHom& {
      auto it = ins.homs.find(n);
      if (it == ins.homs.end())
        throw ValidationError("Unresolved", "line " + std::to_string(line_no) +
                                                ": unknown hom '" + n + "'");
      return it->second;
    };
    auto validate = [&](auto&& fn) {
      using R = decltype(fn());
      try {
        return fn();
      } catch (const ValidationError& e) {
        throw ValidationError("Validation",
                              "line " + std::to_string(line_no) + ": '" +
                                  name + "': " + e.what());
      }
      return R();  // unreachable
    };

    if (kind == "group") {
      lt.keyword("order");
      int n = lt.number("order");
      if (n <= 0) lt.syntax("order must be positive");
      lt.keyword("table");
      std::vector<int> flat = lt.numbers(n * n, "table entry");
      if (!lt.done()) lt.syntax("trailing tokens");
      ins.groups.emplace(name, validate([&] { return make_group(n, flat); }));
      ins.group_order.push_back(name);
    } else if (kind == "hom") {
      lt.keyword("from");
      std::string from = lt.word("source group");
      lt.keyword("to");
      std::string to = lt.word("target group");
      const FiniteGroup& src = need_group(from);
      const FiniteGroup& tgt = need_group(to);
      lt.keyword("map");
      std::vector<int> map = lt.numbers(src.order(), "image");
      if (!lt.done()) lt.syntax("trailing tokens");
      GroupHom h = validate([&] { return make_hom(src, tgt, map); });
      ins.homs.emplace(name, Instance::NamedHom{from, to, std::move(h)});
      ins.hom_order.push_back(name);
    } else if (kind == "action") {
      lt.keyword("of");
      std::string of = lt.word("acting group");
      lt.keyword("on");
      std::string on = lt.word("acted group");
      const FiniteGroup& actor = need_group(of);
      const FiniteGroup& acted = need_group(on);
      lt.keyword("perms");
      std::vector<std::vector<int>> perms(actor.order());
      for (int g = 0; g < actor.order(); ++g)
        perms[g] = lt.numbers(acted.order(), "permutation image");
      if (!lt.done()) lt.syntax("trailing tokens");
      AutoAction a =
          validate([&] { return make_auto_action(actor, acted, perms); });
      ins.actions.emplace(name, Instance::NamedAction{of, on, std::move(a)});
      ins.action_order.push_back(name);
    } else if (kind == "xmod") {
      lt.keyword("g0");
      std::string g0 = lt.word("degree-0 group");
      lt.keyword("gm1");
      std::string gm1 = lt.word("degree -1 group");
      lt.keyword("d");
      std::string d = lt.word("boundary hom");
      lt.keyword("act");
      std::string act = lt.word("action");
      if (!lt.done()) lt.syntax("trailing tokens");
      const FiniteGroup& top = need_group(g0);
      const FiniteGroup& bot = need_group(gm1);
      const Instance::NamedHom& dh = need_hom(d);
      auto ai = ins.actions.find(act);
      if (ai == ins.actions.end())
        throw ValidationError("Unresolved", "line " + std::to_string(line_no) +
                                                ": unknown action '" + act +
                                                "'");
      CrossedModule xm = validate([&] {
        return make_crossed_module(top, bot, dh.hom, ai->second.act);
      });
      ins.xmods.emplace(name,
                        Instance::NamedXmod{g0, gm1, d, act, std::move(xm)});
      ins.xmod_order.push_back(name);
    } else if (kind == "pair") {
      lt.keyword("b");
      std::string bn = lt.word("acting crossed module");
      lt.keyword("g");
      std::string gn = lt.word("acted crossed module");
      lt.keyword("pi0");
      std::string p0 = lt.word("hom");
      lt.keyword("pi1");
      std::string p1 = lt.word("hom");
      lt.keyword("pi0'");
      std::string q0 = lt.word("hom");
      lt.keyword("pi1'");
      std::string q1 = lt.word("hom");
      if (!lt.done()) lt.syntax("trailing tokens");
      auto need_xmod = [&](const std::string& n) -> const Instance::NamedXmod& {
        auto it = ins.xmods.find(n);
        if (it == ins.xmods.end())
          throw ValidationError("Unresolved",
                                "line " + std::to_string(line_no) +
                                    ": unknown xmod '" + n + "'");
        return it->second;
      };
      const CrossedModule& b = need_xmod(bn).xm;
      const CrossedModule& g = need_xmod(gn).xm;
      ConePair cp = validate([&] {
        XModHom pi = make_xmod_hom(b, g, need_hom(p0).hom, need_hom(p1).hom);
        XModHom pip = make_xmod_hom(b, g, need_hom(q0).hom, need_hom(q1).hom);
        return make_cone_pair(b, g, pi, pip);
      });
      ins.pairs.emplace(name, Instance::NamedPair{bn, gn, p0, p1, q0, q1,
                                                  std::move(cp)});
      ins.pair_order.push_back(name);
    } else {
      lt.syntax("unknown declaration '" + kind + "'");
    }
  }
  return ins;
}

/// Prints an instance set in the same line-oriented format; the output
/// reparses to an identical instance set.
inline std::string print_instance(const Instance& ins) {
  std::ostringstream out;
  for (const std::string& n : ins.group_order) {
    const FiniteGroup& g = ins.groups.at(n);
    out << "group " << n << " order " << g.order() << " table";
    for (int v : g.flat_table()) out << ' ' << v;
    out << '\n';
  }
  for (const std::string& n : ins.hom_order) {
    const Instance::NamedHom& h = ins.homs.at(n);
    out << "hom " << n << " from " << h.from << " to " << h.to << " map";
    for (int v : h.hom.map) out << ' ' << v;
    out << '\n';
  }
  for (const std::string& n : ins.action_order) {
    const Instance::NamedAction& a = ins.actions.at(n);
    out << "action " << n << " of " << a.of << " on " << a.on << " perms";
    for (const auto& p : a.act.perms)
      for (int v : p) out << ' ' << v;
    out << '\n';
  }
  for (const std::string& n : ins.xmod_order) {
    const Instance::NamedXmod& x = ins.xmods.at(n);
    out << "xmod " << n << " g0 " << x.g0 << " gm1 " << x.gm1 << " d " << x.d
        << " act " << x.act << '\n';
  }
  for (const std::string& n : ins.pair_order) {
    const Instance::NamedPair& p = ins.pairs.at(n);
    out << "pair " << n << " b " << p.b << " g " << p.g << " pi0 " << p.pi0
        << " pi1 " << p.pi1 << " pi0' " << p.pip0 << " pi1' " << p.pip1
        << '\n';
  }
  return out.str();
}

}  // namespace xmodkit
