#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lesac/explanation.hpp"
#include "lesac/kb_frontend.hpp"

namespace lesac {

namespace {

Witness consistent(const std::vector<Formula>& fs, const KnowledgeBase& kb) {
  for (const auto& f : fs)
    if (f.is(FormulaKind::Falsum)) return {false, "falsum is concluded"};
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (inconsistent_pair(fs[i], fs[j], kb.incompatibilities))
        return {false, fs[i].str() + " clashes with " + fs[j].str()};
  return {};
}

using PrinSet = std::vector<std::string>;

std::string show(const PrinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i];
  return out + "}";
}

}  // namespace

PostulateReport check_postulates(const Extension& ext, const ArgumentSet& set, const KnowledgeBase& kb) {
  PostulateReport rep;
  for (int a : ext.members) {
    for (int s : set[a].all_subs)
      if (!ext.contains(s)) {
        rep.subargument_closure = {false, set[s].name() + " is a subargument of " + set[a].name() + " but not accepted"};
        break;
      }
    if (!rep.subargument_closure.pass) break;
  }

  std::vector<Formula> concl;
  for (int a : ext.members) concl.push_back(set[a].conclusion);
  std::sort(concl.begin(), concl.end());
  concl.erase(std::unique(concl.begin(), concl.end()), concl.end());

  const std::vector<Formula> closed = strict_closure(concl, kb);
  for (const auto& f : closed)
    if (!std::binary_search(concl.begin(), concl.end(), f)) {
      rep.strict_rule_closure = {false, f.str() + " follows strictly but is not concluded"};
      break;
    }
  rep.direct_consistency = consistent(concl, kb);
  rep.indirect_consistency = consistent(closed, kb);
  return rep;
}

std::vector<OrderingViolation> check_reasonable_ordering(const ArgumentSet& set, Link link, SetMode mode,
                                                         const KnowledgeBase& kb, std::size_t max_subset,
                                                         std::size_t max_checks) {
  std::vector<OrderingViolation> out;
  const auto& order = kb.principle_order;
  const std::size_t n = set.size();

  std::vector<PrinSet> s(n);
  for (std::size_t i = 0; i < n; ++i)
    s[i] = link == Link::Last ? set.last_prin(static_cast<int>(i), kb) : set.prin(static_cast<int>(i), kb);
  auto prec = [&](int a, int b) { return arg_prec(set, a, b, link, mode, kb); };

  // Distinct principle sets carry everything the order depends on.
  std::map<PrinSet, int> rep;
  for (std::size_t i = 0; i < n; ++i) rep.try_emplace(s[i], static_cast<int>(i));
  std::vector<PrinSet> kinds;
  std::vector<int> reps;
  for (const auto& [k, a] : rep) {
    kinds.push_back(k);
    reps.push_back(a);
  }

  for (const auto& k : kinds)
    if (set_compare(k, k, mode, order)) out.push_back({"irreflexive", show(k) + " is below itself"});
  for (const auto& x : kinds)
    for (const auto& y : kinds) {
      if (!set_compare(x, y, mode, order)) continue;
      for (const auto& z : kinds)
        if (set_compare(y, z, mode, order) && !set_compare(x, z, mode, order))
          out.push_back({"transitive", show(x) + " < " + show(y) + " < " + show(z) + " but not " + show(x) + " < " + show(z)});
    }

  std::vector<int> strict_args, normative;
  for (const auto& a : set.args) (a.is_strict() ? strict_args : normative).push_back(a.id);
  if (!strict_args.empty()) {
    const int a = strict_args.front();
    for (int b : normative)
      if (!prec(b, a)) out.push_back({"1a", set[b].name() + " is normative but not below strict " + set[a].name()});
    for (int b : strict_args)
      if (prec(b, a) || prec(a, b)) out.push_back({"1b", set[a].name() + " and " + set[b].name() + " are ordered"});
  }

  // 1(c): A' built over A by strict rules, other branches strict.
  std::function<bool(int, int)> continues = [&](int ap, int a) -> bool {
    if (ap == a) return true;
    const Argument& x = set[ap];
    if (x.top_rule < 0 || set.rule(x.top_rule).is_norm()) return false;
    if (!std::binary_search(x.all_subs.begin(), x.all_subs.end(), a)) return false;
    bool through = false;
    for (int sub : x.subs) {
      if (continues(sub, a))
        through = true;
      else if (!set[sub].is_strict())
        return false;
    }
    return through;
  };
  for (int a : normative)
    for (const auto& xa : set.args) {
      const int ap = xa.id;
      if (ap == a || !continues(ap, a)) continue;
      for (int b : reps) {
        if (!prec(a, b) && prec(ap, b))
          out.push_back({"1c", set[ap].name() + " continues " + set[a].name() + " but falls below " + set[b].name()});
        if (!prec(b, a) && prec(b, ap))
          out.push_back({"1c", set[ap].name() + " continues " + set[a].name() + " but rises above " + set[b].name()});
      }
    }

  // Condition 2 over principle sets of normative arguments: a continuation
  // of the others carries the union of their sets.
  std::vector<PrinSet> pool;
  for (const auto& k : kinds)
    if (!k.empty()) pool.push_back(k);
  std::size_t checks = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> subsets = [&](std::size_t from) {
    if (checks >= max_checks) return;
    if (pick.size() >= 2) {
      ++checks;
      bool all_below = true;
      for (std::size_t i = 0; i < pick.size() && all_below; ++i) {
        PrinSet rest;
        for (std::size_t j = 0; j < pick.size(); ++j)
          if (j != i) rest.insert(rest.end(), pool[pick[j]].begin(), pool[pick[j]].end());
        std::sort(rest.begin(), rest.end());
        rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
        all_below = set_compare(rest, pool[pick[i]], mode, order);
      }
      if (all_below) {
        std::string d;
        for (auto i : pick) d += show(pool[i]) + " ";
        out.push_back({"2", "every member is beaten by a continuation of the rest: " + d});
      }
    }
    if (pick.size() == max_subset) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(i);
      subsets(i + 1);
      pick.pop_back();
    }
  };
  subsets(0);
  return out;
}

}  // namespace lesac
