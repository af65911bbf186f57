#include <algorithm>
#include <set>

#include "lesac/kb_frontend.hpp"

namespace lesac {

namespace {

bool deontic(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Obligation:
    case FormulaKind::Permission:
      return true;
    case FormulaKind::Not:
      return deontic(f.operand());
    default:
      return false;
  }
}

std::string shape_without_kind(const Rule& r) {
  Rule copy = r;
  copy.kind = RuleKind::Strict;
  return copy.shape();
}

}  // namespace

ValidationReport validate_kb(const KnowledgeBase& kb) {
  ValidationReport rep;

  {
    std::set<std::string> ids, shapes;
    for (const auto& r : kb.strict_rules) {
      ids.insert(r.id);
      shapes.insert(shape_without_kind(r));
    }
    for (const auto& n : kb.norms)
      if (ids.count(n.id) || shapes.count(shape_without_kind(n)))
        rep.add({"RULESET-OVERLAP", "norm " + n.id + " is also a strict rule", {n.id}});
  }

  for (const auto& n : kb.norms) {
    auto it = kb.prin.find(n.id);
    if (it == kb.prin.end() || !kb.has_principle(it->second))
      rep.add({"PRIN-NOT-TOTAL", "norm " + n.id + " has no declared principle", {n.id}});
  }

  const std::vector<Formula> cl = strict_closure(kb.facts, kb);
  for (const auto& f : cl)
    if (f.is(FormulaKind::Falsum)) rep.add({"AXIOM-INCONSISTENT", "the closure of K derives falsum", {f.str()}});
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j)
      if (inconsistent_pair(cl[i], cl[j], kb.incompatibilities))
        rep.add({"AXIOM-INCONSISTENT", "the closure of K is not directly consistent", {cl[i].str(), cl[j].str()}});

  // Heads that can never be retracted: facts and heads of user strict rules.
  // Two of them clashing on a deontic formula means the obligation cannot be
  // cancelled by a norm. Synthesized rules are excluded since every axiom
  // instance has a transposition with the opposite head.
  {
    struct Head {
      Formula f;
      std::string from;
      bool fact;
    };
    std::vector<Head> heads;
    for (const auto& f : kb.facts) heads.push_back({f, "fact", true});
    for (const auto& r : kb.strict_rules)
      if (r.origin == "user") heads.push_back({r.consequent, r.id, false});
    for (std::size_t i = 0; i < heads.size(); ++i)
      for (std::size_t j = i + 1; j < heads.size(); ++j) {
        const Head& a = heads[i];
        const Head& b = heads[j];
        if (a.fact && b.fact) continue;
        if (!deontic(a.f) && !deontic(b.f)) continue;
        if (inconsistent_pair(a.f, b.f, kb.incompatibilities))
          rep.add({"OBLIGATION-NOT-CANCELLABLE",
                   "strict heads " + a.f.str() + " (" + a.from + ") and " + b.f.str() + " (" + b.from + ") clash",
                   {a.from, b.from}});
      }
  }

  if (!kb.principle_order.is_preorder())
    rep.add({"NOT-PREORDER", "principle order is not reflexive and transitive", {}});
  for (const auto& [lo, hi] : kb.declared_strict)
    if (kb.principle_order.equivalent(lo, hi))
      rep.add({"ORDER-COLLAPSE", lo + " < " + hi + " was declared but the order makes them equivalent", {lo, hi}});

  for (const auto& f : cl) {
    if (!f.is(FormulaKind::Pref) || f.operand(0) == f.operand(1)) continue;
    const Formula back = Formula::pref(f.operand(1), f.operand(0));
    if (f < back && std::binary_search(cl.begin(), cl.end(), back))
      rep.add({"PREF-CYCLE", "action preferences are cyclic", {f.str(), back.str()}});
  }
  return rep;
}

}  // namespace lesac
