#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "lesac/kb_frontend.hpp"

namespace lesac {

namespace {

void sort_unique(std::vector<Formula>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Appends strict rules while skipping shapes that already exist.
class RuleSink {
 public:
  explicit RuleSink(KnowledgeBase& kb) : kb_(kb) {
    for (const auto& r : kb_.strict_rules) shapes_.insert(r.shape());
    for (const auto& r : kb_.norms) shapes_.insert(r.shape());
  }

  bool add(const std::string& origin, std::vector<Formula> antecedents, Formula consequent,
           const std::string& prefix = "") {
    Rule r;
    r.antecedents = std::move(antecedents);
    r.consequent = std::move(consequent);
    r.kind = RuleKind::Strict;
    r.origin = origin;
    if (!shapes_.insert(r.shape()).second) return false;
    const std::string& tag = prefix.empty() ? origin : prefix;
    r.id = tag + "." + std::to_string(counters_[tag]++);
    kb_.strict_rules.push_back(std::move(r));
    return true;
  }

 private:
  KnowledgeBase& kb_;
  std::unordered_set<std::string> shapes_;
  std::map<std::string, int> counters_;
};

}  // namespace

std::vector<Formula> deontic_subformula_universe(const KnowledgeBase& kb) {
  std::vector<Formula> out;
  for (const auto& f : kb.facts) collect_subformulas(f, out);
  auto add_rule = [&](const Rule& r) {
    for (const auto& a : r.antecedents) collect_subformulas(a, out);
    collect_subformulas(r.consequent, out);
  };
  for (const auto& r : kb.norms) add_rule(r);
  for (const auto& r : kb.strict_rules)
    if (r.origin == "user") add_rule(r);
  sort_unique(out);
  return out;
}

KnowledgeBase synthesize_strict_rules(const KnowledgeBase& kb) {
  KnowledgeBase out = kb;
  RuleSink sink(out);
  const std::vector<Formula> universe = deontic_subformula_universe(kb);

  std::vector<Formula> actions;
  for (const auto& f : universe) {
    if (f.is(FormulaKind::Obligation) || f.is(FormulaKind::Permission)) {
      actions.push_back(f.operand());
      actions.push_back(negate(f.operand()));
    }
  }
  sort_unique(actions);

  using F = Formula;
  for (const auto& a : actions) {
    const F oa = F::obligation(a);
    const F not_p_not_a = F::negation(F::permission(negate(a)));
    sink.add("A1", {oa}, F::permission(a));
    sink.add("A2", {oa}, not_p_not_a);
    sink.add("A2", {not_p_not_a}, oa);
  }

  for (const auto& f : universe) {
    if (f.is(FormulaKind::Implies)) {
      sink.add("R1", {F::obligation(f.operand(0)), f}, F::obligation(f.operand(1)));
      sink.add("MP", {f.operand(0), f}, f.operand(1));
    } else if (f.is(FormulaKind::And)) {
      sink.add("AND-E", {f}, f.operand(0));
      sink.add("AND-E", {f}, f.operand(1));
    }
  }

  for (const auto& d : kb.incompatibilities) {
    const F ol = F::obligation(d.left);
    const F orr = F::obligation(d.right);
    sink.add("CONFLICT", {ol, orr}, F::disjunction(F::negation(ol), F::negation(orr)));
  }

  // Transitive closure of the declared action preferences.
  std::vector<std::pair<F, F>> prefs = kb.action_prefs;
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = prefs;
    for (const auto& [a, b] : snapshot)
      for (const auto& [b2, c] : snapshot)
        if (b == b2 && std::find(prefs.begin(), prefs.end(), std::pair{a, c}) == prefs.end()) {
          prefs.push_back({a, c});
          grew = true;
        }
  }
  for (const auto& [a, b] : prefs)
    for (const auto& [b2, c] : prefs)
      if (b == b2) sink.add("A5", {F::pref(a, b), F::pref(b, c)}, F::pref(a, c));

  for (const auto& [hi, lo] : prefs) {
    const F pref = F::pref(hi, lo);
    const F ohi = F::obligation(hi);
    const F olo = F::obligation(lo);
    sink.add("A4", {ohi, olo, pref}, F::conjunction(ohi, F::negation(olo)));
    sink.add("R2", {ohi, pref}, F::negation(olo));
    const F shift = F::implication(olo, ohi);
    sink.add("A6", {pref}, shift);
    sink.add("MP", {olo, shift}, ohi);
    // A6 then R2: O(lo) yields O(hi), which cancels O(lo). So Pref alone
    // refutes O(lo); without this no argument captures that reductio.
    sink.add("A6R2", {pref}, F::negation(olo));
  }
  return out;
}

KnowledgeBase close_under_transposition(const KnowledgeBase& kb) {
  KnowledgeBase out = kb;
  RuleSink sink(out);
  for (std::size_t next = 0; next < out.strict_rules.size(); ++next) {
    const Rule r = out.strict_rules[next];
    for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
      std::vector<Formula> ants = r.antecedents;
      ants[i] = negate(r.consequent);
      sink.add("transposition", std::move(ants), negate(r.antecedents[i]), "tr");
    }
  }
  return out;
}

std::vector<Formula> strict_closure(const std::vector<Formula>& seed, const KnowledgeBase& kb) {
  std::unordered_map<Formula, std::vector<std::size_t>> watchers;
  std::vector<std::size_t> missing(kb.strict_rules.size());
  for (std::size_t i = 0; i < kb.strict_rules.size(); ++i) {
    std::vector<Formula> ants = kb.strict_rules[i].antecedents;
    sort_unique(ants);
    missing[i] = ants.size();
    for (const auto& a : ants) watchers[a].push_back(i);
  }

  std::unordered_set<Formula> have;
  std::vector<Formula> queue;
  auto push = [&](const Formula& f) {
    if (have.insert(f).second) queue.push_back(f);
  };
  for (const auto& f : seed) push(f);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto it = watchers.find(queue[head]);
    if (it == watchers.end()) continue;
    for (auto ri : it->second)
      if (--missing[ri] == 0) push(kb.strict_rules[ri].consequent);
  }
  sort_unique(queue);
  return queue;
}

KnowledgeBase prepare_kb(const KnowledgeBase& parsed) {
  return close_under_transposition(synthesize_strict_rules(ground_kb(parsed)));
}

}  // namespace lesac
