#include "lesac/argument.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

#include "lesac/error.hpp"

namespace lesac {

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <class T>
bool contains(const std::vector<T>& sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

class Builder {
 public:
  Builder(const KnowledgeBase& kb, std::size_t cap) : cap_(cap) {
    for (const auto& r : kb.norms) set_.rules.push_back(r);
    for (const auto& r : kb.strict_rules) set_.rules.push_back(r);
    for (const auto& f : kb.facts) add_fact(f);
  }

  ArgumentSet run() {
    std::size_t lo = 0;
    while (lo < set_.args.size()) {
      const std::size_t hi = set_.args.size();
      for (int r = 0; r < static_cast<int>(set_.rules.size()); ++r) fire(r, lo, hi);
      lo = hi;
    }
    return std::move(set_);
  }

 private:
  void add_fact(const Formula& f) {
    if (!fact_seen_.insert(f.str()).second) return;
    Argument a;
    a.id = static_cast<int>(set_.args.size());
    a.fact = f;
    a.conclusion = f;
    a.premises = {f};
    a.all_subs = {a.id};
    push(std::move(a));
  }

  void push(Argument a) {
    if (set_.args.size() >= cap_)
      throw Error(ErrorCode::ExplosionGuard, "more than " + std::to_string(cap_) +
                                                 " arguments; raise LESAC_ARG_CAP if the knowledge base is meant to be this large");
    by_conc_[a.conclusion].push_back(a.id);
    set_.args.push_back(std::move(a));
  }

  // Semi-naive: the first antecedent bound to a new argument (id >= lo) is
  // `pivot`; earlier positions take old arguments, later ones anything < hi.
  void fire(int r, std::size_t lo, std::size_t hi) {
    const Rule& rule = set_.rule(r);
    const std::size_t n = rule.antecedents.size();
    std::vector<const std::vector<int>*> pools(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = by_conc_.find(rule.antecedents[i]);
      if (it == by_conc_.end()) return;
      pools[i] = &it->second;
    }
    std::vector<int> pick(n);
    for (std::size_t pivot = 0; pivot < n; ++pivot) choose(r, pools, pick, 0, pivot, lo, hi);
  }

  void choose(int r, const std::vector<const std::vector<int>*>& pools, std::vector<int>& pick, std::size_t i,
              std::size_t pivot, std::size_t lo, std::size_t hi) {
    if (i == pools.size()) {
      combine(r, pick);
      return;
    }
    for (int a : *pools[i]) {
      const auto ua = static_cast<std::size_t>(a);
      if (ua >= hi) break;  // pools are in id order
      if (i < pivot && ua >= lo) break;
      if (i == pivot && ua < lo) continue;
      // A rule may not reappear below itself.
      if (contains(set_[a].norms, r) || contains(set_[a].strict, r)) continue;
      pick[i] = a;
      choose(r, pools, pick, i + 1, pivot, lo, hi);
    }
  }

  // Each antecedent tuple arrives exactly once thanks to the pivot scheme.
  void combine(int r, const std::vector<int>& pick) {
    const Rule& rule = set_.rule(r);
    Argument a;
    a.top_rule = r;
    a.subs = pick;
    a.conclusion = rule.consequent;
    for (int s : pick) {
      const Argument& sub = set_[s];
      a.premises.insert(a.premises.end(), sub.premises.begin(), sub.premises.end());
      a.all_subs.insert(a.all_subs.end(), sub.all_subs.begin(), sub.all_subs.end());
      a.norms.insert(a.norms.end(), sub.norms.begin(), sub.norms.end());
      a.strict.insert(a.strict.end(), sub.strict.begin(), sub.strict.end());
      if (!rule.is_norm()) a.last_norms.insert(a.last_norms.end(), sub.last_norms.begin(), sub.last_norms.end());
    }
    (rule.is_norm() ? a.norms : a.strict).push_back(r);
    if (rule.is_norm()) a.last_norms = {r};
    sort_unique(a.premises);
    sort_unique(a.all_subs);
    sort_unique(a.norms);
    sort_unique(a.strict);
    sort_unique(a.last_norms);

    for (int s : a.all_subs) {
      const Argument& sub = set_[s];
      if (sub.conclusion == a.conclusion && sub.norms == a.norms && sub.last_norms == a.last_norms) return;
    }

    a.id = static_cast<int>(set_.args.size());
    a.all_subs.push_back(a.id);
    push(std::move(a));
  }

  std::size_t cap_;
  ArgumentSet set_;
  std::unordered_map<Formula, std::vector<int>> by_conc_;
  std::set<std::string> fact_seen_;
};

}  // namespace

bool ArgumentSet::top_defeasible(int a) const {
  const Argument& arg = (*this)[a];
  return arg.top_rule >= 0 && rule(arg.top_rule).is_norm();
}

std::vector<std::string> ArgumentSet::principles(const std::vector<int>& rule_ids, const KnowledgeBase& kb) const {
  std::vector<std::string> out;
  for (int r : rule_ids) {
    const Rule& ru = rule(r);
    if (ru.principle) {
      out.push_back(*ru.principle);
    } else if (auto it = kb.prin.find(ru.id); it != kb.prin.end()) {
      out.push_back(it->second);
    }
  }
  sort_unique(out);
  return out;
}

std::vector<std::string> ArgumentSet::last_prin(int a, const KnowledgeBase& kb) const {
  return principles((*this)[a].last_norms, kb);
}

std::vector<std::string> ArgumentSet::prin(int a, const KnowledgeBase& kb) const {
  return principles((*this)[a].norms, kb);
}

std::vector<int> ArgumentSet::arguments_for(const Formula& f) const {
  std::vector<int> out;
  for (const auto& a : args)
    if (a.conclusion == f) out.push_back(a.id);
  return out;
}

ArgumentSet construct_arguments(const KnowledgeBase& kb, std::size_t cap) { return Builder(kb, cap).run(); }

std::size_t argument_cap_from_env() {
  const char* v = std::getenv("LESAC_ARG_CAP");
  if (!v || !*v) return kDefaultArgumentCap;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) return kDefaultArgumentCap;
  return static_cast<std::size_t>(n);
}

const char* to_string(AttackKind k) {
  switch (k) {
    case AttackKind::Negation: return "negation";
    case AttackKind::BottomPair: return "bottom-pair";
    case AttackKind::DeonticConflict: return "deontic-conflict";
  }
  return "?";
}

std::vector<Attack> compute_attacks(const ArgumentSet& set, const KnowledgeBase& kb, std::size_t cap) {
  // Group attackable subarguments by conclusion so each attacker only looks
  // at its conflict partners.
  std::unordered_map<Formula, std::vector<int>> targets_by_conc;
  for (const auto& a : set.args)
    if (set.top_defeasible(a.id)) targets_by_conc[a.conclusion].push_back(a.id);

  // on -> every argument having it as a subargument
  std::vector<std::vector<int>> supers(set.size());
  for (const auto& b : set.args)
    for (int s : b.all_subs) supers[static_cast<std::size_t>(s)].push_back(b.id);

  std::map<Formula, std::vector<Formula>> partner_cache;
  std::vector<Attack> out;
  for (const auto& a : set.args) {
    auto [it, fresh] = partner_cache.try_emplace(a.conclusion);
    if (fresh) it->second = conflict_partners(a.conclusion, kb.incompatibilities);
    for (const auto& psi : it->second) {
      auto t = targets_by_conc.find(psi);
      if (t == targets_by_conc.end()) continue;
      AttackKind kind = AttackKind::BottomPair;
      switch (classify_conflict(a.conclusion, psi, kb.incompatibilities)) {
        case ConflictShape::Negation: kind = AttackKind::Negation; break;
        case ConflictShape::Incompatible: kind = AttackKind::DeonticConflict; break;
        default: break;
      }
      for (int on : t->second) {
        const auto& sup = supers[static_cast<std::size_t>(on)];
        if (out.size() + sup.size() > cap)
          throw Error(ErrorCode::ExplosionGuard, "more than " + std::to_string(cap) + " attacks");
        for (int b : sup) out.push_back({a.id, b, on, kind});
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<CancellationViolation> check_obligation_cancellable(const ArgumentSet& set, const KnowledgeBase& kb) {
  std::vector<int> strict_args;
  for (const auto& a : set.args)
    if (a.is_strict()) strict_args.push_back(a.id);
  std::vector<CancellationViolation> out;
  for (std::size_t i = 0; i < strict_args.size(); ++i)
    for (std::size_t j = i + 1; j < strict_args.size(); ++j) {
      const Formula& f = set[strict_args[i]].conclusion;
      const Formula& g = set[strict_args[j]].conclusion;
      if (!f.is(FormulaKind::Obligation) && !g.is(FormulaKind::Obligation)) continue;
      if (inconsistent_pair(f, g, kb.incompatibilities)) out.push_back({strict_args[i], strict_args[j]});
    }
  return out;
}

}  // namespace lesac
