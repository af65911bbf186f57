#include <algorithm>

#include "lesac/error.hpp"
#include "lesac/kb_frontend.hpp"

namespace lesac {

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.is(FormulaKind::Atom)) {
    for (const auto& t : f.terms())
      if (t.is_variable()) out.insert(t.name);
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_variables(f.operand(i), out);
}

void require_ground(const Formula& f, const std::string& where) {
  std::set<std::string> vars;
  collect_variables(f, vars);
  if (!vars.empty())
    throw Error(ErrorCode::UnboundVariable, where + ": variable '" + *vars.begin() + "' is not bound by a quantifier");
}

Formula instantiate(Formula f, const std::vector<std::string>& vars, const std::vector<std::string>& values) {
  for (std::size_t i = 0; i < vars.size(); ++i) f = substitute(f, vars[i], Term::constant(values[i]));
  return f;
}

void emit(KnowledgeBase& out, const TypeRule& t, const std::vector<std::string>& values) {
  Rule r;
  r.id = t.id;
  for (const auto& v : values) r.id += "_" + v;
  for (const auto& a : t.antecedents) r.antecedents.push_back(instantiate(a, t.variables, values));
  r.consequent = instantiate(t.consequent, t.variables, values);
  r.kind = t.kind;
  r.principle = t.principle;
  if (r.is_norm()) {
    out.prin[r.id] = *r.principle;
    out.norms.push_back(std::move(r));
  } else {
    out.strict_rules.push_back(std::move(r));
  }
}

}  // namespace

KnowledgeBase ground_kb(const KnowledgeBase& kb) {
  for (const auto& f : kb.facts) require_ground(f, "fact " + f.str());
  for (const auto& r : kb.norms) {
    for (const auto& a : r.antecedents) require_ground(a, "norm " + r.id);
    require_ground(r.consequent, "norm " + r.id);
  }
  for (const auto& r : kb.strict_rules) {
    for (const auto& a : r.antecedents) require_ground(a, "rule " + r.id);
    require_ground(r.consequent, "rule " + r.id);
  }
  if (kb.type_rules.empty()) return kb;

  KnowledgeBase out = kb;
  out.type_rules.clear();
  const std::vector<std::string> pool(kb.constants.begin(), kb.constants.end());

  for (const auto& t : kb.type_rules) {
    std::set<std::string> vars;
    for (const auto& a : t.antecedents) collect_variables(a, vars);
    collect_variables(t.consequent, vars);
    for (const auto& v : vars)
      if (std::find(t.variables.begin(), t.variables.end(), v) == t.variables.end())
        throw Error(ErrorCode::UnboundVariable,
                    "type rule " + t.id + ": variable '" + v + "' is not bound by the quantifier prefix");
    if (pool.empty())
      throw Error(ErrorCode::NoConstants, "type rule " + t.id + " is quantified but no constants are known");
  }

  for (const auto& t : kb.type_rules) {
    if (t.quantifier != Quantifier::ForAll) continue;
    std::vector<std::size_t> idx(t.variables.size(), 0);
    for (;;) {
      std::vector<std::string> values;
      for (auto i : idx) values.push_back(pool[i]);
      emit(out, t, values);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == pool.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }

  // Existential antecedents resolve against what the facts already give us.
  const std::vector<Formula> known = strict_closure(out.facts, out);
  for (const auto& t : kb.type_rules) {
    if (t.quantifier != Quantifier::Exists) continue;
    for (const auto& c : pool) {
      const std::vector<std::string> values{c};
      const bool holds = std::all_of(t.antecedents.begin(), t.antecedents.end(), [&](const Formula& a) {
        return std::binary_search(known.begin(), known.end(), instantiate(a, t.variables, values));
      });
      if (holds) emit(out, t, values);
    }
  }
  return out;
}

}  // namespace lesac
