#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lesac/knowledge_base.hpp"

namespace lesac {

/// Reads the `.lsc` language. Type rules stay quantified; the principle
/// order comes back reflexively and transitively closed.
///
/// Throws SyntaxError, or Error with DuplicateId / UnknownPrinciple /
/// InconsistentPreference.
KnowledgeBase parse_kb(std::string_view source);
KnowledgeBase load_kb_file(const std::string& path);

/// Instantiates type rules over the constant pool. Universal rules get one
/// instance per substitution; existential rules only for constants whose
/// instantiated antecedents already hold in the strict closure of the facts.
KnowledgeBase ground_kb(const KnowledgeBase& kb);

/// Formulas and subformulas occurring in facts and rules. This is the finite
/// basis over which the axiom schemes get instantiated.
std::vector<Formula> deontic_subformula_universe(const KnowledgeBase& kb);

/// Adds the strict rules induced by the axiom schemes and inference rules of
/// the deontic logic, the incompatibility declarations and the Pref facts.
KnowledgeBase synthesize_strict_rules(const KnowledgeBase& kb);

/// Adds every transposition of every strict rule, up to fixpoint.
KnowledgeBase close_under_transposition(const KnowledgeBase& kb);

/// Least superset of `seed` closed under the strict rules of `kb`.
std::vector<Formula> strict_closure(const std::vector<Formula>& seed, const KnowledgeBase& kb);

struct Violation {
  std::string code;
  std::string message;
  std::vector<std::string> items;
};

struct ValidationReport {
  bool well_defined = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    well_defined = false;
    violations.push_back(std::move(v));
  }
};

/// Well-definedness checks that do not need the argument set: disjoint rule
/// sets, total principle map, consistency of Cl(K), obligation
/// cancellability of declared heads, preorder sanity.
ValidationReport validate_kb(const KnowledgeBase& kb);

/// parse-independent part of the pipeline: ground, synthesize, transpose.
KnowledgeBase prepare_kb(const KnowledgeBase& parsed);

}  // namespace lesac
