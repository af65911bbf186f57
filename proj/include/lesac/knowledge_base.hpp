#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lesac/formula.hpp"

namespace lesac {

enum class RuleKind { Strict, Defeasible };

struct Rule {
  std::string id;
  std::vector<Formula> antecedents;
  Formula consequent;
  RuleKind kind = RuleKind::Strict;
  std::optional<std::string> principle;  // set iff defeasible
  /// Where a strict rule came from: "user", "A1", "A2", "R1", "MP", "AND-E",
  /// "CONFLICT", "A4", "R2", "A5", "A6", "transposition".
  std::string origin = "user";

  bool is_norm() const { return kind == RuleKind::Defeasible; }
  /// Identity used for deduplication: antecedent multiset, head and kind.
  std::string shape() const;
};

std::string to_string(const Rule& r);

enum class Quantifier { ForAll, Exists };

/// A quantified rule as written in the source, instantiated by ground_kb.
struct TypeRule {
  std::string id;
  Quantifier quantifier = Quantifier::ForAll;
  std::vector<std::string> variables;
  std::vector<Formula> antecedents;
  Formula consequent;
  RuleKind kind = RuleKind::Defeasible;
  std::optional<std::string> principle;
  int line = 0;
};

struct Principle {
  std::string id;
  std::string text;
};

/// Preorder over principles, stored as its reflexive-transitive closure.
class PrincipleOrder {
 public:
  void add_principle(const std::string& id);
  /// Declares lower <= upper.
  void add_leq(const std::string& lower, const std::string& upper);
  void close();

  bool leq(const std::string& a, const std::string& b) const;
  /// a < b iff a <= b and not b <= a.
  bool less(const std::string& a, const std::string& b) const;
  bool equivalent(const std::string& a, const std::string& b) const { return leq(a, b) && leq(b, a); }

  const std::set<std::pair<std::string, std::string>>& pairs() const { return leq_; }
  bool is_preorder() const;

 private:
  std::set<std::string> elements_;
  std::set<std::pair<std::string, std::string>> leq_;
};

struct KnowledgeBase {
  std::vector<Formula> facts;
  std::vector<Rule> strict_rules;
  std::vector<Rule> norms;
  std::vector<TypeRule> type_rules;
  std::vector<Principle> principles;
  std::map<std::string, std::string> prin;  // norm id -> principle id
  PrincipleOrder principle_order;
  /// Pairs declared with `<` in the source; checked for collapse after closure.
  std::vector<std::pair<std::string, std::string>> declared_strict;
  std::vector<IncompatibilityDecl> incompatibilities;
  std::vector<std::pair<Formula, Formula>> action_prefs;  // (preferred, other)
  std::set<std::string> constants;

  bool has_principle(const std::string& id) const;
  const Principle* find_principle(const std::string& id) const;
  const Rule* find_rule(const std::string& id) const;
  bool is_ground() const { return type_rules.empty(); }
};

}  // namespace lesac
