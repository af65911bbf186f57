#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lesac {

struct Term {
  enum class Kind { Constant, Variable };

  Kind kind = Kind::Constant;
  std::string name;

  static Term constant(std::string name) { return {Kind::Constant, std::move(name)}; }
  static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }

  bool is_variable() const { return kind == Kind::Variable; }
  bool operator==(const Term&) const = default;
};

enum class FormulaKind {
  Atom,
  Falsum,
  Not,
  And,
  Or,
  Implies,
  Obligation,
  Permission,
  Pref,
  ForAll,
  Exists,
};

/// Immutable formula tree of the deontic language.
///
/// Nodes are shared; copying a Formula is cheap. Equality and ordering are
/// syntactic and go through the canonical text, so two formulas compare equal
/// iff they print identically.
class Formula {
 public:
  Formula();  // Falsum

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula falsum();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula obligation(Formula operand);
  static Formula permission(Formula operand);
  static Formula pref(Formula preferred, Formula other);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  FormulaKind kind() const;
  const std::string& predicate() const;  // Atom only
  const std::vector<Term>& terms() const;  // Atom only
  const std::string& variable() const;  // quantifiers only
  std::size_t arity() const;  // number of formula children
  const Formula& operand(std::size_t i = 0) const;

  bool is(FormulaKind k) const { return kind() == k; }
  bool is_ground() const;

  /// Canonical text; parses back to an equal formula.
  const std::string& str() const;

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula make(FormulaKind kind, std::vector<Formula> children, std::string name = {},
                      std::vector<Term> terms = {});

  std::shared_ptr<const Node> node_;
};

std::string to_string(const Formula& f);

/// The "-" operator: strips one outer negation, otherwise adds one.
Formula negate(const Formula& f);

/// Unordered pair of action formulas whose obligations cannot both hold.
struct IncompatibilityDecl {
  Formula left;
  Formula right;

  bool matches(const Formula& a, const Formula& b) const {
    return (left == a && right == b) || (left == b && right == a);
  }
};

/// Every formula that forms a bottom-implying pair with `phi`: its negation,
/// the deontic clash shapes O(a)/O(-a), O(a)/~P(a), ~P(a)/~P(-a), and the
/// declared incompatibilities.
std::vector<Formula> conflict_partners(const Formula& phi, const std::vector<IncompatibilityDecl>& decls);

bool inconsistent_pair(const Formula& phi, const Formula& psi, const std::vector<IncompatibilityDecl>& decls);

/// Which of the conflict shapes links two formulas.
enum class ConflictShape { None, Negation, Bottom, Incompatible };
ConflictShape classify_conflict(const Formula& phi, const Formula& psi,
                                const std::vector<IncompatibilityDecl>& decls);

/// All subformulas of `f`, including `f` itself.
void collect_subformulas(const Formula& f, std::vector<Formula>& out);

/// Replace every occurrence of variable `var` by `value`.
Formula substitute(const Formula& f, const std::string& var, const Term& value);

}  // namespace lesac

template <>
struct std::hash<lesac::Formula> {
  std::size_t operator()(const lesac::Formula& f) const noexcept { return std::hash<std::string>{}(f.str()); }
};
