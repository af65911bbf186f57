#include "lesac/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace lesac {

struct Formula::Node {
  FormulaKind kind;
  std::string name;  // predicate or bound variable
  std::vector<Term> terms;
  std::vector<Formula> children;
  std::string text;
};

namespace {

bool is_binary(FormulaKind k) {
  return k == FormulaKind::And || k == FormulaKind::Or || k == FormulaKind::Implies;
}

bool is_quantifier(FormulaKind k) { return k == FormulaKind::ForAll || k == FormulaKind::Exists; }

std::string wrap_if_compound(const Formula& f) {
  if (is_binary(f.kind()) || is_quantifier(f.kind())) return "(" + f.str() + ")";
  return f.str();
}

std::string render(FormulaKind kind, const std::string& name, const std::vector<Term>& terms,
                   const std::vector<Formula>& children) {
  switch (kind) {
    case FormulaKind::Atom: {
      if (terms.empty()) return name;
      std::string out = name + "(";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ", ";
        out += terms[i].name;
      }
      return out + ")";
    }
    case FormulaKind::Falsum:
      return "false";
    case FormulaKind::Not:
      return "~" + wrap_if_compound(children[0]);
    case FormulaKind::And:
      return wrap_if_compound(children[0]) + " & " + wrap_if_compound(children[1]);
    case FormulaKind::Or:
      return wrap_if_compound(children[0]) + " | " + wrap_if_compound(children[1]);
    case FormulaKind::Implies:
      return wrap_if_compound(children[0]) + " -> " + wrap_if_compound(children[1]);
    case FormulaKind::Obligation:
      return "O(" + children[0].str() + ")";
    case FormulaKind::Permission:
      return "P(" + children[0].str() + ")";
    case FormulaKind::Pref:
      return "Pref(" + children[0].str() + ", " + children[1].str() + ")";
    case FormulaKind::ForAll:
      return "forall " + name + ": " + children[0].str();
    case FormulaKind::Exists:
      return "exists " + name + ": " + children[0].str();
  }
  return {};
}

}  // namespace

Formula::Formula() : Formula(falsum()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::make(FormulaKind kind, std::vector<Formula> children, std::string name, std::vector<Term> terms) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->text = render(kind, name, terms, children);
  node->name = std::move(name);
  node->terms = std::move(terms);
  node->children = std::move(children);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return make(FormulaKind::Atom, {}, std::move(predicate), std::move(args));
}

Formula Formula::falsum() {
  static const Formula bottom = make(FormulaKind::Falsum, {});
  return bottom;
}

Formula Formula::negation(Formula operand) { return make(FormulaKind::Not, {std::move(operand)}); }

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(FormulaKind::And, {std::move(lhs), std::move(rhs)});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(FormulaKind::Or, {std::move(lhs), std::move(rhs)});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(FormulaKind::Implies, {std::move(lhs), std::move(rhs)});
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

Formula Formula::obligation(Formula operand) { return make(FormulaKind::Obligation, {std::move(operand)}); }

Formula Formula::permission(Formula operand) { return make(FormulaKind::Permission, {std::move(operand)}); }

Formula Formula::pref(Formula preferred, Formula other) {
  return make(FormulaKind::Pref, {std::move(preferred), std::move(other)});
}

Formula Formula::forall(std::string var, Formula body) {
  return make(FormulaKind::ForAll, {std::move(body)}, std::move(var));
}

Formula Formula::exists(std::string var, Formula body) {
  return make(FormulaKind::Exists, {std::move(body)}, std::move(var));
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::predicate() const { return node_->name; }

const std::vector<Term>& Formula::terms() const { return node_->terms; }

const std::string& Formula::variable() const { return node_->name; }

std::size_t Formula::arity() const { return node_->children.size(); }

const Formula& Formula::operand(std::size_t i) const {
  if (i >= node_->children.size()) throw std::out_of_range("formula operand index");
  return node_->children[i];
}

bool Formula::is_ground() const {
  if (is_quantifier(kind())) return false;
  if (kind() == FormulaKind::Atom)
    return std::none_of(terms().begin(), terms().end(), [](const Term& t) { return t.is_variable(); });
  return std::all_of(node_->children.begin(), node_->children.end(),
                     [](const Formula& c) { return c.is_ground(); });
}

const std::string& Formula::str() const { return node_->text; }

bool Formula::operator==(const Formula& other) const {
  return node_ == other.node_ || node_->text == other.node_->text;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  return node_->text <=> other.node_->text;
}

std::string to_string(const Formula& f) { return f.str(); }

Formula negate(const Formula& f) {
  if (f.is(FormulaKind::Not)) return f.operand();
  return Formula::negation(f);
}

namespace {

// Both readings of "psi = -phi": psi = ~phi, or phi = ~psi.
std::vector<Formula> opposites(const Formula& f) {
  std::vector<Formula> out{Formula::negation(f)};
  if (f.is(FormulaKind::Not)) out.push_back(f.operand());
  return out;
}

}  // namespace

std::vector<Formula> conflict_partners(const Formula& phi, const std::vector<IncompatibilityDecl>& decls) {
  std::vector<Formula> out = opposites(phi);
  if (phi.is(FormulaKind::Obligation)) {
    const Formula& act = phi.operand();
    for (auto& a : opposites(act)) out.push_back(Formula::obligation(a));  // O(a), O(~a)
    out.push_back(Formula::negation(Formula::permission(act)));         // O(a), ~P(a)
    for (const auto& d : decls) {
      if (d.left == act) out.push_back(Formula::obligation(d.right));
      if (d.right == act) out.push_back(Formula::obligation(d.left));
    }
  } else if (phi.is(FormulaKind::Not) && phi.operand().is(FormulaKind::Permission)) {
    const Formula& act = phi.operand().operand();
    out.push_back(Formula::obligation(act));  // ~P(a), O(a)
    for (auto& a : opposites(act)) out.push_back(Formula::negation(Formula::permission(a)));  // ~P(a), ~P(~a)
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConflictShape classify_conflict(const Formula& phi, const Formula& psi,
                                const std::vector<IncompatibilityDecl>& decls) {
  if (psi == Formula::negation(phi) || phi == Formula::negation(psi)) return ConflictShape::Negation;
  if (phi.is(FormulaKind::Obligation) && psi.is(FormulaKind::Obligation)) {
    for (const auto& d : decls)
      if (d.matches(phi.operand(), psi.operand())) return ConflictShape::Incompatible;
  }
  auto partners = conflict_partners(phi, {});
  if (std::binary_search(partners.begin(), partners.end(), psi)) return ConflictShape::Bottom;
  return ConflictShape::None;
}

bool inconsistent_pair(const Formula& phi, const Formula& psi, const std::vector<IncompatibilityDecl>& decls) {
  return classify_conflict(phi, psi, decls) != ConflictShape::None;
}

void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  for (std::size_t i = 0; i < f.arity(); ++i) collect_subformulas(f.operand(i), out);
}

Formula substitute(const Formula& f, const std::string& var, const Term& value) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> terms = f.terms();
      bool changed = false;
      for (auto& t : terms) {
        if (t.is_variable() && t.name == var) {
          t = value;
          changed = true;
        }
      }
      return changed ? Formula::atom(f.predicate(), std::move(terms)) : f;
    }
    case FormulaKind::Falsum:
      return f;
    case FormulaKind::Not:
      return Formula::negation(substitute(f.operand(), var, value));
    case FormulaKind::And:
      return Formula::conjunction(substitute(f.operand(0), var, value), substitute(f.operand(1), var, value));
    case FormulaKind::Or:
      return Formula::disjunction(substitute(f.operand(0), var, value), substitute(f.operand(1), var, value));
    case FormulaKind::Implies:
      return Formula::implication(substitute(f.operand(0), var, value), substitute(f.operand(1), var, value));
    case FormulaKind::Obligation:
      return Formula::obligation(substitute(f.operand(), var, value));
    case FormulaKind::Permission:
      return Formula::permission(substitute(f.operand(), var, value));
    case FormulaKind::Pref:
      return Formula::pref(substitute(f.operand(0), var, value), substitute(f.operand(1), var, value));
    case FormulaKind::ForAll:
      if (f.variable() == var) return f;  // shadowed
      return Formula::forall(f.variable(), substitute(f.operand(), var, value));
    case FormulaKind::Exists:
      if (f.variable() == var) return f;
      return Formula::exists(f.variable(), substitute(f.operand(), var, value));
  }
  return f;
}

}  // namespace lesac
