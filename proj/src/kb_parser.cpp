#include <algorithm>
#include <fstream>
#include <sstream>

#include "lesac/error.hpp"
#include "lesac/formula_parser.hpp"
#include "lesac/kb_frontend.hpp"

namespace lesac {

namespace {

void collect_constants(const Formula& f, std::set<std::string>& out) {
  if (f.is(FormulaKind::Atom)) {
    for (const auto& t : f.terms())
      if (!t.is_variable()) out.insert(t.name);
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_constants(f.operand(i), out);
}

class KbReader {
 public:
  explicit KbReader(std::vector<Token> tokens) : cur_(std::move(tokens)) {}

  KnowledgeBase read() {
    prescan_constants();
    while (!cur_.at_end()) statement();
    finish();
    return std::move(kb_);
  }

 private:
  struct PendingNorm {
    std::string norm;
    std::string principle;
    Token at;
  };

  void prescan_constants() {
    // Constants may be declared after their first use.
    std::vector<Token> toks;
    for (std::size_t i = 0;; ++i) {
      const Token& t = cur_.peek(i);
      if (t.kind == Tok::End) break;
      toks.push_back(t);
    }
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i].kind != Tok::Ident || toks[i].text != "const") continue;
      if (i > 0 && toks[i - 1].kind != Tok::Dot) continue;
      for (std::size_t j = i + 1; j < toks.size() && toks[j].kind != Tok::Dot; ++j)
        if (toks[j].kind == Tok::Ident) cur_.constants.insert(toks[j].text);
    }
  }

  void statement() {
    const Token kw = cur_.expect(Tok::Ident, "at start of statement");
    const std::string& k = kw.text;
    if (k == "const") {
      do kb_.constants.insert(cur_.expect(Tok::Ident, "in const declaration").text);
      while (cur_.accept(Tok::Comma));
    } else if (k == "principle") {
      Principle p;
      const Token id = cur_.expect(Tok::Ident, "after 'principle'");
      p.id = id.text;
      if (cur_.peek().kind == Tok::String) p.text = cur_.next().text;
      if (kb_.has_principle(p.id)) throw Error(ErrorCode::DuplicateId, where(id) + "duplicate principle '" + p.id + "'");
      kb_.principle_order.add_principle(p.id);
      kb_.principles.push_back(std::move(p));
      cur_.accept(Tok::Dot);  // period optional after a principle line
      return;
    } else if (k == "order") {
      order_chain();
    } else if (k == "fact") {
      add_fact(cur_.formula());
    } else if (k == "norm") {
      plain_rule(RuleKind::Defeasible);
    } else if (k == "strict") {
      plain_rule(RuleKind::Strict);
    } else if (k == "rule") {
      type_rule(kw);
    } else if (k == "incompatible") {
      Formula a = cur_.formula();
      cur_.expect(Tok::Comma, "between incompatible actions");
      Formula b = cur_.formula();
      kb_.incompatibilities.push_back({a, b});
    } else if (k == "pref") {
      Formula a = cur_.formula();
      cur_.expect(Tok::Greater, "in pref declaration");
      Formula b = cur_.formula();
      add_fact(Formula::pref(a, b));
    } else {
      cur_.fail(kw, "unknown statement '" + k + "'");
    }
    cur_.expect(Tok::Dot, "to end statement");
  }

  std::string where(const Token& t) const { return std::to_string(t.line) + ":" + std::to_string(t.column) + ": "; }

  void order_chain() {
    std::string prev = cur_.expect(Tok::Ident, "in order declaration").text;
    kb_.principle_order.add_principle(prev);
    while (cur_.peek().kind == Tok::Less || cur_.peek().kind == Tok::Tilde) {
      const bool equiv = cur_.next().kind == Tok::Tilde;
      std::string nxt = cur_.expect(Tok::Ident, "in order declaration").text;
      kb_.principle_order.add_leq(prev, nxt);
      if (equiv)
        kb_.principle_order.add_leq(nxt, prev);
      else
        kb_.declared_strict.push_back({prev, nxt});
      prev = nxt;
    }
  }

  void add_fact(const Formula& f) {
    if (std::find(kb_.facts.begin(), kb_.facts.end(), f) == kb_.facts.end()) kb_.facts.push_back(f);
    if (f.is(FormulaKind::Pref)) kb_.action_prefs.push_back({f.operand(0), f.operand(1)});
  }

  void claim_id(const std::string& id, const Token& at) {
    if (!rule_ids_.insert(id).second) throw Error(ErrorCode::DuplicateId, where(at) + "duplicate rule id '" + id + "'");
  }

  std::vector<Formula> antecedents() {
    std::vector<Formula> out;
    do out.push_back(cur_.body_formula());
    while (cur_.accept(Tok::Comma));
    return out;
  }

  std::optional<std::string> principle_tag() {
    if (!cur_.accept(Tok::LBracket)) return std::nullopt;
    std::string p = cur_.expect(Tok::Ident, "as principle tag").text;
    cur_.expect(Tok::RBracket, "after principle tag");
    return p;
  }

  void plain_rule(RuleKind kind) {
    const Token id = cur_.expect(Tok::Ident, "as rule id");
    Rule r;
    r.id = id.text;
    r.kind = kind;
    claim_id(r.id, id);
    if (kind == RuleKind::Defeasible) r.principle = principle_tag();
    cur_.expect(Tok::Colon, "after rule id");
    r.antecedents = antecedents();
    cur_.expect(kind == RuleKind::Defeasible ? Tok::FatArrow : Tok::Arrow, "between rule body and head");
    r.consequent = cur_.formula();
    if (kind == RuleKind::Defeasible) {
      pending_.push_back({r.id, r.principle.value_or(""), id});
      if (r.principle) kb_.prin[r.id] = *r.principle;
      kb_.norms.push_back(std::move(r));
    } else {
      kb_.strict_rules.push_back(std::move(r));
    }
  }

  void type_rule(const Token& kw) {
    TypeRule t;
    t.line = kw.line;
    Token idtok = kw;
    if (cur_.peek().kind == Tok::Ident && cur_.peek().text != "forall" && cur_.peek().text != "exists") {
      idtok = cur_.next();
      t.id = idtok.text;
      cur_.accept(Tok::Colon);
    } else {
      t.id = "t" + std::to_string(kb_.type_rules.size() + 1);
    }
    claim_id(t.id, idtok);
    const Token q = cur_.expect(Tok::Ident, "as quantifier");
    if (q.text == "forall")
      t.quantifier = Quantifier::ForAll;
    else if (q.text == "exists")
      t.quantifier = Quantifier::Exists;
    else
      cur_.fail(q, "expected 'forall' or 'exists'");
    do t.variables.push_back(cur_.expect(Tok::Ident, "as quantified variable").text);
    while (cur_.accept(Tok::Comma));
    if (t.quantifier == Quantifier::Exists && t.variables.size() != 1)
      cur_.fail(q, "existential type rules bind exactly one variable");
    cur_.expect(Tok::Colon, "after quantifier prefix");

    cur_.bound.insert(t.variables.begin(), t.variables.end());
    t.antecedents = antecedents();
    if (cur_.accept(Tok::SquigArrow))
      t.kind = RuleKind::Defeasible;
    else if (cur_.accept(Tok::Arrow))
      t.kind = RuleKind::Strict;
    else
      cur_.fail(cur_.peek(), "expected '~>' or '->' in type rule");
    t.consequent = cur_.formula();
    cur_.bound.clear();

    t.principle = principle_tag();
    if (t.kind == RuleKind::Defeasible) pending_.push_back({t.id, t.principle.value_or(""), idtok});
    kb_.type_rules.push_back(std::move(t));
  }

  void finish() {
    for (const auto& p : pending_) {
      if (p.principle.empty())
        throw Error(ErrorCode::UnknownPrinciple, where(p.at) + "norm '" + p.norm + "' has no principle tag");
      if (!kb_.has_principle(p.principle))
        throw Error(ErrorCode::UnknownPrinciple,
                    where(p.at) + "norm '" + p.norm + "' references undeclared principle '" + p.principle + "'");
    }
    for (const auto& [a, b] : kb_.principle_order.pairs()) {
      if (!kb_.has_principle(a) || !kb_.has_principle(b))
        throw Error(ErrorCode::UnknownPrinciple, "order mentions undeclared principle '" +
                                                     (kb_.has_principle(a) ? b : a) + "'");
    }
    kb_.principle_order.close();

    for (const auto& [hi, lo] : kb_.action_prefs) {
      if (hi == lo) continue;
      for (const auto& [hi2, lo2] : kb_.action_prefs)
        if (hi2 == lo && lo2 == hi)
          throw Error(ErrorCode::InconsistentPreference,
                      "both Pref(" + hi.str() + ", " + lo.str() + ") and the opposite preference are declared");
    }

    for (const auto& f : kb_.facts) collect_constants(f, kb_.constants);
  }

  TokenCursor cur_;
  KnowledgeBase kb_;
  std::set<std::string> rule_ids_;
  std::vector<PendingNorm> pending_;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view source) { return KbReader(tokenize(source)).read(); }

KnowledgeBase load_kb_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

}  // namespace lesac
