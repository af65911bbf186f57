#include "lesac/formula_parser.hpp"

#include <cctype>

#include "lesac/error.hpp"

namespace lesac {

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::SquigArrow: return "'~>'";
    case Tok::Iff: return "'<->'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      std::string text;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        text += src[j++];
      }
      if (j >= src.size()) throw SyntaxError(tl, tc, "unterminated string");
      out.push_back({Tok::String, std::move(text), tl, tc});
      advance(j + 1 - i);
      continue;
    }
    struct Punct {
      std::string_view text;
      Tok kind;
    };
    static constexpr Punct puncts[] = {
        {"<->", Tok::Iff}, {"->", Tok::Arrow}, {"=>", Tok::FatArrow}, {"~>", Tok::SquigArrow},
        {"(", Tok::LParen}, {")", Tok::RParen}, {"[", Tok::LBracket}, {"]", Tok::RBracket},
        {",", Tok::Comma},  {".", Tok::Dot},    {":", Tok::Colon},     {"~", Tok::Tilde},
        {"&", Tok::Amp},    {"|", Tok::Bar},    {"<", Tok::Less},      {">", Tok::Greater},
    };
    bool matched = false;
    for (const auto& p : puncts) {
      if (starts(p.text)) {
        out.push_back({p.kind, std::string(p.text), tl, tc});
        advance(p.text.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError(tl, tc, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  std::size_t idx = pos_ + ahead;
  if (idx >= tokens_.size()) return tokens_.back();
  return tokens_[idx];
}

const Token& TokenCursor::next() {
  const Token& t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenCursor::accept(Tok kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token& TokenCursor::expect(Tok kind, const char* context) {
  if (peek().kind != kind)
    fail(peek(), std::string("expected ") + describe(kind) + " " + context + ", found " +
                     (peek().kind == Tok::End ? std::string("end of input") : "'" + peek().text + "'"));
  return next();
}

void TokenCursor::fail(const Token& at, const std::string& msg) const { throw SyntaxError(at.line, at.column, msg); }

Formula TokenCursor::formula() { return implication(); }

Formula TokenCursor::body_formula() { return disjunction(); }

Formula TokenCursor::implication() {
  Formula lhs = disjunction();
  if (accept(Tok::Arrow)) return Formula::implication(lhs, implication());
  if (accept(Tok::Iff)) return Formula::biconditional(lhs, implication());
  return lhs;
}

Formula TokenCursor::disjunction() {
  Formula lhs = conjunction();
  while (accept(Tok::Bar)) lhs = Formula::disjunction(lhs, conjunction());
  return lhs;
}

Formula TokenCursor::conjunction() {
  Formula lhs = unary();
  while (accept(Tok::Amp)) lhs = Formula::conjunction(lhs, unary());
  return lhs;
}

Formula TokenCursor::unary() {
  if (accept(Tok::Tilde)) return Formula::negation(unary());
  return primary();
}

Formula TokenCursor::primary() {
  if (accept(Tok::LParen)) {
    Formula inner = formula();
    expect(Tok::RParen, "to close '('");
    return inner;
  }
  const Token& id = expect(Tok::Ident, "in formula");
  const std::string& name = id.text;
  const bool call = peek().kind == Tok::LParen;

  if (call && (name == "O" || name == "P")) {
    next();
    Formula inner = formula();
    expect(Tok::RParen, "after deontic operand");
    return name == "O" ? Formula::obligation(inner) : Formula::permission(inner);
  }
  if (call && name == "Pref") {
    next();
    Formula preferred = formula();
    expect(Tok::Comma, "between Pref operands");
    Formula other = formula();
    expect(Tok::RParen, "after Pref operands");
    return Formula::pref(preferred, other);
  }
  if (!call && (name == "false" || name == "bot")) return Formula::falsum();
  if (!call && (name == "forall" || name == "exists"))
    fail(id, "quantifiers are only allowed as a rule prefix");

  std::vector<Term> terms;
  if (call) {
    next();
    do {
      const Token& t = expect(Tok::Ident, "as predicate argument");
      if (peek().kind == Tok::LParen) fail(peek(), "function symbols are not supported");
      const bool lower = std::islower(static_cast<unsigned char>(t.text[0]));
      if (bound.count(t.text) || (lower && !constants.count(t.text)))
        terms.push_back(Term::variable(t.text));
      else
        terms.push_back(Term::constant(t.text));
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "after predicate arguments");
  }
  return Formula::atom(name, std::move(terms));
}

Formula parse_formula(std::string_view text, const std::set<std::string>& constants) {
  TokenCursor cur(tokenize(text));
  cur.constants = constants;
  Formula f = cur.formula();
  if (!cur.at_end()) cur.fail(cur.peek(), "trailing input after formula");
  return f;
}

}  // namespace lesac
