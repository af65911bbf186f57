#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lesac/formula.hpp"
#include "lesac/lexer.hpp"

namespace lesac {

/// Recursive-descent reader over a token stream.
///
/// Precedence, loosest first: `->`/`<->` (right associative), `|`, `&`,
/// prefix `~`. Inside a rule body the top level stops before `->` so the
/// arrow can separate antecedents from the head; parentheses restore the
/// full grammar.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool accept(Tok kind);
  const Token& expect(Tok kind, const char* context);
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const;

  /// Full formula including top-level implication.
  Formula formula();
  /// Formula without a top-level `->`; used for rule antecedents.
  Formula body_formula();

  /// Identifiers treated as variables while parsing (quantifier scope).
  std::set<std::string> bound;
  /// Declared constants. Other lowercase-initial terms read as variables.
  std::set<std::string> constants;

 private:
  Formula implication();
  Formula disjunction();
  Formula conjunction();
  Formula unary();
  Formula primary();

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Parses a standalone formula, e.g. a `--target` argument on the command line.
Formula parse_formula(std::string_view text, const std::set<std::string>& constants = {});

}  // namespace lesac
