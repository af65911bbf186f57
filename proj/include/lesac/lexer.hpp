#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lesac {

enum class Tok {
  Ident,
  String,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Colon,
  Tilde,
  Amp,
  Bar,
  Arrow,       // ->
  FatArrow,    // =>
  SquigArrow,  // ~>
  Iff,         // <->
  Less,
  Greater,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

/// Splits `.lsc` source into tokens; `#` starts a line comment.
std::vector<Token> tokenize(std::string_view source);

const char* describe(Tok kind);

}  // namespace lesac
