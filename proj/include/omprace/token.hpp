#ifndef OMPRACE_TOKEN_HPP
#define OMPRACE_TOKEN_HPP

#include "omprace/source_loc.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace omprace {

enum class TokenKind {
  Ident,
  IntLit,
  PragmaStart, // the "#pragma" introducer; pragma extent is line-scoped
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Colon,
  Assign,
  PlusAssign,
  MinusAssign,
  StarAssign,
  PlusPlus,
  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  Lt,
  Le,
  Gt,
  Ge,
  EqEq,
  Ne,
  AmpAmp,
  PipePipe,
  Not,
  Eof,
};

const char *tokenKindName(TokenKind k);

struct Token {
  TokenKind kind;
  std::string text; // identifier spelling or literal digits
  int64_t intValue = 0;
  SourceLoc loc; // location of the token's first character
};

} // namespace omprace

#endif
