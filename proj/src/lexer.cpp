#include "omprace/lexer.hpp"

#include <cctype>
#include <optional>

namespace omprace {

const char *severityName(Severity s) {
  switch (s) {
  case Severity::Race:
    return "race";
  case Severity::UnsupportedPragma:
    return "unsupported-pragma";
  case Severity::SyntaxError:
    return "syntax-error";
  case Severity::IllegalCharacter:
    return "illegal-character";
  case Severity::Warning:
    return "warning";
  }
  return "unknown";
}

const char *tokenKindName(TokenKind k) {
  switch (k) {
  case TokenKind::Ident:
    return "identifier";
  case TokenKind::IntLit:
    return "integer literal";
  case TokenKind::PragmaStart:
    return "#pragma";
  case TokenKind::LParen:
    return "'('";
  case TokenKind::RParen:
    return "')'";
  case TokenKind::LBrace:
    return "'{'";
  case TokenKind::RBrace:
    return "'}'";
  case TokenKind::LBracket:
    return "'['";
  case TokenKind::RBracket:
    return "']'";
  case TokenKind::Semi:
    return "';'";
  case TokenKind::Comma:
    return "','";
  case TokenKind::Colon:
    return "':'";
  case TokenKind::Assign:
    return "'='";
  case TokenKind::PlusAssign:
    return "'+='";
  case TokenKind::MinusAssign:
    return "'-='";
  case TokenKind::StarAssign:
    return "'*='";
  case TokenKind::PlusPlus:
    return "'++'";
  case TokenKind::Plus:
    return "'+'";
  case TokenKind::Minus:
    return "'-'";
  case TokenKind::Star:
    return "'*'";
  case TokenKind::Slash:
    return "'/'";
  case TokenKind::Percent:
    return "'%'";
  case TokenKind::Lt:
    return "'<'";
  case TokenKind::Le:
    return "'<='";
  case TokenKind::Gt:
    return "'>'";
  case TokenKind::Ge:
    return "'>='";
  case TokenKind::EqEq:
    return "'=='";
  case TokenKind::Ne:
    return "'!='";
  case TokenKind::AmpAmp:
    return "'&&'";
  case TokenKind::PipePipe:
    return "'||'";
  case TokenKind::Not:
    return "'!'";
  case TokenKind::Eof:
    return "end of input";
  }
  return "token";
}

namespace {

class Lexer {
public:
  Lexer(const std::string &src, const std::string &file, DiagnosticSink &diags)
      : src_(src), file_(file), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipTrivia();
      if (atEnd()) {
        out.push_back(Token{TokenKind::Eof, "", 0, loc()});
        return out;
      }
      if (auto t = next())
        out.push_back(*t);
    }
  }

private:
  bool atEnd() const { return pos_ >= src_.size(); }
  char peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }
  SourceLoc loc() const { return SourceLoc{file_, line_, col_}; }

  void advance() {
    if (atEnd())
      return;
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skipTrivia() {
    while (!atEnd()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!atEnd() && peek() != '\n')
          advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceLoc open = loc();
        advance();
        advance();
        bool closed = false;
        while (!atEnd()) {
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            closed = true;
            break;
          }
          advance();
        }
        if (!closed)
          diags_.report(Severity::SyntaxError, open, "unterminated comment");
      } else {
        return;
      }
    }
  }

  Token makeAndAdvance(TokenKind k, int chars) {
    Token t{k, src_.substr(pos_, chars), 0, loc()};
    for (int i = 0; i < chars; ++i)
      advance();
    return t;
  }

  // Returns nullopt when the input at the cursor is skipped (illegal byte,
  // stray '#'); the caller loops.
  std::optional<Token> next() {
    SourceLoc at = loc();
    char c = peek();

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '_'))
        text += src_[pos_], advance();
      return Token{TokenKind::Ident, text, 0, at};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
        text += src_[pos_], advance();
      int64_t value = 0;
      for (char d : text) {
        value = value * 10 + (d - '0');
        if (value > (int64_t{1} << 62)) // clamp absurd literals
          value = int64_t{1} << 62;
      }
      return Token{TokenKind::IntLit, text, value, at};
    }

    switch (c) {
    case '#': {
      // Only "#pragma" is legal; the pragma body is lexed as ordinary
      // tokens and delimited by the line number carried in their locations.
      advance();
      skipTrivia();
      std::string word;
      SourceLoc wordAt = loc();
      while (!atEnd() && std::isalpha(static_cast<unsigned char>(peek())))
        word += src_[pos_], advance();
      if (word != "pragma") {
        diags_.report(Severity::IllegalCharacter, at,
                      "'#' not followed by 'pragma'");
        (void)wordAt;
        return std::nullopt;
      }
      return Token{TokenKind::PragmaStart, "#pragma", 0, at};
    }
    case '(':
      return makeAndAdvance(TokenKind::LParen, 1);
    case ')':
      return makeAndAdvance(TokenKind::RParen, 1);
    case '{':
      return makeAndAdvance(TokenKind::LBrace, 1);
    case '}':
      return makeAndAdvance(TokenKind::RBrace, 1);
    case '[':
      return makeAndAdvance(TokenKind::LBracket, 1);
    case ']':
      return makeAndAdvance(TokenKind::RBracket, 1);
    case ';':
      return makeAndAdvance(TokenKind::Semi, 1);
    case ',':
      return makeAndAdvance(TokenKind::Comma, 1);
    case ':':
      return makeAndAdvance(TokenKind::Colon, 1);
    case '=':
      if (peek(1) == '=')
        return makeAndAdvance(TokenKind::EqEq, 2);
      return makeAndAdvance(TokenKind::Assign, 1);
    case '+':
      if (peek(1) == '+')
        return makeAndAdvance(TokenKind::PlusPlus, 2);
      if (peek(1) == '=')
        return makeAndAdvance(TokenKind::PlusAssign, 2);
      return makeAndAdvance(TokenKind::Plus, 1);
    case '-':
      if (peek(1) == '=')
        return makeAndAdvance(TokenKind::MinusAssign, 2);
      return makeAndAdvance(TokenKind::Minus, 1);
    case '*':
      if (peek(1) == '=')
        return makeAndAdvance(TokenKind::StarAssign, 2);
      return makeAndAdvance(TokenKind::Star, 1);
    case '/':
      return makeAndAdvance(TokenKind::Slash, 1);
    case '%':
      return makeAndAdvance(TokenKind::Percent, 1);
    case '<':
      if (peek(1) == '=')
        return makeAndAdvance(TokenKind::Le, 2);
      return makeAndAdvance(TokenKind::Lt, 1);
    case '>':
      if (peek(1) == '=')
        return makeAndAdvance(TokenKind::Ge, 2);
      return makeAndAdvance(TokenKind::Gt, 1);
    case '!':
      if (peek(1) == '=')
        return makeAndAdvance(TokenKind::Ne, 2);
      return makeAndAdvance(TokenKind::Not, 1);
    case '&':
      if (peek(1) == '&')
        return makeAndAdvance(TokenKind::AmpAmp, 2);
      break;
    case '|':
      if (peek(1) == '|')
        return makeAndAdvance(TokenKind::PipePipe, 2);
      break;
    default:
      break;
    }

    diags_.report(Severity::IllegalCharacter, at,
                  std::string("illegal character '") + c + "'");
    advance();
    return std::nullopt;
  }

  const std::string &src_;
  std::string file_;
  DiagnosticSink &diags_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

} // namespace

std::vector<Token> tokenize(const std::string &source, const std::string &file,
                            DiagnosticSink &diags) {
  return Lexer(source, file, diags).run();
}

} // namespace omprace
