#include "omprace/parser.hpp"

#include "omprace/lexer.hpp"

#include <algorithm>
#include <set>

namespace omprace {

namespace {

constexpr int kMaxNesting = 200;

// Directive keywords that can open (or combine into) a construct. Everything
// else after "omp" is an unsupported directive.
const std::set<std::string> &directiveKeywords() {
  static const std::set<std::string> kws = {
      "parallel", "for",      "simd",   "single", "master",
      "sections", "section",  "critical", "atomic", "barrier",
      "target",   "teams",    "distribute"};
  return kws;
}

struct Bail {}; // thrown on syntax errors; caught at recovery points

class Parser {
public:
  Parser(const std::vector<Token> &tokens, DiagnosticSink &diags)
      : toks_(tokens), diags_(diags) {}

  Program run() {
    Program prog;
    while (!at(TokenKind::Eof)) {
      size_t before = pos_;
      try {
        parseTopLevel(prog);
      } catch (Bail &) {
        syncTopLevel();
      }
      if (pos_ == before)
        ++pos_; // guarantee progress on malformed input
    }
    return prog;
  }

private:
  // ---- token plumbing -----------------------------------------------------

  const Token &peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool atIdent(const char *text) const {
    return at(TokenKind::Ident) && peek().text == text;
  }
  const Token &advance() {
    const Token &t = toks_[std::min(pos_, toks_.size() - 1)];
    if (pos_ + 1 < toks_.size())
      ++pos_;
    else
      pos_ = toks_.size() - 1;
    return t;
  }
  bool accept(TokenKind k) {
    if (!at(k))
      return false;
    advance();
    return true;
  }
  const Token &expect(TokenKind k, const char *what) {
    if (!at(k)) {
      diags_.report(Severity::SyntaxError, peek().loc,
                    std::string("expected ") + what + " but found " +
                        tokenKindName(peek().kind));
      throw Bail{};
    }
    return advance();
  }

  void syncStmt() {
    while (!at(TokenKind::Eof)) {
      if (accept(TokenKind::Semi))
        return;
      if (at(TokenKind::RBrace))
        return;
      advance();
    }
  }
  void syncTopLevel() {
    while (!at(TokenKind::Eof)) {
      if (atIdent("int") || atIdent("void"))
        return;
      advance();
    }
  }

  struct DepthGuard {
    Parser &p;
    explicit DepthGuard(Parser &parser) : p(parser) {
      if (++p.depth_ > kMaxNesting) {
        p.diags_.report(Severity::SyntaxError, p.peek().loc,
                        "nesting too deep");
        --p.depth_;
        throw Bail{};
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  // ---- top level ----------------------------------------------------------

  void parseTopLevel(Program &prog) {
    if (!atIdent("int") && !atIdent("void")) {
      diags_.report(Severity::SyntaxError, peek().loc,
                    std::string("expected a declaration but found ") +
                        tokenKindName(peek().kind));
      throw Bail{};
    }
    // Function definition: type name '(' ...; otherwise file-scope variables.
    if (peek(1).kind == TokenKind::Ident &&
        peek(2).kind == TokenKind::LParen) {
      parseFunction(prog);
      return;
    }
    if (atIdent("void")) {
      diags_.report(Severity::SyntaxError, peek().loc,
                    "'void' is only valid as a function return type");
      throw Bail{};
    }
    parseDeclGroup(prog.globals);
  }

  void parseFunction(Program &prog) {
    Function fn;
    fn.returnType = advance().text;
    const Token &nameTok = expect(TokenKind::Ident, "a function name");
    fn.name = nameTok.text;
    fn.loc = nameTok.loc;
    expect(TokenKind::LParen, "'('");
    if (!at(TokenKind::RParen)) {
      if (atIdent("void") && peek(1).kind == TokenKind::RParen) {
        advance();
      } else {
        while (true) {
          expectKeyword("int");
          Param param;
          const Token &p = expect(TokenKind::Ident, "a parameter name");
          param.name = p.text;
          param.loc = p.loc;
          if (accept(TokenKind::LBracket)) {
            expect(TokenKind::RBracket, "']'");
            param.isArray = true;
          }
          fn.params.push_back(std::move(param));
          if (!accept(TokenKind::Comma))
            break;
        }
      }
    }
    expect(TokenKind::RParen, "')'");
    if (accept(TokenKind::Semi))
      return; // prototype; definitions are what we analyze
    fn.body = parseBlock();
    prog.functions.push_back(std::move(fn));
  }

  void expectKeyword(const char *kw) {
    if (!atIdent(kw)) {
      diags_.report(Severity::SyntaxError, peek().loc,
                    std::string("expected '") + kw + "'");
      throw Bail{};
    }
    advance();
  }

  // ---- statements ---------------------------------------------------------

  StmtPtr parseBlock() {
    DepthGuard guard(*this);
    const Token &open = expect(TokenKind::LBrace, "'{'");
    std::vector<StmtPtr> stmts;
    while (!at(TokenKind::RBrace) && !at(TokenKind::Eof)) {
      size_t before = pos_;
      try {
        parseInto(stmts);
      } catch (Bail &) {
        syncStmt();
      }
      if (pos_ == before)
        ++pos_;
    }
    expect(TokenKind::RBrace, "'}'");
    return makeBlock(std::move(stmts), open.loc);
  }

  // Appends one parsed item; declarations may expand to several statements
  // ("int a, b;") without introducing a scope.
  void parseInto(std::vector<StmtPtr> &out) {
    if (atIdent("int")) {
      parseDeclGroup(out);
      return;
    }
    if (StmtPtr s = parseStmt())
      out.push_back(std::move(s));
  }

  void parseDeclGroup(std::vector<StmtPtr> &out) {
    expectKeyword("int");
    while (true) {
      out.push_back(parseDeclarator());
      if (!accept(TokenKind::Comma))
        break;
    }
    expect(TokenKind::Semi, "';'");
  }

  StmtPtr parseDeclarator() {
    const Token &nameTok = expect(TokenKind::Ident, "a variable name");
    bool isArray = false;
    int64_t size = 0;
    ExprPtr init;
    if (accept(TokenKind::LBracket)) {
      isArray = true;
      if (at(TokenKind::IntLit))
        size = advance().intValue;
      expect(TokenKind::RBracket, "']'");
    } else if (accept(TokenKind::Assign)) {
      init = parseExpr();
    }
    return makeDecl(nameTok.text, isArray, size, std::move(init), nameTok.loc);
  }

  // May return null when a directive was reported and skipped; statement
  // lists simply move on, single-statement contexts use parseStmtNonNull.
  StmtPtr parseStmt() {
    DepthGuard guard(*this);
    switch (peek().kind) {
    case TokenKind::LBrace:
      return parseBlock();
    case TokenKind::Semi:
      return makeBlock({}, advance().loc);
    case TokenKind::PragmaStart:
      return parsePragma();
    case TokenKind::Ident:
      break;
    default:
      diags_.report(Severity::SyntaxError, peek().loc,
                    std::string("expected a statement but found ") +
                        tokenKindName(peek().kind));
      throw Bail{};
    }
    if (atIdent("if"))
      return parseIf();
    if (atIdent("for"))
      return parseFor();
    if (atIdent("return")) {
      const Token &kw = advance();
      ExprPtr value;
      if (!at(TokenKind::Semi))
        value = parseExpr();
      expect(TokenKind::Semi, "';'");
      return makeReturn(std::move(value), kw.loc);
    }
    if (atIdent("int")) {
      // Single-declarator form for contexts like a for-init.
      advance();
      StmtPtr d = parseDeclarator();
      expect(TokenKind::Semi, "';'");
      return d;
    }
    if (peek(1).kind == TokenKind::LParen) {
      // Call statement.
      const Token &nameTok = advance();
      advance(); // '('
      std::vector<ExprPtr> args;
      if (!at(TokenKind::RParen)) {
        while (true) {
          args.push_back(parseExpr());
          if (!accept(TokenKind::Comma))
            break;
        }
      }
      expect(TokenKind::RParen, "')'");
      expect(TokenKind::Semi, "';'");
      return makeCall(nameTok.text, std::move(args), nameTok.loc);
    }
    StmtPtr s = parseAssignLike();
    expect(TokenKind::Semi, "';'");
    return s;
  }

  StmtPtr parseStmtNonNull() {
    while (!at(TokenKind::Eof)) {
      size_t before = pos_;
      if (StmtPtr s = parseStmt())
        return s;
      if (pos_ == before)
        ++pos_;
    }
    return makeBlock({}, peek().loc);
  }

  StmtPtr parseIf() {
    const Token &kw = advance();
    expect(TokenKind::LParen, "'('");
    ExprPtr cond = parseExpr();
    expect(TokenKind::RParen, "')'");
    StmtPtr thenS = parseStmtNonNull();
    StmtPtr elseS;
    if (atIdent("else")) {
      advance();
      elseS = parseStmtNonNull();
    }
    return makeIf(std::move(cond), std::move(thenS), std::move(elseS), kw.loc);
  }

  StmtPtr parseFor() {
    const Token &kw = advance();
    expect(TokenKind::LParen, "'('");
    StmtPtr init;
    if (atIdent("int")) {
      advance();
      init = parseDeclarator();
    } else {
      init = parseAssignLike();
    }
    expect(TokenKind::Semi, "';'");
    ExprPtr cond = parseExpr();
    expect(TokenKind::Semi, "';'");
    StmtPtr incr = parseAssignLike();
    expect(TokenKind::RParen, "')'");
    StmtPtr body = parseStmtNonNull();
    return makeForLoop(std::move(init), std::move(cond), std::move(incr),
                       std::move(body), kw.loc);
  }

  // Assignment, compound assignment, or increment; compound forms are
  // desugared so later passes see plain "lhs = lhs op rhs".
  StmtPtr parseAssignLike() {
    const Token &nameTok = expect(TokenKind::Ident, "an assignable variable");
    ExprPtr lhs;
    if (accept(TokenKind::LBracket)) {
      ExprPtr index = parseExpr();
      expect(TokenKind::RBracket, "']'");
      lhs = makeArrayRef(nameTok.text, std::move(index), nameTok.loc);
    } else {
      lhs = makeVarRef(nameTok.text, nameTok.loc);
    }
    const Token &op = peek();
    switch (op.kind) {
    case TokenKind::Assign: {
      advance();
      ExprPtr rhs = parseExpr();
      return makeAssign(std::move(lhs), std::move(rhs), nameTok.loc);
    }
    case TokenKind::PlusAssign:
    case TokenKind::MinusAssign:
    case TokenKind::StarAssign: {
      advance();
      BinOp bop = op.kind == TokenKind::PlusAssign  ? BinOp::Add
                  : op.kind == TokenKind::MinusAssign ? BinOp::Sub
                                                      : BinOp::Mul;
      ExprPtr rhs = parseExpr();
      ExprPtr expanded =
          makeBinary(bop, cloneExpr(*lhs), std::move(rhs), op.loc);
      return makeAssign(std::move(lhs), std::move(expanded), nameTok.loc);
    }
    case TokenKind::PlusPlus: {
      advance();
      ExprPtr expanded = makeBinary(BinOp::Add, cloneExpr(*lhs),
                                    makeIntLit(1, op.loc), op.loc);
      return makeAssign(std::move(lhs), std::move(expanded), nameTok.loc);
    }
    default:
      diags_.report(Severity::SyntaxError, op.loc,
                    std::string("expected an assignment operator but found ") +
                        tokenKindName(op.kind));
      throw Bail{};
    }
  }

  // ---- expressions --------------------------------------------------------

  ExprPtr parseExpr() { return parseOr(); }

  ExprPtr parseOr() {
    ExprPtr e = parseAnd();
    while (at(TokenKind::PipePipe)) {
      SourceLoc loc = advance().loc;
      e = makeBinary(BinOp::Or, std::move(e), parseAnd(), loc);
    }
    return e;
  }
  ExprPtr parseAnd() {
    ExprPtr e = parseEquality();
    while (at(TokenKind::AmpAmp)) {
      SourceLoc loc = advance().loc;
      e = makeBinary(BinOp::And, std::move(e), parseEquality(), loc);
    }
    return e;
  }
  ExprPtr parseEquality() {
    ExprPtr e = parseRelational();
    while (at(TokenKind::EqEq) || at(TokenKind::Ne)) {
      BinOp op = at(TokenKind::EqEq) ? BinOp::Eq : BinOp::Ne;
      SourceLoc loc = advance().loc;
      e = makeBinary(op, std::move(e), parseRelational(), loc);
    }
    return e;
  }
  ExprPtr parseRelational() {
    ExprPtr e = parseAdditive();
    while (at(TokenKind::Lt) || at(TokenKind::Le) || at(TokenKind::Gt) ||
           at(TokenKind::Ge)) {
      BinOp op = at(TokenKind::Lt)   ? BinOp::Lt
                 : at(TokenKind::Le) ? BinOp::Le
                 : at(TokenKind::Gt) ? BinOp::Gt
                                     : BinOp::Ge;
      SourceLoc loc = advance().loc;
      e = makeBinary(op, std::move(e), parseAdditive(), loc);
    }
    return e;
  }
  ExprPtr parseAdditive() {
    ExprPtr e = parseMultiplicative();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      BinOp op = at(TokenKind::Plus) ? BinOp::Add : BinOp::Sub;
      SourceLoc loc = advance().loc;
      e = makeBinary(op, std::move(e), parseMultiplicative(), loc);
    }
    return e;
  }
  ExprPtr parseMultiplicative() {
    ExprPtr e = parseUnary();
    while (at(TokenKind::Star) || at(TokenKind::Slash) ||
           at(TokenKind::Percent)) {
      BinOp op = at(TokenKind::Star)    ? BinOp::Mul
                 : at(TokenKind::Slash) ? BinOp::Div
                                        : BinOp::Rem;
      SourceLoc loc = advance().loc;
      e = makeBinary(op, std::move(e), parseUnary(), loc);
    }
    return e;
  }
  ExprPtr parseUnary() {
    DepthGuard guard(*this);
    if (at(TokenKind::Minus)) {
      SourceLoc loc = advance().loc;
      return makeUnary(UnOp::Neg, parseUnary(), loc);
    }
    if (at(TokenKind::Not)) {
      SourceLoc loc = advance().loc;
      return makeUnary(UnOp::Not, parseUnary(), loc);
    }
    return parsePrimary();
  }
  ExprPtr parsePrimary() {
    DepthGuard guard(*this);
    if (at(TokenKind::IntLit)) {
      const Token &t = advance();
      return makeIntLit(t.intValue, t.loc);
    }
    if (at(TokenKind::LParen)) {
      advance();
      ExprPtr e = parseExpr();
      expect(TokenKind::RParen, "')'");
      return e;
    }
    if (at(TokenKind::Ident)) {
      const Token &t = advance();
      if (accept(TokenKind::LBracket)) {
        ExprPtr index = parseExpr();
        expect(TokenKind::RBracket, "']'");
        return makeArrayRef(t.text, std::move(index), t.loc);
      }
      if (at(TokenKind::LParen)) {
        diags_.report(Severity::SyntaxError, peek().loc,
                      "function calls are only supported as statements");
        throw Bail{};
      }
      return makeVarRef(t.text, t.loc);
    }
    diags_.report(Severity::SyntaxError, peek().loc,
                  std::string("expected an expression but found ") +
                      tokenKindName(peek().kind));
    throw Bail{};
  }

  // ---- pragmas ------------------------------------------------------------

  bool atLine(int line) const {
    return !at(TokenKind::Eof) && peek().loc.line == line;
  }

  void skipRestOfPragmaLine(int line) {
    while (atLine(line))
      advance();
  }

  // The directive extends to the end of the introducer's line; the tokens of
  // the following lines belong to the construct body.
  StmtPtr parsePragma() {
    const Token &intro = advance(); // PragmaStart
    int line = intro.loc.line;
    if (!atLine(line) || !atIdent("omp")) {
      diags_.report(Severity::UnsupportedPragma, intro.loc,
                    "ignoring non-OpenMP pragma");
      skipRestOfPragmaLine(line);
      return nullptr;
    }
    advance(); // omp

    std::vector<std::string> kws;
    while (atLine(line) && at(TokenKind::Ident) &&
           directiveKeywords().count(peek().text))
      kws.push_back(advance().text);

    if (kws.empty()) {
      std::string what = atLine(line) && at(TokenKind::Ident)
                             ? "unsupported OpenMP directive '" +
                                   peek().text + "'"
                             : "missing OpenMP directive name";
      diags_.report(Severity::UnsupportedPragma, intro.loc, what);
      skipRestOfPragmaLine(line);
      return nullptr;
    }

    if (kws.size() == 1 && kws[0] == "barrier") {
      skipTrailingPragmaTokens(line);
      return makeBarrier(intro.loc);
    }

    // Decompose the keyword sequence into wrapper constructs around one core
    // construct. "parallel for" fuses; "simd" and a "distribute" prefix of
    // "parallel for" fold into the loop construct they modify.
    std::vector<PragmaKind> wrappers;
    PragmaInfo core;
    bool haveCore = false;
    for (size_t i = 0; i < kws.size();) {
      const std::string &k = kws[i];
      if (haveCore) {
        diags_.report(Severity::SyntaxError, intro.loc,
                      "unexpected directive keyword '" + k + "'");
        skipRestOfPragmaLine(line);
        return nullptr;
      }
      if (k == "target") {
        wrappers.push_back(PragmaKind::Target);
        ++i;
      } else if (k == "teams") {
        wrappers.push_back(PragmaKind::Teams);
        ++i;
      } else if (k == "parallel") {
        if (i + 1 < kws.size() && kws[i + 1] == "for") {
          core.kind = PragmaKind::ParallelFor;
          haveCore = true;
          i += 2;
        } else {
          wrappers.push_back(PragmaKind::Parallel);
          ++i;
        }
      } else if (k == "distribute") {
        if (i + 2 < kws.size() && kws[i + 1] == "parallel" &&
            kws[i + 2] == "for") {
          core.kind = PragmaKind::ParallelFor;
          core.distributed = true;
          haveCore = true;
          i += 3;
        } else {
          core.kind = PragmaKind::Distribute;
          haveCore = true;
          ++i;
        }
      } else if (k == "for") {
        core.kind = PragmaKind::For;
        haveCore = true;
        ++i;
      } else if (k == "simd") {
        core.kind = PragmaKind::Simd;
        haveCore = true;
        ++i;
      } else if (k == "sections") {
        core.kind = PragmaKind::Sections;
        haveCore = true;
        ++i;
      } else if (k == "section") {
        core.kind = PragmaKind::Section;
        haveCore = true;
        ++i;
      } else if (k == "single") {
        core.kind = PragmaKind::Single;
        haveCore = true;
        ++i;
      } else if (k == "master") {
        core.kind = PragmaKind::Master;
        haveCore = true;
        ++i;
      } else if (k == "critical") {
        core.kind = PragmaKind::Critical;
        haveCore = true;
        ++i;
      } else if (k == "atomic") {
        core.kind = PragmaKind::Atomic;
        haveCore = true;
        ++i;
      } else {
        diags_.report(Severity::SyntaxError, intro.loc,
                      "unexpected directive keyword '" + k + "'");
        skipRestOfPragmaLine(line);
        return nullptr;
      }
      // A trailing "simd" folds into any loop construct.
      if (haveCore &&
          (core.kind == PragmaKind::For ||
           core.kind == PragmaKind::ParallelFor ||
           core.kind == PragmaKind::Distribute) &&
          i < kws.size() && kws[i] == "simd") {
        core.simd = true;
        ++i;
      }
    }
    if (!haveCore) {
      core.kind = wrappers.back();
      wrappers.pop_back();
    }

    if (core.kind == PragmaKind::Critical && atLine(line) &&
        at(TokenKind::LParen)) {
      advance();
      core.criticalName = expect(TokenKind::Ident, "a critical name").text;
      expect(TokenKind::RParen, "')'");
    }

    parseClauses(core.clauses, line);
    skipTrailingPragmaTokens(line);

    if (core.kind == PragmaKind::Section)
      diags_.report(Severity::SyntaxError, intro.loc,
                    "'section' outside of a 'sections' construct");

    StmtPtr body;
    switch (core.kind) {
    case PragmaKind::Sections:
      body = parseSectionsBody();
      break;
    case PragmaKind::For:
    case PragmaKind::ParallelFor:
    case PragmaKind::Simd:
    case PragmaKind::Distribute:
      body = parseStmtNonNull();
      if (body->kind != StmtKind::ForLoop)
        diags_.report(Severity::SyntaxError, body->loc,
                      std::string("expected a for loop after '") +
                          pragmaKindName(core.kind) + "' directive");
      break;
    default:
      body = parseStmtNonNull();
      break;
    }

    StmtPtr stmt = makePragmaBlock(std::move(core), std::move(body), intro.loc);
    for (auto it = wrappers.rbegin(); it != wrappers.rend(); ++it) {
      PragmaInfo wrap;
      wrap.kind = *it;
      wrap.clauses = stmt->pragma.clauses; // every level sees the full list
      stmt = makePragmaBlock(std::move(wrap), std::move(stmt), intro.loc);
    }
    return stmt;
  }

  void skipTrailingPragmaTokens(int line) {
    if (atLine(line)) {
      diags_.report(Severity::SyntaxError, peek().loc,
                    std::string("unexpected ") + tokenKindName(peek().kind) +
                        " in directive");
      skipRestOfPragmaLine(line);
    }
  }

  void parseClauses(std::vector<Clause> &out, int line) {
    while (atLine(line)) {
      if (accept(TokenKind::Comma))
        continue;
      if (!at(TokenKind::Ident))
        return; // reported by skipTrailingPragmaTokens
      static const std::set<std::string> known = {
          "private",      "shared",   "firstprivate", "lastprivate",
          "reduction",    "nowait",   "num_threads",  "default",
          "schedule",     "collapse", "threadprivate"};
      const Token &nameTok = peek();
      if (!known.count(nameTok.text)) {
        diags_.report(Severity::Warning, nameTok.loc,
                      "ignoring unknown clause '" + nameTok.text + "'");
        advance();
        skipBalancedParens(line);
        continue;
      }
      advance();
      Clause clause;
      clause.loc = nameTok.loc;
      const std::string &n = nameTok.text;
      if (n == "nowait") {
        clause.kind = ClauseKind::NoWait;
        out.push_back(std::move(clause));
        continue;
      }
      clause.kind = n == "private"        ? ClauseKind::Private
                    : n == "shared"       ? ClauseKind::Shared
                    : n == "firstprivate" ? ClauseKind::FirstPrivate
                    : n == "lastprivate"  ? ClauseKind::LastPrivate
                    : n == "reduction"    ? ClauseKind::Reduction
                    : n == "num_threads"  ? ClauseKind::NumThreads
                    : n == "default"      ? ClauseKind::Default
                    : n == "schedule"     ? ClauseKind::Schedule
                    : n == "collapse"     ? ClauseKind::Collapse
                                          : ClauseKind::ThreadPrivate;
      expect(TokenKind::LParen, "'('");
      switch (clause.kind) {
      case ClauseKind::Reduction: {
        const Token &op = peek();
        if (op.kind == TokenKind::Plus || op.kind == TokenKind::Star ||
            op.kind == TokenKind::Minus || op.kind == TokenKind::AmpAmp ||
            op.kind == TokenKind::PipePipe ||
            (op.kind == TokenKind::Ident &&
             (op.text == "max" || op.text == "min"))) {
          clause.detail = op.text;
          advance();
        } else {
          diags_.report(Severity::SyntaxError, op.loc,
                        "expected a reduction operator");
          throw Bail{};
        }
        expect(TokenKind::Colon, "':'");
        parseVarList(clause.vars);
        break;
      }
      case ClauseKind::Private:
      case ClauseKind::Shared:
      case ClauseKind::FirstPrivate:
      case ClauseKind::LastPrivate:
      case ClauseKind::ThreadPrivate:
        parseVarList(clause.vars);
        break;
      default: {
        // Payloads we accept but do not interpret: keep their token spellings.
        int depth = 1;
        std::string text;
        while (!at(TokenKind::Eof)) {
          if (at(TokenKind::LParen))
            ++depth;
          if (at(TokenKind::RParen) && --depth == 0)
            break;
          if (!text.empty())
            text += " ";
          text += peek().text;
          advance();
        }
        clause.detail = text;
        break;
      }
      }
      expect(TokenKind::RParen, "')'");
      out.push_back(std::move(clause));
    }
  }

  void parseVarList(std::vector<std::string> &vars) {
    while (true) {
      vars.push_back(expect(TokenKind::Ident, "a variable name").text);
      if (!accept(TokenKind::Comma))
        break;
    }
  }

  void skipBalancedParens(int line) {
    if (!atLine(line) || !at(TokenKind::LParen))
      return;
    int depth = 0;
    while (!at(TokenKind::Eof)) {
      if (at(TokenKind::LParen))
        ++depth;
      if (at(TokenKind::RParen) && --depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  // "sections" bodies are a brace list of structured blocks; every block
  // after the first needs its own "#pragma omp section" introducer and the
  // first one may omit it. All of them become explicit Section nodes.
  StmtPtr parseSectionsBody() {
    const Token &open = expect(TokenKind::LBrace, "'{'");
    std::vector<StmtPtr> sections;
    while (!at(TokenKind::RBrace) && !at(TokenKind::Eof)) {
      size_t before = pos_;
      try {
        SourceLoc secLoc = peek().loc;
        if (at(TokenKind::PragmaStart)) {
          const Token &intro = advance();
          int line = intro.loc.line;
          bool ok = atLine(line) && atIdent("omp");
          if (ok)
            advance();
          ok = ok && atLine(line) && atIdent("section");
          if (ok)
            advance();
          if (!ok) {
            diags_.report(Severity::SyntaxError, intro.loc,
                          "expected '#pragma omp section'");
            skipRestOfPragmaLine(line);
            throw Bail{};
          }
          skipTrailingPragmaTokens(line);
          secLoc = intro.loc;
        } else if (!sections.empty()) {
          diags_.report(Severity::SyntaxError, peek().loc,
                        "expected '#pragma omp section'");
        }
        StmtPtr body = parseStmtNonNull();
        PragmaInfo info;
        info.kind = PragmaKind::Section;
        sections.push_back(
            makePragmaBlock(std::move(info), std::move(body), secLoc));
      } catch (Bail &) {
        syncStmt();
      }
      if (pos_ == before)
        ++pos_;
    }
    expect(TokenKind::RBrace, "'}'");
    return makeBlock(std::move(sections), open.loc);
  }

  const std::vector<Token> &toks_;
  DiagnosticSink &diags_;
  size_t pos_ = 0;
  int depth_ = 0;

  friend struct DepthGuard;
};

} // namespace

Program parseProgram(const std::vector<Token> &tokens, DiagnosticSink &diags) {
  // tokenize() always appends Eof; guard callers that hand-build streams.
  if (tokens.empty() || tokens.back().kind != TokenKind::Eof) {
    std::vector<Token> padded = tokens;
    SourceLoc end = padded.empty() ? SourceLoc{} : padded.back().loc;
    padded.push_back(Token{TokenKind::Eof, "", 0, end});
    return Parser(padded, diags).run();
  }
  return Parser(tokens, diags).run();
}

Program parseSource(const std::string &source, const std::string &file,
                    DiagnosticSink &diags) {
  return parseProgram(tokenize(source, file, diags), diags);
}

} // namespace omprace
