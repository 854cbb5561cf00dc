#ifndef OMPRACE_AST_HPP
#define OMPRACE_AST_HPP

#include "omprace/source_loc.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace omprace {

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

enum class ExprKind { IntLit, VarRef, ArrayRef, Unary, Binary };
enum class BinOp { Add, Sub, Mul, Div, Rem, Lt, Le, Gt, Ge, Eq, Ne, And, Or };
enum class UnOp { Neg, Not };

/// One struct for every expression form; `kind` selects which fields are
/// meaningful. ArrayRef keeps the subscript in `a`. Unary uses `a`; Binary
/// uses `a` and `b`.
struct Expr {
  ExprKind kind;
  SourceLoc loc;
  int64_t intValue = 0;  // IntLit
  std::string name;      // VarRef / ArrayRef base
  int symbol = -1;       // filled by name resolution
  BinOp binOp = BinOp::Add;
  UnOp unOp = UnOp::Neg;
  ExprPtr a, b;
};

ExprPtr makeIntLit(int64_t value, SourceLoc loc);
ExprPtr makeVarRef(std::string name, SourceLoc loc);
ExprPtr makeArrayRef(std::string name, ExprPtr index, SourceLoc loc);
ExprPtr makeUnary(UnOp op, ExprPtr operand, SourceLoc loc);
ExprPtr makeBinary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourceLoc loc);
ExprPtr cloneExpr(const Expr &e);

enum class PragmaKind {
  Parallel,
  For,         // worksharing loop inside an existing parallel region
  ParallelFor, // fused "parallel for"
  Single,
  Master,
  Sections,
  Section,
  Critical,
  Atomic,
  Simd,
  Target,
  Teams,
  Distribute,
};

const char *pragmaKindName(PragmaKind k);

enum class ClauseKind {
  Private,
  Shared,
  FirstPrivate,
  LastPrivate,
  Reduction,
  NoWait,
  NumThreads,
  Default,
  Schedule,
  Collapse,
  ThreadPrivate,
};

const char *clauseKindName(ClauseKind k);

struct Clause {
  ClauseKind kind;
  SourceLoc loc;
  std::vector<std::string> vars; // list-valued clauses
  std::vector<int> varSymbols;   // filled by name resolution, matches vars
  std::string detail;            // reduction operator, default kind, schedule
};

struct PragmaInfo {
  PragmaKind kind = PragmaKind::Parallel;
  std::vector<Clause> clauses;
  std::string criticalName; // empty for the unnamed critical
  bool simd = false;        // "simd" fused into a loop directive
  bool distributed = false; // "distribute" fused into "parallel for"

  bool hasNowait() const {
    for (const auto &c : clauses)
      if (c.kind == ClauseKind::NoWait)
        return true;
    return false;
  }
};

enum class StmtKind {
  Decl,
  Assign,
  If,
  ForLoop,
  Block,
  PragmaBlock,
  Call,
  Barrier, // explicit standalone barrier directive
  Return,
};

struct Stmt {
  StmtKind kind;
  SourceLoc loc;
  // Decl
  std::string name; // also the Call callee
  bool isArray = false;
  int64_t arraySize = 0; // 0 when unspecified ("int a[]")
  int symbol = -1;
  ExprPtr init;
  // Assign
  ExprPtr lhs, rhs; // rhs doubles as the Return value
  // If / ForLoop condition
  ExprPtr cond;
  StmtPtr thenS, elseS;
  // ForLoop
  StmtPtr forInit, forIncr;
  StmtPtr body; // ForLoop and PragmaBlock body
  // Block
  std::vector<StmtPtr> stmts;
  // PragmaBlock
  PragmaInfo pragma;
  // Call
  std::vector<ExprPtr> args;
};

StmtPtr makeDecl(std::string name, bool isArray, int64_t arraySize,
                 ExprPtr init, SourceLoc loc);
StmtPtr makeAssign(ExprPtr lhs, ExprPtr rhs, SourceLoc loc);
StmtPtr makeIf(ExprPtr cond, StmtPtr thenS, StmtPtr elseS, SourceLoc loc);
StmtPtr makeForLoop(StmtPtr init, ExprPtr cond, StmtPtr incr, StmtPtr body,
                    SourceLoc loc);
StmtPtr makeBlock(std::vector<StmtPtr> stmts, SourceLoc loc);
StmtPtr makePragmaBlock(PragmaInfo pragma, StmtPtr body, SourceLoc loc);
StmtPtr makeCall(std::string callee, std::vector<ExprPtr> args, SourceLoc loc);
StmtPtr makeBarrier(SourceLoc loc);
StmtPtr makeReturn(ExprPtr value, SourceLoc loc);
StmtPtr cloneStmt(const Stmt &s);

struct Param {
  std::string name;
  bool isArray = false;
  SourceLoc loc;
};

struct Function {
  std::string name;
  std::string returnType; // "void" or "int"
  std::vector<Param> params;
  StmtPtr body; // always a Block
  SourceLoc loc;
};

struct Program {
  std::vector<StmtPtr> globals; // file-scope declarations
  std::vector<Function> functions;
  std::set<std::string> inlinedCallees; // bodies already expanded at call sites

  const Function *find(const std::string &name) const {
    for (const auto &f : functions)
      if (f.name == name)
        return &f;
    return nullptr;
  }
};

/// Renders the program in a canonical layout that re-parses to an
/// equivalent tree (locations and symbol ids excepted).
std::string printExpr(const Expr &e);
std::string printStmt(const Stmt &s, int indent = 0);
std::string printProgram(const Program &p);

/// Structural comparison that ignores source locations and symbol ids.
bool equivalent(const Expr &x, const Expr &y);
bool equivalent(const Stmt &x, const Stmt &y);
bool equivalent(const Program &x, const Program &y);

} // namespace omprace

#endif
