#include "omprace/ast.hpp"

#include <sstream>

namespace omprace {

const char *pragmaKindName(PragmaKind k) {
  switch (k) {
  case PragmaKind::Parallel:
    return "parallel";
  case PragmaKind::For:
    return "for";
  case PragmaKind::ParallelFor:
    return "parallel for";
  case PragmaKind::Single:
    return "single";
  case PragmaKind::Master:
    return "master";
  case PragmaKind::Sections:
    return "sections";
  case PragmaKind::Section:
    return "section";
  case PragmaKind::Critical:
    return "critical";
  case PragmaKind::Atomic:
    return "atomic";
  case PragmaKind::Simd:
    return "simd";
  case PragmaKind::Target:
    return "target";
  case PragmaKind::Teams:
    return "teams";
  case PragmaKind::Distribute:
    return "distribute";
  }
  return "?";
}

const char *clauseKindName(ClauseKind k) {
  switch (k) {
  case ClauseKind::Private:
    return "private";
  case ClauseKind::Shared:
    return "shared";
  case ClauseKind::FirstPrivate:
    return "firstprivate";
  case ClauseKind::LastPrivate:
    return "lastprivate";
  case ClauseKind::Reduction:
    return "reduction";
  case ClauseKind::NoWait:
    return "nowait";
  case ClauseKind::NumThreads:
    return "num_threads";
  case ClauseKind::Default:
    return "default";
  case ClauseKind::Schedule:
    return "schedule";
  case ClauseKind::Collapse:
    return "collapse";
  case ClauseKind::ThreadPrivate:
    return "threadprivate";
  }
  return "?";
}

ExprPtr makeIntLit(int64_t value, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::IntLit;
  e->intValue = value;
  e->loc = std::move(loc);
  return e;
}

ExprPtr makeVarRef(std::string name, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::VarRef;
  e->name = std::move(name);
  e->loc = std::move(loc);
  return e;
}

ExprPtr makeArrayRef(std::string name, ExprPtr index, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::ArrayRef;
  e->name = std::move(name);
  e->a = std::move(index);
  e->loc = std::move(loc);
  return e;
}

ExprPtr makeUnary(UnOp op, ExprPtr operand, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Unary;
  e->unOp = op;
  e->a = std::move(operand);
  e->loc = std::move(loc);
  return e;
}

ExprPtr makeBinary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Binary;
  e->binOp = op;
  e->a = std::move(lhs);
  e->b = std::move(rhs);
  e->loc = std::move(loc);
  return e;
}

ExprPtr cloneExpr(const Expr &e) {
  auto c = std::make_unique<Expr>();
  c->kind = e.kind;
  c->loc = e.loc;
  c->intValue = e.intValue;
  c->name = e.name;
  c->symbol = e.symbol;
  c->binOp = e.binOp;
  c->unOp = e.unOp;
  if (e.a)
    c->a = cloneExpr(*e.a);
  if (e.b)
    c->b = cloneExpr(*e.b);
  return c;
}

StmtPtr makeDecl(std::string name, bool isArray, int64_t arraySize,
                 ExprPtr init, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Decl;
  s->name = std::move(name);
  s->isArray = isArray;
  s->arraySize = arraySize;
  s->init = std::move(init);
  s->loc = std::move(loc);
  return s;
}

StmtPtr makeAssign(ExprPtr lhs, ExprPtr rhs, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Assign;
  s->lhs = std::move(lhs);
  s->rhs = std::move(rhs);
  s->loc = std::move(loc);
  return s;
}

StmtPtr makeIf(ExprPtr cond, StmtPtr thenS, StmtPtr elseS, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::If;
  s->cond = std::move(cond);
  s->thenS = std::move(thenS);
  s->elseS = std::move(elseS);
  s->loc = std::move(loc);
  return s;
}

StmtPtr makeForLoop(StmtPtr init, ExprPtr cond, StmtPtr incr, StmtPtr body,
                    SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::ForLoop;
  s->forInit = std::move(init);
  s->cond = std::move(cond);
  s->forIncr = std::move(incr);
  s->body = std::move(body);
  s->loc = std::move(loc);
  return s;
}

StmtPtr makeBlock(std::vector<StmtPtr> stmts, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Block;
  s->stmts = std::move(stmts);
  s->loc = std::move(loc);
  return s;
}

StmtPtr makePragmaBlock(PragmaInfo pragma, StmtPtr body, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::PragmaBlock;
  s->pragma = std::move(pragma);
  s->body = std::move(body);
  s->loc = std::move(loc);
  return s;
}

StmtPtr makeCall(std::string callee, std::vector<ExprPtr> args, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Call;
  s->name = std::move(callee);
  s->args = std::move(args);
  s->loc = std::move(loc);
  return s;
}

StmtPtr makeBarrier(SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Barrier;
  s->loc = std::move(loc);
  return s;
}

StmtPtr makeReturn(ExprPtr value, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Return;
  s->rhs = std::move(value);
  s->loc = std::move(loc);
  return s;
}

StmtPtr cloneStmt(const Stmt &s) {
  auto c = std::make_unique<Stmt>();
  c->kind = s.kind;
  c->loc = s.loc;
  c->name = s.name;
  c->isArray = s.isArray;
  c->arraySize = s.arraySize;
  c->symbol = s.symbol;
  if (s.init)
    c->init = cloneExpr(*s.init);
  if (s.lhs)
    c->lhs = cloneExpr(*s.lhs);
  if (s.rhs)
    c->rhs = cloneExpr(*s.rhs);
  if (s.cond)
    c->cond = cloneExpr(*s.cond);
  if (s.thenS)
    c->thenS = cloneStmt(*s.thenS);
  if (s.elseS)
    c->elseS = cloneStmt(*s.elseS);
  if (s.forInit)
    c->forInit = cloneStmt(*s.forInit);
  if (s.forIncr)
    c->forIncr = cloneStmt(*s.forIncr);
  if (s.body)
    c->body = cloneStmt(*s.body);
  for (const auto &child : s.stmts)
    c->stmts.push_back(cloneStmt(*child));
  c->pragma.kind = s.pragma.kind;
  c->pragma.clauses = s.pragma.clauses;
  c->pragma.criticalName = s.pragma.criticalName;
  c->pragma.simd = s.pragma.simd;
  c->pragma.distributed = s.pragma.distributed;
  for (const auto &arg : s.args)
    c->args.push_back(cloneExpr(*arg));
  return c;
}

namespace {

const char *binOpText(BinOp op) {
  switch (op) {
  case BinOp::Add:
    return "+";
  case BinOp::Sub:
    return "-";
  case BinOp::Mul:
    return "*";
  case BinOp::Div:
    return "/";
  case BinOp::Rem:
    return "%";
  case BinOp::Lt:
    return "<";
  case BinOp::Le:
    return "<=";
  case BinOp::Gt:
    return ">";
  case BinOp::Ge:
    return ">=";
  case BinOp::Eq:
    return "==";
  case BinOp::Ne:
    return "!=";
  case BinOp::And:
    return "&&";
  case BinOp::Or:
    return "||";
  }
  return "?";
}

std::string indentOf(int n) { return std::string(static_cast<size_t>(n) * 4, ' '); }

std::string pragmaLine(const PragmaInfo &p) {
  std::string out = "#pragma omp ";
  switch (p.kind) {
  case PragmaKind::ParallelFor:
    if (p.distributed)
      out += "distribute ";
    out += "parallel for";
    if (p.simd)
      out += " simd";
    break;
  case PragmaKind::For:
    out += "for";
    if (p.simd)
      out += " simd";
    break;
  case PragmaKind::Distribute:
    out += "distribute";
    if (p.simd)
      out += " simd";
    break;
  case PragmaKind::Critical:
    out += "critical";
    if (!p.criticalName.empty())
      out += " (" + p.criticalName + ")";
    break;
  default:
    out += pragmaKindName(p.kind);
    break;
  }
  for (const auto &c : p.clauses) {
    out += " ";
    out += clauseKindName(c.kind);
    if (c.kind == ClauseKind::NoWait)
      continue;
    out += "(";
    if (c.kind == ClauseKind::Reduction)
      out += c.detail + ": ";
    else if (!c.detail.empty())
      out += c.detail;
    for (size_t i = 0; i < c.vars.size(); ++i) {
      if (i)
        out += ", ";
      out += c.vars[i];
    }
    out += ")";
  }
  return out;
}

// Statement printers emit their own trailing newline.
void printStmtInto(std::ostream &os, const Stmt &s, int indent);

void printBody(std::ostream &os, const Stmt &body, int indent) {
  if (body.kind == StmtKind::Block)
    printStmtInto(os, body, indent);
  else
    printStmtInto(os, body, indent + 1);
}

void printStmtInto(std::ostream &os, const Stmt &s, int indent) {
  std::string pad = indentOf(indent);
  switch (s.kind) {
  case StmtKind::Decl:
    os << pad << "int " << s.name;
    if (s.isArray) {
      os << "[";
      if (s.arraySize > 0)
        os << s.arraySize;
      os << "]";
    }
    if (s.init)
      os << " = " << printExpr(*s.init);
    os << ";\n";
    break;
  case StmtKind::Assign:
    os << pad << printExpr(*s.lhs) << " = " << printExpr(*s.rhs) << ";\n";
    break;
  case StmtKind::If:
    os << pad << "if (" << printExpr(*s.cond) << ")\n";
    printBody(os, *s.thenS, indent);
    if (s.elseS) {
      os << pad << "else\n";
      printBody(os, *s.elseS, indent);
    }
    break;
  case StmtKind::ForLoop: {
    std::ostringstream init, incr;
    printStmtInto(init, *s.forInit, 0);
    printStmtInto(incr, *s.forIncr, 0);
    auto trim = [](std::string t) {
      while (!t.empty() && (t.back() == '\n' || t.back() == ';'))
        t.pop_back();
      return t;
    };
    os << pad << "for (" << trim(init.str()) << "; " << printExpr(*s.cond)
       << "; " << trim(incr.str()) << ")\n";
    printBody(os, *s.body, indent);
    break;
  }
  case StmtKind::Block:
    os << pad << "{\n";
    for (const auto &child : s.stmts)
      printStmtInto(os, *child, indent + 1);
    os << pad << "}\n";
    break;
  case StmtKind::PragmaBlock:
    os << pad << pragmaLine(s.pragma) << "\n";
    printBody(os, *s.body, indent);
    break;
  case StmtKind::Call:
    os << pad << s.name << "(";
    for (size_t i = 0; i < s.args.size(); ++i) {
      if (i)
        os << ", ";
      os << printExpr(*s.args[i]);
    }
    os << ");\n";
    break;
  case StmtKind::Barrier:
    os << pad << "#pragma omp barrier\n";
    break;
  case StmtKind::Return:
    os << pad << "return";
    if (s.rhs)
      os << " " << printExpr(*s.rhs);
    os << ";\n";
    break;
  }
}

} // namespace

std::string printExpr(const Expr &e) {
  switch (e.kind) {
  case ExprKind::IntLit:
    return std::to_string(e.intValue);
  case ExprKind::VarRef:
    return e.name;
  case ExprKind::ArrayRef:
    return e.name + "[" + printExpr(*e.a) + "]";
  case ExprKind::Unary:
    return std::string("(") + (e.unOp == UnOp::Neg ? "-" : "!") +
           printExpr(*e.a) + ")";
  case ExprKind::Binary:
    return "(" + printExpr(*e.a) + " " + binOpText(e.binOp) + " " +
           printExpr(*e.b) + ")";
  }
  return "?";
}

std::string printStmt(const Stmt &s, int indent) {
  std::ostringstream os;
  printStmtInto(os, s, indent);
  return os.str();
}

std::string printProgram(const Program &p) {
  std::ostringstream os;
  for (const auto &g : p.globals)
    printStmtInto(os, *g, 0);
  for (const auto &f : p.functions) {
    if (!p.globals.empty() || &f != &p.functions.front())
      os << "\n";
    os << f.returnType << " " << f.name << "(";
    for (size_t i = 0; i < f.params.size(); ++i) {
      if (i)
        os << ", ";
      os << "int " << f.params[i].name;
      if (f.params[i].isArray)
        os << "[]";
    }
    os << ")\n";
    printStmtInto(os, *f.body, 0);
  }
  return os.str();
}

namespace {

bool eqOpt(const ExprPtr &x, const ExprPtr &y) {
  if (!x || !y)
    return !x && !y;
  return equivalent(*x, *y);
}

bool eqOpt(const StmtPtr &x, const StmtPtr &y) {
  if (!x || !y)
    return !x && !y;
  return equivalent(*x, *y);
}

} // namespace

bool equivalent(const Expr &x, const Expr &y) {
  if (x.kind != y.kind)
    return false;
  switch (x.kind) {
  case ExprKind::IntLit:
    return x.intValue == y.intValue;
  case ExprKind::VarRef:
    return x.name == y.name;
  case ExprKind::ArrayRef:
    return x.name == y.name && eqOpt(x.a, y.a);
  case ExprKind::Unary:
    return x.unOp == y.unOp && eqOpt(x.a, y.a);
  case ExprKind::Binary:
    return x.binOp == y.binOp && eqOpt(x.a, y.a) && eqOpt(x.b, y.b);
  }
  return false;
}

bool equivalent(const Stmt &x, const Stmt &y) {
  if (x.kind != y.kind)
    return false;
  if (x.name != y.name || x.isArray != y.isArray ||
      x.arraySize != y.arraySize)
    return false;
  if (!eqOpt(x.init, y.init) || !eqOpt(x.lhs, y.lhs) || !eqOpt(x.rhs, y.rhs) ||
      !eqOpt(x.cond, y.cond))
    return false;
  if (!eqOpt(x.thenS, y.thenS) || !eqOpt(x.elseS, y.elseS) ||
      !eqOpt(x.forInit, y.forInit) || !eqOpt(x.forIncr, y.forIncr) ||
      !eqOpt(x.body, y.body))
    return false;
  if (x.stmts.size() != y.stmts.size() || x.args.size() != y.args.size())
    return false;
  for (size_t i = 0; i < x.stmts.size(); ++i)
    if (!equivalent(*x.stmts[i], *y.stmts[i]))
      return false;
  for (size_t i = 0; i < x.args.size(); ++i)
    if (!equivalent(*x.args[i], *y.args[i]))
      return false;
  if (x.kind == StmtKind::PragmaBlock) {
    const PragmaInfo &a = x.pragma, &b = y.pragma;
    if (a.kind != b.kind || a.criticalName != b.criticalName ||
        a.simd != b.simd || a.distributed != b.distributed ||
        a.clauses.size() != b.clauses.size())
      return false;
    for (size_t i = 0; i < a.clauses.size(); ++i) {
      const Clause &ca = a.clauses[i], &cb = b.clauses[i];
      if (ca.kind != cb.kind || ca.vars != cb.vars || ca.detail != cb.detail)
        return false;
    }
  }
  return true;
}

bool equivalent(const Program &x, const Program &y) {
  if (x.globals.size() != y.globals.size() ||
      x.functions.size() != y.functions.size())
    return false;
  for (size_t i = 0; i < x.globals.size(); ++i)
    if (!equivalent(*x.globals[i], *y.globals[i]))
      return false;
  for (size_t i = 0; i < x.functions.size(); ++i) {
    const Function &a = x.functions[i], &b = y.functions[i];
    if (a.name != b.name || a.returnType != b.returnType ||
        a.params.size() != b.params.size())
      return false;
    for (size_t j = 0; j < a.params.size(); ++j)
      if (a.params[j].name != b.params[j].name ||
          a.params[j].isArray != b.params[j].isArray)
        return false;
    if (!equivalent(*a.body, *b.body))
      return false;
  }
  return true;
}

} // namespace omprace
