#include "omprace/symbols.hpp"

#include <map>

namespace omprace {

namespace {

class Resolver {
public:
  Resolver(SymbolTable &table, DiagnosticSink &diags)
      : table_(table), diags_(diags) {}

  void global(Stmt &decl) {
    SymbolInfo info;
    info.name = decl.name;
    info.isArray = decl.isArray;
    info.isGlobal = true;
    info.declLoc = decl.loc;
    decl.symbol = table_.add(info);
    scopes_.front()[decl.name] = decl.symbol;
    if (decl.init)
      expr(*decl.init);
  }

  void function(Function &fn) {
    pushScope();
    functionScope_ = scopes_.size() - 1;
    for (Param &p : fn.params) {
      SymbolInfo info;
      info.name = p.name;
      info.isArray = p.isArray;
      info.isParam = true;
      info.declLoc = p.loc;
      scopes_.back()[p.name] = table_.add(info);
    }
    // The body block reuses the parameter scope so undeclared names land
    // in one place per function.
    for (auto &s : fn.body->stmts)
      stmt(*s);
    popScope();
    functionScope_ = 0;
  }

private:
  void pushScope() { scopes_.emplace_back(); }
  void popScope() { scopes_.pop_back(); }

  int lookupOrSynthesize(const std::string &name, const SourceLoc &loc,
                         bool arrayUse) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto hit = it->find(name);
      if (hit != it->end())
        return hit->second;
    }
    SymbolInfo info;
    info.name = name;
    info.isArray = arrayUse;
    info.implicit = true;
    info.declLoc = loc;
    int id = table_.add(info);
    scopes_[functionScope_][name] = id;
    diags_.report(Severity::Warning, loc,
                  "undeclared identifier '" + name + "'");
    return id;
  }

  void expr(Expr &e) {
    switch (e.kind) {
    case ExprKind::IntLit:
      break;
    case ExprKind::VarRef:
      e.symbol = lookupOrSynthesize(e.name, e.loc, false);
      break;
    case ExprKind::ArrayRef:
      e.symbol = lookupOrSynthesize(e.name, e.loc, true);
      expr(*e.a);
      break;
    case ExprKind::Unary:
      expr(*e.a);
      break;
    case ExprKind::Binary:
      expr(*e.a);
      expr(*e.b);
      break;
    }
  }

  void declare(Stmt &d) {
    SymbolInfo info;
    info.name = d.name;
    info.isArray = d.isArray;
    info.declLoc = d.loc;
    d.symbol = table_.add(info);
    scopes_.back()[d.name] = d.symbol;
  }

  void clauses(std::vector<Clause> &cs) {
    for (Clause &c : cs) {
      c.varSymbols.clear();
      for (const std::string &name : c.vars)
        c.varSymbols.push_back(lookupOrSynthesize(name, c.loc, false));
    }
  }

  void stmt(Stmt &s) {
    switch (s.kind) {
    case StmtKind::Decl:
      // Initializer sees the enclosing scope, not the new name.
      if (s.init)
        expr(*s.init);
      declare(s);
      break;
    case StmtKind::Assign:
      expr(*s.lhs);
      expr(*s.rhs);
      break;
    case StmtKind::If:
      expr(*s.cond);
      stmt(*s.thenS);
      if (s.elseS)
        stmt(*s.elseS);
      break;
    case StmtKind::ForLoop:
      pushScope(); // a for-init declaration scopes to the loop
      stmt(*s.forInit);
      expr(*s.cond);
      stmt(*s.forIncr);
      stmt(*s.body);
      popScope();
      break;
    case StmtKind::Block:
      pushScope();
      for (auto &child : s.stmts)
        stmt(*child);
      popScope();
      break;
    case StmtKind::PragmaBlock:
      clauses(s.pragma.clauses);
      stmt(*s.body);
      break;
    case StmtKind::Call:
      for (auto &arg : s.args)
        expr(*arg);
      break;
    case StmtKind::Barrier:
      break;
    case StmtKind::Return:
      if (s.rhs)
        expr(*s.rhs);
      break;
    }
  }

  SymbolTable &table_;
  DiagnosticSink &diags_;
  std::vector<std::map<std::string, int>> scopes_{1}; // [0] = globals
  size_t functionScope_ = 0;
};

} // namespace

SymbolTable resolveSymbols(Program &p, DiagnosticSink &diags) {
  SymbolTable table;
  Resolver r(table, diags);
  for (auto &g : p.globals)
    r.global(*g);
  for (Function &fn : p.functions)
    r.function(fn);
  return table;
}

} // namespace omprace
