#include "omprace/inliner.hpp"

#include <map>

namespace omprace {

namespace {

void collectCallsStmt(const Stmt &s, std::set<std::string> &out) {
  if (s.kind == StmtKind::Call)
    out.insert(s.name);
  if (s.thenS)
    collectCallsStmt(*s.thenS, out);
  if (s.elseS)
    collectCallsStmt(*s.elseS, out);
  if (s.forInit)
    collectCallsStmt(*s.forInit, out);
  if (s.forIncr)
    collectCallsStmt(*s.forIncr, out);
  if (s.body)
    collectCallsStmt(*s.body, out);
  for (const auto &child : s.stmts)
    collectCallsStmt(*child, out);
}

// Renames declared-in-callee names; names outside the map are globals and
// stay as they are.
void renameExpr(Expr &e, const std::map<std::string, std::string> &map) {
  if (e.kind == ExprKind::VarRef || e.kind == ExprKind::ArrayRef) {
    auto it = map.find(e.name);
    if (it != map.end())
      e.name = it->second;
  }
  if (e.a)
    renameExpr(*e.a, map);
  if (e.b)
    renameExpr(*e.b, map);
}

void renameStmt(Stmt &s, const std::map<std::string, std::string> &map) {
  if (s.kind == StmtKind::Decl) {
    auto it = map.find(s.name);
    if (it != map.end())
      s.name = it->second;
  }
  if (s.kind == StmtKind::PragmaBlock) {
    for (Clause &c : s.pragma.clauses)
      for (std::string &v : c.vars) {
        auto it = map.find(v);
        if (it != map.end())
          v = it->second;
      }
  }
  if (s.init)
    renameExpr(*s.init, map);
  if (s.lhs)
    renameExpr(*s.lhs, map);
  if (s.rhs)
    renameExpr(*s.rhs, map);
  if (s.cond)
    renameExpr(*s.cond, map);
  for (auto &arg : s.args)
    renameExpr(*arg, map);
  if (s.thenS)
    renameStmt(*s.thenS, map);
  if (s.elseS)
    renameStmt(*s.elseS, map);
  if (s.forInit)
    renameStmt(*s.forInit, map);
  if (s.forIncr)
    renameStmt(*s.forIncr, map);
  if (s.body)
    renameStmt(*s.body, map);
  for (auto &child : s.stmts)
    renameStmt(*child, map);
}

void collectDeclNames(const Stmt &s, std::set<std::string> &out) {
  if (s.kind == StmtKind::Decl)
    out.insert(s.name);
  if (s.thenS)
    collectDeclNames(*s.thenS, out);
  if (s.elseS)
    collectDeclNames(*s.elseS, out);
  if (s.forInit)
    collectDeclNames(*s.forInit, out);
  if (s.forIncr)
    collectDeclNames(*s.forIncr, out);
  if (s.body)
    collectDeclNames(*s.body, out);
  for (const auto &child : s.stmts)
    collectDeclNames(*child, out);
}

bool containsReturn(const Stmt &s, bool topLevelTailOk, bool isTail) {
  if (s.kind == StmtKind::Return)
    return !(topLevelTailOk && isTail);
  if (s.thenS && containsReturn(*s.thenS, false, false))
    return true;
  if (s.elseS && containsReturn(*s.elseS, false, false))
    return true;
  if (s.forInit && containsReturn(*s.forInit, false, false))
    return true;
  if (s.forIncr && containsReturn(*s.forIncr, false, false))
    return true;
  if (s.body && containsReturn(*s.body, false, false))
    return true;
  for (size_t i = 0; i < s.stmts.size(); ++i) {
    bool tail = topLevelTailOk && i + 1 == s.stmts.size();
    if (containsReturn(*s.stmts[i], tail, tail))
      return true;
  }
  return false;
}

void dropTailReturn(Stmt &block) {
  if (block.kind == StmtKind::Block && !block.stmts.empty() &&
      block.stmts.back()->kind == StmtKind::Return)
    block.stmts.pop_back();
}

class Inliner {
public:
  Inliner(Program &p, DiagnosticSink &diags) : prog_(p), diags_(diags) {}

  void run() {
    for (Function &fn : prog_.functions)
      expandSlot(fn.body, fn.name);
    warnRemaining();
  }

private:
  // Rewrites every owned statement slot so a Call in any position (block
  // item, branch body, construct body) can be replaced wholesale.
  void expandSlot(StmtPtr &slot, const std::string &caller) {
    if (!slot)
      return;
    if (slot->kind == StmtKind::Call) {
      if (StmtPtr expanded = tryInline(*slot, caller))
        slot = std::move(expanded);
      return;
    }
    expandSlot(slot->thenS, caller);
    expandSlot(slot->elseS, caller);
    expandSlot(slot->body, caller);
    for (auto &child : slot->stmts)
      expandSlot(child, caller);
  }

  StmtPtr tryInline(const Stmt &call, const std::string &caller) {
    const Function *callee = prog_.find(call.name);
    if (!callee)
      return nullptr; // undefined; warned later
    if (call.name == caller) {
      diags_.report(Severity::Warning, call.loc,
                    "not expanding recursive call to '" + call.name + "'");
      return nullptr;
    }
    if (call.args.size() != callee->params.size()) {
      diags_.report(Severity::Warning, call.loc,
                    "call to '" + call.name +
                        "' has the wrong number of arguments");
      return nullptr;
    }
    if (containsReturn(*callee->body, true, true)) {
      diags_.report(Severity::Warning, call.loc,
                    "not expanding '" + call.name +
                        "': it returns before the end of its body");
      return nullptr;
    }

    std::string prefix = "__in" + std::to_string(++siteCounter_) + "_";
    std::map<std::string, std::string> rename;
    std::set<std::string> declNames;
    collectDeclNames(*callee->body, declNames);
    for (const std::string &n : declNames)
      rename[n] = prefix + n;

    std::vector<StmtPtr> pieces;
    for (size_t i = 0; i < callee->params.size(); ++i) {
      const Param &param = callee->params[i];
      const Expr &arg = *call.args[i];
      if (param.isArray) {
        if (arg.kind != ExprKind::VarRef) {
          diags_.report(Severity::Warning, call.loc,
                        "array argument of '" + call.name +
                            "' is not a plain array name");
          return nullptr;
        }
        rename[param.name] = arg.name;
      } else {
        rename[param.name] = prefix + param.name;
        pieces.push_back(makeDecl(prefix + param.name, false, 0,
                                  cloneExpr(arg), arg.loc));
      }
    }

    StmtPtr bodyCopy = cloneStmt(*callee->body);
    dropTailReturn(*bodyCopy);
    renameStmt(*bodyCopy, rename);
    pieces.push_back(std::move(bodyCopy));
    prog_.inlinedCallees.insert(call.name);
    return makeBlock(std::move(pieces), call.loc);
  }

  void warnRemaining() {
    for (Function &fn : prog_.functions)
      warnStmt(*fn.body);
  }
  void warnStmt(const Stmt &s) {
    if (s.kind == StmtKind::Call)
      diags_.report(Severity::Warning, s.loc,
                    "call to '" + s.name +
                        "' is not expanded; its effects are not modeled");
    if (s.thenS)
      warnStmt(*s.thenS);
    if (s.elseS)
      warnStmt(*s.elseS);
    if (s.forInit)
      warnStmt(*s.forInit);
    if (s.forIncr)
      warnStmt(*s.forIncr);
    if (s.body)
      warnStmt(*s.body);
    for (const auto &child : s.stmts)
      warnStmt(*child);
  }

  Program &prog_;
  DiagnosticSink &diags_;
  int siteCounter_ = 0;
};

} // namespace

std::set<std::string> calledFunctions(const Program &p) {
  std::set<std::string> out = p.inlinedCallees;
  for (const Function &fn : p.functions)
    collectCallsStmt(*fn.body, out);
  return out;
}

void inlineCalls(Program &p, DiagnosticSink &diags) {
  Inliner(p, diags).run();
}

} // namespace omprace
