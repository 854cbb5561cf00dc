#include "omprace/cfg.hpp"

#include "omprace/inliner.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace omprace {

namespace {

std::optional<SharingClause> sharingOf(ClauseKind k) {
  switch (k) {
  case ClauseKind::Private:
    return SharingClause::Private;
  case ClauseKind::FirstPrivate:
    return SharingClause::FirstPrivate;
  case ClauseKind::LastPrivate:
    return SharingClause::LastPrivate;
  case ClauseKind::Shared:
    return SharingClause::Shared;
  case ClauseKind::Reduction:
    return SharingClause::Reduction;
  case ClauseKind::ThreadPrivate:
    return SharingClause::ThreadPrivate;
  default:
    return std::nullopt;
  }
}

std::vector<int> unionOf(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> out = a;
  for (int v : b)
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  return out;
}

bool isBarrierItem(const BlockItem &it) {
  return it.kind == ItemKind::ImplicitBarrier ||
         (it.kind == ItemKind::Stmt && it.stmt &&
          it.stmt->kind == StmtKind::Barrier);
}

class Builder {
public:
  Builder(const Program &prog, DiagnosticSink &diags)
      : prog_(prog), diags_(diags) {}

  Cfg build() {
    auto called = calledFunctions(prog_);
    // `main` is analyzed first; every other function that no one calls is an
    // entry point of its own. Called functions were inlined into their
    // callers by the frontend and need no standalone graph.
    std::vector<const Function *> roots;
    if (const Function *m = prog_.find("main"))
      roots.push_back(m);
    for (const auto &fn : prog_.functions)
      if (fn.name != "main" && !called.count(fn.name))
        roots.push_back(&fn);
    for (const Function *fn : roots)
      buildRoot(*fn);
    return std::move(cfg_);
  }

private:
  const Program &prog_;
  DiagnosticSink &diags_;
  Cfg cfg_;

  BlockCtx ctx_;
  std::vector<int> frontier_;
  int cur_ = -1;       // open block accepting items, or -1
  int rootEntry_ = -1; // first block created for the current root
  std::vector<int> rootExits_;

  // ---- block plumbing ----

  int newBlock() {
    int id = static_cast<int>(cfg_.blocks.size());
    BasicBlock b;
    b.id = id;
    b.ctx = ctx_;
    cfg_.blocks.push_back(std::move(b));
    if (rootEntry_ < 0)
      rootEntry_ = id;
    return id;
  }

  void addEdge(int from, int to) {
    auto &succs = cfg_.blocks[from].succs;
    if (std::find(succs.begin(), succs.end(), to) != succs.end())
      return;
    succs.push_back(to);
    cfg_.blocks[to].preds.push_back(from);
  }

  int ensureOpen() {
    if (cur_ >= 0)
      return cur_;
    int id = newBlock();
    for (int f : frontier_)
      addEdge(f, id);
    frontier_ = {id};
    cur_ = id;
    return id;
  }

  void seal() { cur_ = -1; }

  int append(ItemKind kind, const Stmt *stmt, const Expr *expr, int privateIv,
             SourceLoc loc) {
    int id = ensureOpen();
    BasicBlock &b = cfg_.blocks[id];
    if (b.items.empty())
      b.loc = loc;
    BlockItem it;
    it.kind = kind;
    it.stmt = stmt;
    it.expr = expr;
    it.privateIv = privateIv;
    it.loc = loc;
    b.items.push_back(std::move(it));
    return id;
  }

  /// Every barrier gets a block of its own so its phase bump never blurs
  /// the phase of accesses around it.
  int barrierBlock(const Stmt *stmt, ItemKind kind, SourceLoc loc) {
    seal();
    int id = newBlock();
    BasicBlock &b = cfg_.blocks[id];
    b.loc = loc;
    BlockItem it;
    it.kind = kind;
    it.stmt = stmt;
    it.loc = loc;
    b.items.push_back(std::move(it));
    b.hasBarrier = true;
    for (int f : frontier_)
      addEdge(f, id);
    frontier_ = {id};
    return id;
  }

  // ---- data-sharing scopes ----

  void pushScope(const PragmaInfo &p) {
    std::map<int, SharingClause> vars;
    for (const Clause &c : p.clauses) {
      auto sc = sharingOf(c.kind);
      if (!sc)
        continue;
      for (size_t i = 0; i < c.varSymbols.size(); ++i) {
        int sym = c.varSymbols[i];
        if (sym < 0)
          continue;
        auto [it, inserted] = vars.emplace(sym, *sc);
        if (!inserted && it->second != *sc)
          diags_.report(Severity::Warning, c.loc,
                        "variable '" + c.vars[i] +
                            "' appears in conflicting data-sharing clauses; "
                            "keeping the first");
      }
    }
    if (vars.empty())
      return;
    ClauseScope scope;
    scope.parent = ctx_.scope;
    scope.vars = std::move(vars);
    ctx_.scope = static_cast<int>(cfg_.scopes.size());
    cfg_.scopes.push_back(std::move(scope));
  }

  // ---- statements ----

  void buildRoot(const Function &fn) {
    ctx_ = BlockCtx{};
    ctx_.root = static_cast<int>(cfg_.roots.size());
    frontier_.clear();
    cur_ = -1;
    rootEntry_ = -1;
    rootExits_.clear();
    if (fn.body)
      buildStmt(fn.body.get());
    seal();
    for (int f : frontier_)
      rootExits_.push_back(f);
    RootInfo info;
    info.function = fn.name;
    info.entry = rootEntry_;
    info.exits = std::move(rootExits_);
    cfg_.roots.push_back(std::move(info));
  }

  void buildStmts(const std::vector<StmtPtr> &stmts) {
    for (const auto &s : stmts)
      if (s)
        buildStmt(s.get());
  }

  void buildStmt(const Stmt *s) {
    switch (s->kind) {
    case StmtKind::Block:
      buildStmts(s->stmts);
      break;
    case StmtKind::Decl:
      if (s->symbol >= 0)
        cfg_.declRegion[s->symbol] = ctx_.parallelRegionId;
      append(ItemKind::Stmt, s, nullptr, -1, s->loc);
      break;
    case StmtKind::Assign:
    case StmtKind::Call:
      append(ItemKind::Stmt, s, nullptr, -1, s->loc);
      break;
    case StmtKind::Return: {
      int b = append(ItemKind::Stmt, s, nullptr, -1, s->loc);
      rootExits_.push_back(b);
      seal();
      frontier_.clear();
      break;
    }
    case StmtKind::Barrier:
      if (ctx_.inSingle || ctx_.inMaster || ctx_.inSection || ctx_.inAtomic ||
          ctx_.criticalLock || ctx_.wsLoopId >= 0)
        diags_.report(Severity::SyntaxError, s->loc,
                      "barrier may not appear inside single, master, "
                      "sections, critical, atomic, or a worksharing loop");
      barrierBlock(s, ItemKind::Stmt, s->loc);
      break;
    case StmtKind::If:
      buildIf(s);
      break;
    case StmtKind::ForLoop:
      buildFor(s, -1);
      break;
    case StmtKind::PragmaBlock:
      buildPragma(s);
      break;
    }
  }

  void buildIf(const Stmt *s) {
    append(ItemKind::IfCond, s, s->cond.get(), -1,
           s->cond ? s->cond->loc : s->loc);
    seal();
    std::vector<int> condF = frontier_;
    if (s->thenS)
      buildStmt(s->thenS.get());
    seal();
    std::vector<int> thenF = frontier_;
    frontier_ = condF;
    if (s->elseS)
      buildStmt(s->elseS.get());
    seal();
    frontier_ = unionOf(thenF, frontier_);
  }

  static int ivOf(const Stmt *loop) {
    const Stmt *init = loop->forInit.get();
    if (init) {
      if (init->kind == StmtKind::Decl)
        return init->symbol;
      if (init->kind == StmtKind::Assign && init->lhs &&
          init->lhs->kind == ExprKind::VarRef)
        return init->lhs->symbol;
    }
    if (loop->cond && loop->cond->kind == ExprKind::Binary && loop->cond->a &&
        loop->cond->a->kind == ExprKind::VarRef)
      return loop->cond->a->symbol;
    return -1;
  }

  /// Recognizes `iv = c0` / `int iv = c0`, `iv < L` or `iv <= L`, and
  /// `iv = iv + s` with literal c0, L and positive literal s.
  static std::int64_t tripCountOf(const Stmt *loop) {
    const Stmt *init = loop->forInit.get();
    int iv = -1;
    std::int64_t c0 = 0;
    if (!init)
      return -1;
    if (init->kind == StmtKind::Decl && init->init &&
        init->init->kind == ExprKind::IntLit) {
      iv = init->symbol;
      c0 = init->init->intValue;
    } else if (init->kind == StmtKind::Assign && init->lhs &&
               init->lhs->kind == ExprKind::VarRef && init->rhs &&
               init->rhs->kind == ExprKind::IntLit) {
      iv = init->lhs->symbol;
      c0 = init->rhs->intValue;
    } else {
      return -1;
    }
    const Expr *cond = loop->cond.get();
    if (iv < 0 || !cond || cond->kind != ExprKind::Binary)
      return -1;
    if (cond->binOp != BinOp::Lt && cond->binOp != BinOp::Le)
      return -1;
    if (!cond->a || cond->a->kind != ExprKind::VarRef || cond->a->symbol != iv)
      return -1;
    if (!cond->b || cond->b->kind != ExprKind::IntLit)
      return -1;
    std::int64_t limit =
        cond->b->intValue + (cond->binOp == BinOp::Le ? 1 : 0);
    const Stmt *incr = loop->forIncr.get();
    if (!incr || incr->kind != StmtKind::Assign || !incr->lhs ||
        incr->lhs->kind != ExprKind::VarRef || incr->lhs->symbol != iv)
      return -1;
    const Expr *r = incr->rhs.get();
    if (!r || r->kind != ExprKind::Binary || r->binOp != BinOp::Add || !r->a ||
        !r->b)
      return -1;
    std::int64_t step = 0;
    if (r->a->kind == ExprKind::VarRef && r->a->symbol == iv &&
        r->b->kind == ExprKind::IntLit)
      step = r->b->intValue;
    else if (r->b->kind == ExprKind::VarRef && r->b->symbol == iv &&
             r->a->kind == ExprKind::IntLit)
      step = r->a->intValue;
    else
      return -1;
    if (step <= 0)
      return -1;
    if (limit <= c0)
      return 0;
    return (limit - c0 + step - 1) / step;
  }

  void buildFor(const Stmt *s, int wsIv) {
    if (s->forInit) {
      if (s->forInit->kind == StmtKind::Decl && s->forInit->symbol >= 0)
        cfg_.declRegion[s->forInit->symbol] = ctx_.parallelRegionId;
      append(ItemKind::ForInit, s->forInit.get(), nullptr, wsIv,
             s->forInit->loc);
    }
    seal();
    int header = newBlock();
    {
      BasicBlock &hb = cfg_.blocks[header];
      hb.isLoopHeader = true;
      hb.loc = s->loc;
      hb.tripCount = tripCountOf(s);
      BlockItem ci;
      ci.kind = ItemKind::ForCond;
      ci.stmt = s;
      ci.expr = s->cond.get();
      ci.privateIv = wsIv;
      ci.loc = s->cond ? s->cond->loc : s->loc;
      hb.items.push_back(std::move(ci));
    }
    for (int f : frontier_)
      addEdge(f, header);
    frontier_ = {header};
    if (s->body)
      buildStmt(s->body.get());
    if (s->forIncr)
      append(ItemKind::ForIncr, s->forIncr.get(), nullptr, wsIv,
             s->forIncr->loc);
    seal();
    for (int f : frontier_) {
      addEdge(f, header);
      cfg_.backEdges.emplace_back(f, header);
    }
    frontier_ = {header};
  }

  // ---- OpenMP constructs ----

  void buildPragma(const Stmt *s) {
    switch (s->pragma.kind) {
    case PragmaKind::Parallel:
    case PragmaKind::Teams:
      buildParallel(s, false);
      break;
    case PragmaKind::ParallelFor:
      buildParallel(s, true);
      break;
    case PragmaKind::Target: {
      // Offload wrapper: execution stays serial until a teams/parallel
      // construct inside forks, so the wrapper itself adds no structure.
      BlockCtx saved = ctx_;
      pushScope(s->pragma);
      if (s->body)
        buildStmt(s->body.get());
      ctx_.scope = saved.scope;
      break;
    }
    case PragmaKind::For:
    case PragmaKind::Distribute:
      buildWsLoop(s);
      break;
    case PragmaKind::Simd:
      buildSimd(s);
      break;
    case PragmaKind::Single:
      buildSingleOrMaster(s, true);
      break;
    case PragmaKind::Master:
      buildSingleOrMaster(s, false);
      break;
    case PragmaKind::Sections:
      buildSections(s);
      break;
    case PragmaKind::Section:
      // A stray section outside `sections`; analyze its body as plain code.
      if (s->body)
        buildStmt(s->body.get());
      break;
    case PragmaKind::Critical:
      buildGuarded(s, true);
      break;
    case PragmaKind::Atomic:
      buildGuarded(s, false);
      break;
    }
  }

  void buildParallel(const Stmt *s, bool fusedLoop) {
    BlockCtx saved = ctx_;
    pushScope(s->pragma);
    ctx_.parallelRegionId = cfg_.numRegions++;
    ctx_.multiInstance = true;
    ctx_.inMaster = ctx_.inSingle = ctx_.inSection = ctx_.inAtomic = false;
    ctx_.criticalLock.reset();
    ctx_.wsLoopId = ctx_.wsLoopIv = -1;

    seal();
    int entry = newBlock();
    cfg_.blocks[entry].isParallelEntry = true;
    cfg_.blocks[entry].loc = s->loc;
    for (int f : frontier_)
      addEdge(f, entry);
    frontier_ = {entry};
    cur_ = entry; // leading body statements share the entry block

    if (fusedLoop) {
      // The loop's own implicit barrier coincides with the region join, so
      // only the region exit bumps the phase.
      wsLoopBody(s);
    } else if (s->body) {
      buildStmt(s->body.get());
    }

    seal();
    ctx_ = saved; // code after the join runs outside the region
    int exit = newBlock();
    cfg_.blocks[exit].isParallelExit = true;
    cfg_.blocks[exit].loc = s->loc;
    for (int f : frontier_)
      addEdge(f, exit);
    frontier_ = {exit};
    cur_ = exit; // trailing statements share the exit block
  }

  void wsLoopBody(const Stmt *s) {
    const Stmt *loop = s->body.get();
    if (!loop)
      return;
    if (loop->kind != StmtKind::ForLoop) {
      buildStmt(loop);
      return;
    }
    int savedId = ctx_.wsLoopId, savedIv = ctx_.wsLoopIv;
    ctx_.wsLoopId = cfg_.numWsLoops++;
    ctx_.wsLoopIv = ivOf(loop);
    buildFor(loop, ctx_.wsLoopIv);
    ctx_.wsLoopId = savedId;
    ctx_.wsLoopIv = savedIv;
  }

  void buildWsLoop(const Stmt *s) {
    if (ctx_.parallelRegionId < 0 && s->pragma.kind == PragmaKind::For)
      diags_.report(Severity::Warning, s->loc,
                    "worksharing loop outside any parallel region");
    if (ctx_.wsLoopId >= 0)
      diags_.report(Severity::SyntaxError, s->loc,
                    "worksharing construct may not be nested inside another "
                    "worksharing region");
    else if (ctx_.inSingle || ctx_.inMaster || ctx_.inSection ||
             ctx_.criticalLock)
      diags_.report(Severity::SyntaxError, s->loc,
                    "worksharing construct may not be nested inside single, "
                    "master, sections, or critical");
    BlockCtx saved = ctx_;
    pushScope(s->pragma);
    wsLoopBody(s);
    ctx_ = saved;
    // `distribute` carries no implicit barrier; `for` does unless nowait.
    if (s->pragma.kind == PragmaKind::For && !s->pragma.hasNowait())
      barrierBlock(s, ItemKind::ImplicitBarrier, s->loc);
  }

  void buildSimd(const Stmt *s) {
    BlockCtx saved = ctx_;
    pushScope(s->pragma);
    if (ctx_.parallelRegionId < 0) {
      // Vector lanes execute concurrently even outside a parallel region;
      // model them as instances of a region with no phase bumps.
      ctx_.parallelRegionId = cfg_.numRegions++;
      ctx_.multiInstance = true;
    }
    wsLoopBody(s);
    ctx_ = saved;
  }

  void buildSingleOrMaster(const Stmt *s, bool isSingle) {
    if (isSingle && ctx_.parallelRegionId < 0)
      diags_.report(Severity::Warning, s->loc,
                    "single construct outside any parallel region");
    BlockCtx saved = ctx_;
    pushScope(s->pragma);
    seal();
    std::vector<int> dom = frontier_; // threads not running the body
    ctx_.multiInstance = false;
    if (isSingle)
      ctx_.inSingle = true;
    else
      ctx_.inMaster = true;
    if (s->body)
      buildStmt(s->body.get());
    seal();
    std::vector<int> body = frontier_;
    ctx_ = saved;
    frontier_ = unionOf(body, dom);
    if (isSingle && !s->pragma.hasNowait())
      barrierBlock(s, ItemKind::ImplicitBarrier, s->loc);
  }

  void buildSections(const Stmt *s) {
    if (ctx_.parallelRegionId < 0)
      diags_.report(Severity::Warning, s->loc,
                    "sections construct outside any parallel region");
    BlockCtx saved = ctx_;
    pushScope(s->pragma);
    seal();
    std::vector<int> dom = frontier_;
    std::vector<int> joined;
    ctx_.multiInstance = false;
    ctx_.inSection = true;
    if (s->body)
      for (const auto &sec : s->body->stmts) {
        if (!sec)
          continue;
        frontier_ = dom;
        cur_ = -1;
        const Stmt *secBody = sec.get();
        if (sec->kind == StmtKind::PragmaBlock &&
            sec->pragma.kind == PragmaKind::Section)
          secBody = sec->body.get();
        if (secBody)
          buildStmt(secBody);
        seal();
        joined = unionOf(joined, frontier_);
      }
    ctx_ = saved;
    // Threads holding no section fall through to the join directly.
    frontier_ = unionOf(joined, dom);
    if (!s->pragma.hasNowait())
      barrierBlock(s, ItemKind::ImplicitBarrier, s->loc);
  }

  void buildGuarded(const Stmt *s, bool isCritical) {
    BlockCtx saved = ctx_;
    seal();
    if (isCritical)
      ctx_.criticalLock = s->pragma.criticalName;
    else
      ctx_.inAtomic = true;
    if (s->body)
      buildStmt(s->body.get());
    seal();
    ctx_ = saved;
  }
};

} // namespace

Cfg buildCfg(const Program &prog, DiagnosticSink &diags) {
  return Builder(prog, diags).build();
}

void normalizeBarriers(Cfg &cfg) {
  int original = static_cast<int>(cfg.blocks.size());
  for (int i = 0; i < original; ++i) {
    std::vector<int> cuts;
    for (int k = 0; k < static_cast<int>(cfg.blocks[i].items.size()); ++k)
      if (isBarrierItem(cfg.blocks[i].items[k]))
        cuts.push_back(k);
    if (cuts.empty()) {
      cfg.blocks[i].hasBarrier = false;
      continue;
    }
    if (cuts.size() == 1 &&
        cuts[0] + 1 == static_cast<int>(cfg.blocks[i].items.size())) {
      cfg.blocks[i].hasBarrier = true;
      continue;
    }

    // Denormalized: cut after every barrier. The trailing segment (possibly
    // empty) takes over the original fall-through edges.
    std::vector<std::vector<BlockItem>> segs;
    segs.emplace_back();
    for (auto &item : cfg.blocks[i].items) {
      segs.back().push_back(std::move(item));
      if (isBarrierItem(segs.back().back()))
        segs.emplace_back();
    }
    BlockCtx ctx = cfg.blocks[i].ctx;
    SourceLoc fallbackLoc = cfg.blocks[i].loc;
    std::vector<int> tailSuccs = std::move(cfg.blocks[i].succs);
    cfg.blocks[i].items = std::move(segs[0]);
    cfg.blocks[i].hasBarrier = true;
    cfg.blocks[i].succs.clear();

    int prev = i;
    for (size_t s = 1; s < segs.size(); ++s) {
      int nid = static_cast<int>(cfg.blocks.size());
      BasicBlock nb;
      nb.id = nid;
      nb.ctx = ctx;
      nb.items = std::move(segs[s]);
      nb.hasBarrier = !nb.items.empty() && isBarrierItem(nb.items.back());
      nb.loc = nb.items.empty() ? fallbackLoc : nb.items.front().loc;
      nb.preds = {prev};
      cfg.blocks.push_back(std::move(nb));
      cfg.blocks[prev].succs = {nid};
      prev = nid;
    }
    cfg.blocks[prev].succs = std::move(tailSuccs);
    for (int sc : cfg.blocks[prev].succs)
      for (auto &p : cfg.blocks[sc].preds)
        if (p == i)
          p = prev;
    for (auto &root : cfg.roots)
      for (auto &e : root.exits)
        if (e == i)
          e = prev;
    for (auto &be : cfg.backEdges)
      if (be.first == i)
        be.first = prev;
  }
}

} // namespace omprace
