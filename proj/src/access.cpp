#include "omprace/access.hpp"

namespace omprace {

namespace {

class Collector {
public:
  Collector(const Cfg &cfg, const TaskGraph &tg, const SymbolTable &symtab)
      : cfg_(cfg), tg_(tg), symtab_(symtab) {}

  std::vector<Access> run() {
    for (const auto &b : cfg_.blocks) {
      block_ = &b;
      node_ = tg_.blockToNode[b.id];
      for (const auto &item : b.items) {
        privateIv_ = item.privateIv;
        switch (item.kind) {
        case ItemKind::Stmt:
        case ItemKind::ForInit:
        case ItemKind::ForIncr:
          visitStmt(item.stmt);
          break;
        case ItemKind::ForCond:
        case ItemKind::IfCond:
          reads(item.expr, false);
          break;
        case ItemKind::ImplicitBarrier:
          break;
        }
      }
    }
    return std::move(out_);
  }

private:
  void visitStmt(const Stmt *s) {
    if (!s)
      return;
    switch (s->kind) {
    case StmtKind::Decl:
      if (s->init) {
        reads(s->init.get(), false);
        add(s->symbol, /*write=*/true, nullptr, s->loc);
      }
      break;
    case StmtKind::Assign:
      reads(s->rhs.get(), false);
      if (s->lhs->kind == ExprKind::VarRef)
        add(s->lhs->symbol, true, nullptr, s->lhs->loc);
      else if (s->lhs->kind == ExprKind::ArrayRef) {
        reads(s->lhs->a.get(), true);
        add(s->lhs->symbol, true, s->lhs->a.get(), s->lhs->loc);
      }
      break;
    case StmtKind::Return:
      reads(s->rhs.get(), false);
      break;
    case StmtKind::Call:
      // Unexpanded call: its arguments are at least read. A bare array name
      // decays to a pointer; what happens behind it is not modeled (the
      // frontend already warned), so no element access is recorded for it.
      for (const auto &arg : s->args) {
        if (arg->kind == ExprKind::VarRef && arg->symbol >= 0 &&
            symtab_.info(arg->symbol).isArray)
          continue;
        reads(arg.get(), false);
      }
      break;
    default:
      break;
    }
  }

  /// Collects read accesses in an expression. `inSubscript` means we are in
  /// address arithmetic: scalar reads there are skipped, nested array loads
  /// are kept.
  void reads(const Expr *e, bool inSubscript) {
    if (!e)
      return;
    switch (e->kind) {
    case ExprKind::IntLit:
      break;
    case ExprKind::VarRef:
      if (!inSubscript)
        add(e->symbol, false, nullptr, e->loc);
      break;
    case ExprKind::ArrayRef:
      add(e->symbol, false, e->a.get(), e->loc);
      reads(e->a.get(), true);
      break;
    case ExprKind::Unary:
      reads(e->a.get(), inSubscript);
      break;
    case ExprKind::Binary:
      reads(e->a.get(), inSubscript);
      reads(e->b.get(), inSubscript);
      break;
    }
  }

  void add(int sym, bool write, const Expr *index, SourceLoc loc) {
    if (sym < 0)
      return;
    Access a;
    a.node = node_;
    a.block = block_->id;
    a.symbol = sym;
    a.write = write;
    a.atomicCtx = block_->ctx.inAtomic;
    a.sharing = classifySharing(cfg_, block_->ctx, sym, privateIv_);
    a.index = index;
    a.loc = loc;
    out_.push_back(std::move(a));
  }

  const Cfg &cfg_;
  const TaskGraph &tg_;
  const SymbolTable &symtab_;
  const BasicBlock *block_ = nullptr;
  int node_ = -1;
  int privateIv_ = -1;
  std::vector<Access> out_;
};

} // namespace

const char *sharingName(Sharing s) {
  switch (s) {
  case Sharing::Shared:
    return "shared";
  case Sharing::Private:
    return "private";
  case Sharing::FirstPrivate:
    return "firstprivate";
  case Sharing::LastPrivate:
    return "lastprivate";
  case Sharing::ThreadPrivate:
    return "threadprivate";
  case Sharing::ReductionVar:
    return "reduction";
  case Sharing::LoopInduction:
    return "loop-induction";
  }
  return "?";
}

Sharing classifySharing(const Cfg &cfg, const BlockCtx &ctx, int sym,
                        int itemPrivateIv) {
  for (int s = ctx.scope; s >= 0; s = cfg.scopes[s].parent) {
    auto it = cfg.scopes[s].vars.find(sym);
    if (it == cfg.scopes[s].vars.end())
      continue;
    switch (it->second) {
    case SharingClause::Private:
      return Sharing::Private;
    case SharingClause::FirstPrivate:
      return Sharing::FirstPrivate;
    case SharingClause::LastPrivate:
      return Sharing::LastPrivate;
    case SharingClause::Shared:
      return Sharing::Shared;
    case SharingClause::Reduction:
      return Sharing::ReductionVar;
    case SharingClause::ThreadPrivate:
      return Sharing::ThreadPrivate;
    }
  }
  if (sym >= 0 && (sym == ctx.wsLoopIv || sym == itemPrivateIv))
    return Sharing::LoopInduction;
  auto it = cfg.declRegion.find(sym);
  if (it != cfg.declRegion.end() && it->second == ctx.parallelRegionId)
    return Sharing::Private;
  return Sharing::Shared;
}

std::vector<Access> collectAccesses(const Cfg &cfg, const TaskGraph &tg,
                                    const SymbolTable &symtab) {
  return Collector(cfg, tg, symtab).run();
}

AffineForm affinize(const Expr *e) {
  AffineForm f;
  if (!e) {
    f.symbolic = true;
    return f;
  }
  switch (e->kind) {
  case ExprKind::IntLit:
    f.constant = e->intValue;
    return f;
  case ExprKind::VarRef:
    f.terms[e->symbol] = 1;
    return f;
  case ExprKind::ArrayRef:
    f.symbolic = true;
    return f;
  case ExprKind::Unary: {
    if (e->unOp != UnOp::Neg) {
      f.symbolic = true;
      return f;
    }
    f = affinize(e->a.get());
    if (f.symbolic)
      return f;
    for (auto &[sym, c] : f.terms)
      c = -c;
    f.constant = -f.constant;
    return f;
  }
  case ExprKind::Binary: {
    AffineForm a = affinize(e->a.get());
    AffineForm b = affinize(e->b.get());
    auto pureConst = [](const AffineForm &x) {
      return !x.symbolic && x.terms.empty();
    };
    switch (e->binOp) {
    case BinOp::Add:
    case BinOp::Sub: {
      if (a.symbolic || b.symbolic) {
        f.symbolic = true;
        return f;
      }
      std::int64_t sign = e->binOp == BinOp::Add ? 1 : -1;
      f = std::move(a);
      f.constant += sign * b.constant;
      for (const auto &[sym, c] : b.terms)
        f.terms[sym] += sign * c;
      break;
    }
    case BinOp::Mul: {
      if (pureConst(a) && !b.symbolic) {
        f = std::move(b);
        for (auto &[sym, c] : f.terms)
          c *= a.constant;
        f.constant *= a.constant;
      } else if (pureConst(b) && !a.symbolic) {
        f = std::move(a);
        for (auto &[sym, c] : f.terms)
          c *= b.constant;
        f.constant *= b.constant;
      } else {
        f.symbolic = true;
        return f;
      }
      break;
    }
    default:
      f.symbolic = true;
      return f;
    }
    for (auto it = f.terms.begin(); it != f.terms.end();)
      it = it->second == 0 ? f.terms.erase(it) : std::next(it);
    return f;
  }
  }
  f.symbolic = true;
  return f;
}

bool subscriptsDisjoint(const Cfg &cfg, const Access &a, const Access &b) {
  if (!a.index || !b.index)
    return false;
  AffineForm fa = affinize(a.index);
  AffineForm fb = affinize(b.index);
  if (fa.symbolic || fb.symbolic)
    return false;
  if (fa.terms.empty() && fb.terms.empty())
    return fa.constant != fb.constant;
  const BasicBlock &ba = cfg.block(a.block);
  const BasicBlock &bb = cfg.block(b.block);
  if (ba.ctx.wsLoopId >= 0 && ba.ctx.wsLoopId == bb.ctx.wsLoopId) {
    int iv = ba.ctx.wsLoopIv;
    auto ita = fa.terms.find(iv);
    auto itb = fb.terms.find(iv);
    if (fa.terms.size() == 1 && fb.terms.size() == 1 &&
        ita != fa.terms.end() && itb != fb.terms.end() && ita->second == 1 &&
        itb->second == 1)
      return fa.constant == fb.constant;
  }
  return false;
}

} // namespace omprace
