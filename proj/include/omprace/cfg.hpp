#ifndef OMPRACE_CFG_HPP
#define OMPRACE_CFG_HPP

#include "omprace/ast.hpp"
#include "omprace/diagnostics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace omprace {

class DiagnosticSink;

/// What a slot inside a basic block holds. Loop statements are decomposed so
/// that the init lands in the preheader, the condition in the header, and the
/// increment at the end of the body.
enum class ItemKind { Stmt, ForInit, ForCond, ForIncr, IfCond, ImplicitBarrier };

struct BlockItem {
  ItemKind kind = ItemKind::Stmt;
  const Stmt *stmt = nullptr; // Stmt/ForInit/ForIncr/ImplicitBarrier
  const Expr *expr = nullptr; // ForCond/IfCond
  // Induction variable that is implicitly private for this item (set on the
  // init/cond/incr of worksharing and simd loops), -1 otherwise.
  int privateIv = -1;
  SourceLoc loc;
};

/// Execution context a block inherits from the OpenMP constructs around it.
struct BlockCtx {
  bool multiInstance = false; // may run in more than one thread instance
  bool inMaster = false;
  bool inSingle = false;
  bool inSection = false;
  bool inAtomic = false;
  // Lock guarding the block; "" is the anonymous global critical lock.
  std::optional<std::string> criticalLock;
  int parallelRegionId = -1; // -1 = outside any parallel region
  int wsLoopId = -1;         // innermost worksharing/simd loop, -1 if none
  int wsLoopIv = -1;         // its induction variable symbol, -1 if unknown
  int scope = -1;            // innermost data-sharing clause scope
  int root = 0;              // which entry function owns this block
};

struct BasicBlock {
  int id = 0;
  std::vector<BlockItem> items;
  std::vector<int> succs, preds;
  bool isParallelEntry = false; // first block of a parallel/teams region
  bool isParallelExit = false;  // block right after the region's closing join
  bool hasBarrier = false;      // at most one, always the last item
  bool isLoopHeader = false;
  std::int64_t tripCount = -1; // statically known iteration count, -1 unknown
  BlockCtx ctx;
  SourceLoc loc; // first item added, or the construct that created the block
};

/// One lexical directive's explicit data-sharing requests. Scopes chain
/// outward so lookup can walk from a block to the outermost directive.
enum class SharingClause {
  Private,
  FirstPrivate,
  LastPrivate,
  Shared,
  Reduction,
  ThreadPrivate
};

struct ClauseScope {
  int parent = -1;
  std::map<int, SharingClause> vars; // symbol -> requested sharing
};

/// A function analyzed as its own entry point: `main` plus any function never
/// called from the translation unit (called functions are inlined into their
/// callers by the frontend).
struct RootInfo {
  std::string function;
  int entry = -1;         // first block, -1 when the body is empty
  std::vector<int> exits; // blocks whose fall-through leaves the function
};

struct Cfg {
  std::vector<BasicBlock> blocks;
  std::vector<RootInfo> roots;
  std::vector<std::pair<int, int>> backEdges; // latch -> header
  std::vector<ClauseScope> scopes;
  // Parallel region in which a variable was declared; absent = file scope or
  // outside any region.
  std::map<int, int> declRegion;
  int numRegions = 0;
  int numWsLoops = 0;

  const BasicBlock &block(int id) const { return blocks[id]; }
};

/// Builds the CFG for every root function of the program. The returned graph
/// holds pointers into `prog`, which must outlive it. Every barrier (explicit
/// or implicit) sits in a block of its own; worksharing semantics
/// (bypass edges, implicit barriers, nowait) are resolved here.
Cfg buildCfg(const Program &prog, DiagnosticSink &diags);

/// Defensive re-normalization for hand-built graphs: splits any block holding
/// more than one barrier, or a barrier that is not the last item, into a
/// chain of blocks with at most one trailing barrier each. Construction via
/// buildCfg already yields normalized graphs, so this is the identity there.
void normalizeBarriers(Cfg &cfg);

} // namespace omprace

#endif // OMPRACE_CFG_HPP
