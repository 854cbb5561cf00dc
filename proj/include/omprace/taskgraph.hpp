#ifndef OMPRACE_TASKGRAPH_HPP
#define OMPRACE_TASKGRAPH_HPP

#include "omprace/cfg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace omprace {

struct TgNode {
  int id = 0;
  int block = -1; // CFG block, -1 for the R/T sentinels
  std::string name;
  int extraBumps = 0; // phase bumps folded in from merged trailing exits
  std::vector<int> succs, preds;
};

/// The reduced task graph: one node per CFG basic block plus a root sentinel
/// R (in-degree 0) and a termination sentinel T (out-degree 0). Every entry
/// function hangs off R; every fall-through exit feeds T.
struct TaskGraph {
  const Cfg *cfg = nullptr;
  std::vector<TgNode> nodes;
  std::vector<int> blockToNode; // CFG block id -> node id
  int root = 0;
  int terminal = 1;

  const BasicBlock *blockOf(int node) const {
    int b = nodes[node].block;
    return b < 0 ? nullptr : &cfg->blocks[b];
  }

  bool multiInstance(int node) const {
    const BasicBlock *b = blockOf(node);
    return b && b->ctx.multiInstance;
  }

  /// Phase bumps this node's transfer applies: 1 for a barrier or a parallel
  /// region entry/exit, plus any bumps inherited from merged exit blocks.
  int bumpCount(int node) const {
    const TgNode &n = nodes[node];
    const BasicBlock *b = blockOf(node);
    int bumps = n.extraBumps;
    if (b && (b->hasBarrier || b->isParallelEntry || b->isParallelExit))
      ++bumps;
    return bumps;
  }

  std::int64_t tripCount(int node) const {
    const BasicBlock *b = blockOf(node);
    return b && b->isLoopHeader ? b->tripCount : -1;
  }
};

/// Builds the reduced task graph. A trailing empty region-exit block whose
/// only successor is T is folded into T (its phase bump moves to T's
/// transfer), except when that would erase the minimal entry/exit skeleton of
/// a completely empty region.
TaskGraph buildTaskGraph(const Cfg &cfg);

} // namespace omprace

#endif // OMPRACE_TASKGRAPH_HPP
