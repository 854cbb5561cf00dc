#include "omprace/mhp.hpp"

namespace omprace {

const char *mhpReasonName(MhpReason r) {
  switch (r) {
  case MhpReason::PhaseOverlap:
    return "phase-overlap";
  case MhpReason::DisjointPhases:
    return "disjoint-phases";
  case MhpReason::SameCriticalLock:
    return "same-critical-lock";
  case MhpReason::BothMasterSameRegion:
    return "both-master-same-region";
  case MhpReason::SingleInstanceSelf:
    return "single-instance-self";
  }
  return "?";
}

MhpVerdict mayHappenInParallel(const TaskGraph &tg, const PiaResult &pia,
                               int u, int v) {
  int n = static_cast<int>(tg.nodes.size());
  if (u < 0 || u >= n)
    throw UnknownNodeError(u);
  if (v < 0 || v >= n)
    throw UnknownNodeError(v);

  if (u == v && !tg.multiInstance(u))
    return {false, MhpReason::SingleInstanceSelf};

  const BasicBlock *bu = tg.blockOf(u);
  const BasicBlock *bv = tg.blockOf(v);
  if (bu && bv) {
    if (bu->ctx.criticalLock && bv->ctx.criticalLock &&
        *bu->ctx.criticalLock == *bv->ctx.criticalLock)
      return {false, MhpReason::SameCriticalLock};
    if (bu->ctx.inMaster && bv->ctx.inMaster &&
        bu->ctx.parallelRegionId == bv->ctx.parallelRegionId)
      return {false, MhpReason::BothMasterSameRegion};
  }

  if (overlaps(pia.span(u), pia.span(v)))
    return {true, MhpReason::PhaseOverlap};
  return {false, MhpReason::DisjointPhases};
}

} // namespace omprace
