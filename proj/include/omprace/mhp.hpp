#ifndef OMPRACE_MHP_HPP
#define OMPRACE_MHP_HPP

#include "omprace/pia.hpp"
#include "omprace/taskgraph.hpp"

#include <stdexcept>
#include <string>

namespace omprace {

enum class MhpReason {
  PhaseOverlap,         // instances can share a phase
  DisjointPhases,       // barrier-separated
  SameCriticalLock,     // serialized by one critical lock
  BothMasterSameRegion, // one master thread runs both
  SingleInstanceSelf,   // a single-instance node cannot race itself
};

const char *mhpReasonName(MhpReason r);

struct MhpVerdict {
  bool may = false;
  MhpReason reason = MhpReason::PhaseOverlap;
};

struct UnknownNodeError : std::invalid_argument {
  explicit UnknownNodeError(int node)
      : std::invalid_argument("unknown task graph node " +
                              std::to_string(node)) {}
};

/// May two instances of u and v execute concurrently? False only with a
/// stated reason: disjoint phase spans, a shared critical lock, both under
/// the same region's master, or a single-instance node paired with itself.
/// Throws UnknownNodeError for ids outside the graph.
MhpVerdict mayHappenInParallel(const TaskGraph &tg, const PiaResult &pia,
                               int u, int v);

} // namespace omprace

#endif // OMPRACE_MHP_HPP
