#ifndef OMPRACE_PIA_HPP
#define OMPRACE_PIA_HPP

#include "omprace/phase_interval.hpp"
#include "omprace/taskgraph.hpp"

#include <cstdint>
#include <vector>

namespace omprace {

/// The solver's view of a graph: exactly what phase propagation needs, so
/// tests can feed synthetic graphs without building an AST or CFG.
struct PhaseGraph {
  int root = 0;
  std::vector<std::vector<int>> succs, preds;
  std::vector<int> bumps;               // phase increments per node
  std::vector<std::int64_t> tripCounts; // known loop trip counts, -1 unknown

  int size() const { return static_cast<int>(succs.size()); }
};

PhaseGraph phaseView(const TaskGraph &tg);

struct PiaOptions {
  PhaseBound bound = kDefaultPhaseBound;
};

struct PiaResult {
  std::vector<PhaseInterval> in, out;
  int iterations = 0;

  /// All phases in which any part of the node can run.
  PhaseInterval span(int node) const { return join(in[node], out[node]); }
};

/// Forward propagation of phase intervals: the root enters at [0,0], each
/// node's transfer adds its bump count, joins meet at merge points. Loops
/// with a known trip count are closed in one acceleration step; others are
/// widened with thresholds. Throws IterationCapExceeded if the fixpoint
/// budget of 64*(n+2) node evaluations is ever exhausted (it never is —
/// widening stabilizes each loop in a bounded number of visits).
PiaResult runPia(const PhaseGraph &g, PiaOptions opts = {});
PiaResult runPia(const TaskGraph &tg, PiaOptions opts = {});

} // namespace omprace

#endif // OMPRACE_PIA_HPP
