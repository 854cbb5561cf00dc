#ifndef OMPRACE_PHASE_INTERVAL_HPP
#define OMPRACE_PHASE_INTERVAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace omprace {

/// Phase counters saturate at this value, which plays the role of infinity in
/// the interval lattice. Configurable per run (see AnalysisOptions).
using PhaseBound = std::int64_t;
inline constexpr PhaseBound kDefaultPhaseBound = 2147483647; // 2^31 - 1

/// An interval [lb, ub] of phase counters. The empty interval (bottom) is
/// canonically [1, 0]; any lb > ub is treated as bottom by the operations
/// below. Top is [0, bound].
struct PhaseInterval {
  std::int64_t lb = 1;
  std::int64_t ub = 0;

  bool isBottom() const { return lb > ub; }

  bool operator==(const PhaseInterval &o) const {
    if (isBottom() && o.isBottom())
      return true;
    return lb == o.lb && ub == o.ub;
  }
  bool operator!=(const PhaseInterval &o) const { return !(*this == o); }

  static PhaseInterval bottom() { return {1, 0}; }
  static PhaseInterval top(PhaseBound bound = kDefaultPhaseBound) {
    return {0, bound};
  }
  static PhaseInterval make(std::int64_t lb, std::int64_t ub) {
    if (lb > ub)
      return bottom();
    return {lb, ub};
  }

  /// Renders "[lb,ub]", substituting "inf" for components that have reached
  /// the saturation bound. Bottom renders as "[bot]".
  std::string str(PhaseBound bound = kDefaultPhaseBound) const {
    if (isBottom())
      return "[bot]";
    auto side = [&](std::int64_t v) {
      return v >= bound ? std::string("inf") : std::to_string(v);
    };
    return "[" + side(lb) + "," + side(ub) + "]";
  }
};

/// Raised when an interval difference would have a negative component; the
/// phase solver only ever takes deltas along directions where phases grow, so
/// this indicates an internal bug rather than a user error.
struct NegativeDeltaError : std::logic_error {
  NegativeDeltaError() : std::logic_error("negative phase interval delta") {}
};

/// Raised when the fixpoint solver exceeds its iteration budget. Widening
/// guarantees termination well inside the budget, so this is unreachable
/// unless the solver is broken.
struct IterationCapExceeded : std::logic_error {
  IterationCapExceeded()
      : std::logic_error("phase interval solver exceeded iteration cap") {}
};

/// Partial order: a is contained in b.
inline bool leq(const PhaseInterval &a, const PhaseInterval &b) {
  if (a.isBottom())
    return true;
  if (b.isBottom())
    return false;
  return b.lb <= a.lb && a.ub <= b.ub;
}

/// Least upper bound: smallest interval covering both.
inline PhaseInterval join(const PhaseInterval &a, const PhaseInterval &b) {
  if (a.isBottom())
    return b.isBottom() ? PhaseInterval::bottom() : b;
  if (b.isBottom())
    return a;
  return {std::min(a.lb, b.lb), std::max(a.ub, b.ub)};
}

/// Greatest lower bound: the intersection, bottom when disjoint.
inline PhaseInterval meet(const PhaseInterval &a, const PhaseInterval &b) {
  if (a.isBottom() || b.isBottom())
    return PhaseInterval::bottom();
  return PhaseInterval::make(std::max(a.lb, b.lb), std::min(a.ub, b.ub));
}

/// True when the two intervals share at least one phase. Bottom overlaps
/// nothing (an unreachable node runs in no phase at all).
inline bool overlaps(const PhaseInterval &a, const PhaseInterval &b) {
  if (a.isBottom() || b.isBottom())
    return false;
  return std::max(a.lb, b.lb) <= std::min(a.ub, b.ub);
}

inline std::int64_t saturate(std::int64_t v, PhaseBound bound) {
  return std::min<std::int64_t>(v, bound);
}

/// Componentwise sum, saturating at the bound. Strict in bottom.
inline PhaseInterval add(const PhaseInterval &a, const PhaseInterval &b,
                         PhaseBound bound = kDefaultPhaseBound) {
  if (a.isBottom() || b.isBottom())
    return PhaseInterval::bottom();
  return {saturate(a.lb + b.lb, bound), saturate(a.ub + b.ub, bound)};
}

/// c * [lb, ub] = [c*lb, c*ub] for c >= 0, saturating at the bound.
inline PhaseInterval scale(std::int64_t c, const PhaseInterval &a,
                           PhaseBound bound = kDefaultPhaseBound) {
  if (a.isBottom())
    return PhaseInterval::bottom();
  c = std::min<std::int64_t>(c, bound);
  auto mul = [&](std::int64_t v) {
    __int128 p = static_cast<__int128>(c) * v;
    if (p > bound)
      return static_cast<std::int64_t>(bound);
    return static_cast<std::int64_t>(p);
  };
  return {mul(a.lb), mul(a.ub)};
}

/// Componentwise difference b - a; both components must be non-negative
/// (i.e. b must have moved forward on both ends, as along a loop body).
inline PhaseInterval delta(const PhaseInterval &a, const PhaseInterval &b) {
  if (a.isBottom() || b.isBottom())
    throw NegativeDeltaError();
  std::int64_t dl = b.lb - a.lb;
  std::int64_t du = b.ub - a.ub;
  if (dl < 0 || du < 0)
    throw NegativeDeltaError();
  return {dl, du};
}

/// Widening with thresholds: any bound that moved jumps straight to its
/// threshold, so each side changes at most twice before stabilizing.
inline PhaseInterval widen(const PhaseInterval &prev, const PhaseInterval &next,
                           std::int64_t lbThreshold, std::int64_t ubThreshold) {
  if (prev.isBottom())
    return next;
  if (next.isBottom())
    return prev;
  std::int64_t lb = next.lb < prev.lb ? lbThreshold : prev.lb;
  std::int64_t ub = next.ub > prev.ub ? ubThreshold : prev.ub;
  return PhaseInterval::make(lb, ub);
}

/// Loop acceleration. pi0 is the header interval from outside the loop, pi1
/// the header value after one pass through the body; pi1 must not sit below
/// pi0 (phases never decrease along a loop body). With a known trip count tc
/// the result covers exactly the tc+1 per-iteration intervals
/// pi0 + k*delta, k = 0..tc; with an unknown trip count the upper bound is
/// widened away to the saturation bound.
inline PhaseInterval accelerateLoop(const PhaseInterval &pi0,
                                    const PhaseInterval &pi1,
                                    std::optional<std::int64_t> tripCount,
                                    PhaseBound bound = kDefaultPhaseBound) {
  if (pi0.isBottom())
    return PhaseInterval::bottom();
  if (!tripCount)
    return widen(pi0, join(pi0, pi1), 0, bound);
  PhaseInterval d = delta(pi0, join(pi0, pi1));
  return join(pi0, add(pi0, scale(*tripCount, d, bound), bound));
}

} // namespace omprace

#endif // OMPRACE_PHASE_INTERVAL_HPP
