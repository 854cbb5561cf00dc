#ifndef OMPRACE_RACEDETECT_HPP
#define OMPRACE_RACEDETECT_HPP

#include "omprace/access.hpp"
#include "omprace/mhp.hpp"
#include "omprace/pia.hpp"

#include <string>
#include <vector>

namespace omprace {

enum class RaceKind { WriteWrite, WriteRead };

const char *raceKindName(RaceKind k);

/// One reported race. `source` is the textually earlier of the two accesses,
/// `sink` the later; the phase spans are the task graph spans of the nodes
/// the accesses live in.
struct RaceReport {
  RaceKind kind = RaceKind::WriteWrite;
  int symbol = -1;
  std::string var;
  SourceLoc source, sink;
  PhaseInterval sourcePhase, sinkPhase;
};

struct RaceOptions {
  /// When false, concurrency is not consulted: every eligible conflicting
  /// pair is reported. The instance-count gate on an access paired with
  /// itself is structural and always applies.
  bool useMhp = true;
};

std::vector<RaceReport> detectRaces(const Cfg &cfg, const TaskGraph &tg,
                                    const PiaResult &pia,
                                    const std::vector<Access> &accesses,
                                    const SymbolTable &symtab,
                                    RaceOptions opts = {});

} // namespace omprace

#endif // OMPRACE_RACEDETECT_HPP
