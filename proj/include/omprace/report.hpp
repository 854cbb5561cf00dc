#ifndef OMPRACE_REPORT_HPP
#define OMPRACE_REPORT_HPP

#include "omprace/diagnostics.hpp"
#include "omprace/pia.hpp"
#include "omprace/racedetect.hpp"
#include "omprace/taskgraph.hpp"

#include <string>
#include <vector>

namespace omprace {

struct ReportOptions {
  bool color = false;
  PhaseBound bound = kDefaultPhaseBound;
};

/// Renders one race: a header, the source and sink positions, and the
/// surrounding source excerpt with the racing lines marked. `lines` is the
/// file split into lines (index 0 = line 1).
std::string formatRaceReport(const RaceReport &r,
                             const std::vector<std::string> &lines,
                             const ReportOptions &opts = {});

/// All race blocks, separated by blank lines.
std::string formatRaces(const std::vector<RaceReport> &races,
                        const std::vector<std::string> &lines,
                        const ReportOptions &opts = {});

/// GraphViz rendering of the task graph, one node per line, phase intervals
/// in the labels. Multi-instance blocks fill dark grey, single-instance
/// blocks light grey; the sentinels get distinctive shapes.
std::string emitDot(const TaskGraph &tg, const PiaResult &pia,
                    PhaseBound bound = kDefaultPhaseBound);

/// Machine format: one self-contained JSON object per line.
std::string raceJsonLine(const RaceReport &r,
                         PhaseBound bound = kDefaultPhaseBound);
std::string diagnosticJsonLine(const Diagnostic &d);

} // namespace omprace

#endif // OMPRACE_REPORT_HPP
