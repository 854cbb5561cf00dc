#include "omprace/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace omprace {

namespace {

constexpr const char *kRuler = "==============";
constexpr const char *kRed = "\x1b[31m";
constexpr const char *kReset = "\x1b[0m";

int digits(int n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

nlohmann::ordered_json locJson(const SourceLoc &loc) {
  return {{"file", loc.file}, {"line", loc.line}, {"col", loc.col}};
}

} // namespace

std::string formatRaceReport(const RaceReport &r,
                             const std::vector<std::string> &lines,
                             const ReportOptions &opts) {
  std::ostringstream os;
  os << "Data Race detected.\n";
  os << "Source : " << r.source.str() << "\n";
  os << "Sink : " << r.sink.str() << "\n";
  os << kRuler << "\n";

  int lo = std::min(r.source.line, r.sink.line) - 1;
  int hi = std::max(r.source.line, r.sink.line) + 1;
  lo = std::max(lo, 1);
  hi = std::min(hi, static_cast<int>(lines.size()));
  int width = digits(hi);
  for (int n = lo; n <= hi; ++n) {
    bool racing = n == r.source.line || n == r.sink.line;
    std::string num = std::to_string(n);
    std::string body = std::string(width - num.size(), ' ') + num + " : " +
                       lines[static_cast<size_t>(n - 1)];
    if (!racing)
      os << body << "\n";
    else if (opts.color)
      os << kRed << body << kReset << "\n";
    else
      os << ">> " << body << "\n";
  }
  os << kRuler << "\n";
  return os.str();
}

std::string formatRaces(const std::vector<RaceReport> &races,
                        const std::vector<std::string> &lines,
                        const ReportOptions &opts) {
  std::string out;
  for (size_t i = 0; i < races.size(); ++i) {
    if (i)
      out += "\n";
    out += formatRaceReport(races[i], lines, opts);
  }
  return out;
}

std::string emitDot(const TaskGraph &tg, const PiaResult &pia,
                    PhaseBound bound) {
  std::ostringstream os;
  os << "digraph TaskGraph {\n";
  for (const auto &n : tg.nodes) {
    os << "  n" << n.id << " [label=\"" << n.name << "\\n"
       << pia.in[n.id].str(bound) << "_in " << pia.out[n.id].str(bound)
       << "_out\"";
    if (n.id == tg.root)
      os << ", shape=Mdiamond";
    else if (n.id == tg.terminal)
      os << ", shape=Msquare";
    else if (tg.multiInstance(n.id))
      os << ", style=filled, fillcolor=darkgrey";
    else
      os << ", style=filled, fillcolor=lightgrey";
    os << "];\n";
  }
  for (const auto &n : tg.nodes)
    for (int s : n.succs)
      os << "  n" << n.id << " -> n" << s << ";\n";
  os << "}\n";
  return os.str();
}

std::string raceJsonLine(const RaceReport &r, PhaseBound bound) {
  nlohmann::ordered_json j;
  j["kind"] = "race";
  j["raceKind"] = raceKindName(r.kind);
  j["var"] = r.var;
  j["source"] = locJson(r.source);
  j["sink"] = locJson(r.sink);
  j["sourcePhase"] = r.sourcePhase.str(bound);
  j["sinkPhase"] = r.sinkPhase.str(bound);
  return j.dump();
}

std::string diagnosticJsonLine(const Diagnostic &d) {
  nlohmann::ordered_json j;
  j["kind"] = severityName(d.severity);
  j["message"] = d.text;
  if (!d.locs.empty())
    j["loc"] = locJson(d.locs.front());
  return j.dump();
}

} // namespace omprace
