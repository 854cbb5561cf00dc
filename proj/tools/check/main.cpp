#include "omprace/driver.hpp"
#include "omprace/metrics.hpp"
#include "omprace/report.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define OMPRACE_ISATTY _isatty
#define OMPRACE_FILENO _fileno
#else
#include <unistd.h>
#define OMPRACE_ISATTY isatty
#define OMPRACE_FILENO fileno
#endif

namespace {

using namespace omprace;

enum ExitCode { kClean = 0, kRaces = 1, kUsage = 2 };

bool wantColor() {
  if (std::getenv("NO_COLOR"))
    return false;
  return OMPRACE_ISATTY(OMPRACE_FILENO(stdout)) != 0;
}

struct Options {
  PhaseBound bound = kDefaultPhaseBound;
  std::string dotPath;
  std::string format = "text";
  std::string mhpEngine = "on";
  std::vector<std::string> files;
};

void printDiagnostics(const AnalysisResult &res, bool json) {
  for (const auto &d : res.diagnostics) {
    if (json)
      std::cout << diagnosticJsonLine(d) << "\n";
    else
      std::cerr << (d.locs.empty() ? res.path : d.locs.front().str()) << ": "
                << severityName(d.severity) << ": " << d.text << "\n";
  }
  if (!res.covered && !json)
    std::cerr << res.path << ": not covered: uses directives outside the "
              << "modeled subset; no race analysis performed\n";
}

int runCheck(const Options &opt) {
  bool json = opt.format == "json";
  ReportOptions rep;
  rep.color = !json && wantColor();
  rep.bound = opt.bound;

  AnalysisOptions aopts;
  aopts.bound = opt.bound;
  aopts.useMhp = opt.mhpEngine == "on";

  bool anyParseError = false;
  bool anyRace = false;
  bool firstBlock = true;
  for (const std::string &file : opt.files) {
    AnalysisResult res = analyzeFile(file, aopts);
    printDiagnostics(res, json);
    anyParseError |= res.parseError;
    anyRace |= !res.races.empty();

    if (json) {
      for (const auto &r : res.races)
        std::cout << raceJsonLine(r, opt.bound) << "\n";
    } else if (!res.races.empty()) {
      if (!firstBlock)
        std::cout << "\n";
      std::cout << formatRaces(res.races, res.lines, rep);
      firstBlock = false;
    }

    if (!opt.dotPath.empty() && res.pipeline) {
      std::ofstream out(opt.dotPath, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write '" << opt.dotPath << "'\n";
        return kUsage;
      }
      out << emitDot(res.pipeline->tg, res.pipeline->pia, opt.bound);
    }
  }
  if (anyParseError)
    return kUsage;
  return anyRace ? kRaces : kClean;
}

void printRatio(const char *name, const Rational &r) {
  std::cout << name << " = " << r.str();
  if (r.defined()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.approx());
    std::cout << " (" << buf << ")";
  }
  std::cout << "\n";
}

int runBench(const std::string &manifestPath, const Options &opt) {
  std::vector<ManifestEntry> entries;
  try {
    entries = loadManifest(manifestPath);
  } catch (const ManifestParseError &e) {
    std::cerr << manifestPath << ": " << e.what() << "\n";
    return kUsage;
  }

  AnalysisOptions aopts;
  aopts.bound = opt.bound;
  aopts.useMhp = opt.mhpEngine == "on";

  std::int64_t tp = 0, fp = 0, tn = 0, fn = 0, analyzed = 0;
  std::cout << "kernel\texpected\treported\traces\tstatus\n";
  for (const auto &e : entries) {
    AnalysisResult res = analyzeFile(e.path, aopts);
    const char *status = res.parseError  ? "parse-error"
                         : !res.covered ? "not-covered"
                                        : "ok";
    bool reported = !res.races.empty();
    std::cout << e.path << "\t" << (e.racy ? "yes" : "no") << "\t"
              << (reported ? "yes" : "no") << "\t" << res.races.size() << "\t"
              << status << "\n";
    if (res.parseError || !res.covered)
      continue;
    ++analyzed;
    if (e.racy)
      (reported ? tp : fn) += 1;
    else
      (reported ? fp : tn) += 1;
  }

  Metrics m = computeMetrics(tp, fp, tn, fn);
  std::cout << "tp = " << m.tp << "\n"
            << "fp = " << m.fp << "\n"
            << "tn = " << m.tn << "\n"
            << "fn = " << m.fn << "\n";
  printRatio("precision", m.precision);
  printRatio("recall", m.recall);
  printRatio("accuracy", m.accuracy);
  printRatio("f1", m.f1);
  printRatio("tpr", m.tpr);
  printRatio("fpr", m.fpr);
  printRatio("tnr", m.tnr);
  printRatio("fnr", m.fnr);
  printRatio("lr+", m.positiveLikelihood);
  printRatio("lr-", m.negativeLikelihood);
  printRatio("dor", m.diagnosticOdds);
  std::cout << "coverage = " << analyzed << "/" << entries.size() << "\n";
  return kClean;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"static data-race checker for OpenMP-style C kernels"};
  app.require_subcommand(0, 1);

  Options opt;
  app.add_option("--pia-lattice-upper-bound", opt.bound,
                 "phase interval ceiling (rendered as 'inf')")
      ->check(CLI::Range(static_cast<PhaseBound>(1),
                         std::numeric_limits<PhaseBound>::max()));
  app.add_option("--emit-taskgraph-dot", opt.dotPath,
                 "write the task graph in GraphViz format (one input only)");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--mhp-engine", opt.mhpEngine,
                 "consult the concurrency analysis when filtering race pairs")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("files", opt.files, "kernel source files");

  std::string manifestPath;
  CLI::App *bench =
      app.add_subcommand("bench", "score kernels against a labeled manifest");
  bench->add_option("manifest", manifestPath, "tab-separated kernel list")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    // CLI11 returns 0 for --help; anything else is a usage error
    return rc == 0 ? kClean : kUsage;
  }

  if (bench->parsed())
    return runBench(manifestPath, opt);

  if (opt.files.empty()) {
    std::cerr << "no input files\n";
    return kUsage;
  }
  if (!opt.dotPath.empty() && opt.files.size() != 1) {
    std::cerr << "--emit-taskgraph-dot requires exactly one input file\n";
    return kUsage;
  }
  return runCheck(opt);
}
