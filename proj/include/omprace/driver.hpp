#ifndef OMPRACE_DRIVER_HPP
#define OMPRACE_DRIVER_HPP

#include "omprace/access.hpp"
#include "omprace/cfg.hpp"
#include "omprace/pia.hpp"
#include "omprace/racedetect.hpp"
#include "omprace/symbols.hpp"
#include "omprace/taskgraph.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace omprace {

struct AnalysisOptions {
  PhaseBound bound = kDefaultPhaseBound;
  bool useMhp = true;
};

/// Every intermediate stage for one translation unit, kept alive together:
/// later stages hold pointers into earlier ones.
struct Pipeline {
  Program program;
  SymbolTable symbols;
  Cfg cfg;
  TaskGraph tg;
  PiaResult pia;
  std::vector<Access> accesses;
};

struct AnalysisResult {
  std::string path;
  std::vector<std::string> lines; // source text, for excerpts
  std::vector<Diagnostic> diagnostics;
  bool parseError = false; // syntax/lex errors anywhere in the pipeline
  bool covered = true;     // false: uses constructs outside the modeled subset
  std::vector<RaceReport> races;
  std::unique_ptr<Pipeline> pipeline; // null if parsing failed or not covered
};

AnalysisResult analyzeSource(const std::string &text, const std::string &path,
                             const AnalysisOptions &opts = {});
/// Reads and analyzes `path`; an unreadable file comes back as a parse error
/// with a diagnostic, never an exception.
AnalysisResult analyzeFile(const std::string &path,
                           const AnalysisOptions &opts = {});

struct ManifestEntry {
  std::string path; // resolved against the manifest's directory
  bool racy = false;
};

struct ManifestParseError : std::runtime_error {
  int line;
  ManifestParseError(int line, const std::string &what);
};

/// Parses kernel-list lines of the form "<path>\t<yes|no>". '#' starts a
/// comment; blank lines are skipped. Relative paths are joined to `baseDir`.
std::vector<ManifestEntry> parseManifest(const std::string &text,
                                         const std::string &baseDir);
std::vector<ManifestEntry> loadManifest(const std::string &path);

} // namespace omprace

#endif // OMPRACE_DRIVER_HPP
