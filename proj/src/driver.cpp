#include "omprace/driver.hpp"

#include "omprace/inliner.hpp"
#include "omprace/parser.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace omprace {

namespace {

std::vector<std::string> splitLines(const std::string &text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    lines.push_back(std::move(cur));
  return lines;
}

} // namespace

AnalysisResult analyzeSource(const std::string &text, const std::string &path,
                             const AnalysisOptions &opts) {
  AnalysisResult res;
  res.path = path;
  res.lines = splitLines(text);

  DiagnosticSink sink;
  auto pipe = std::make_unique<Pipeline>();
  pipe->program = parseSource(text, path, sink);
  res.covered = !sink.hasUnsupported();
  if (sink.hasErrors() || !res.covered) {
    res.parseError = sink.hasErrors();
    res.diagnostics = sink.take();
    return res;
  }

  inlineCalls(pipe->program, sink);
  pipe->symbols = resolveSymbols(pipe->program, sink);
  pipe->cfg = buildCfg(pipe->program, sink);
  normalizeBarriers(pipe->cfg);
  pipe->tg = buildTaskGraph(pipe->cfg);
  pipe->pia = runPia(pipe->tg, PiaOptions{opts.bound});
  pipe->accesses = collectAccesses(pipe->cfg, pipe->tg, pipe->symbols);
  res.races = detectRaces(pipe->cfg, pipe->tg, pipe->pia, pipe->accesses,
                          pipe->symbols, RaceOptions{opts.useMhp});

  // construct misuse found while building the graph still fails the run
  res.parseError = sink.hasErrors();
  res.diagnostics = sink.take();
  res.pipeline = std::move(pipe);
  return res;
}

AnalysisResult analyzeFile(const std::string &path,
                           const AnalysisOptions &opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    AnalysisResult res;
    res.path = path;
    res.parseError = true;
    res.diagnostics.push_back(Diagnostic{
        Severity::SyntaxError, "cannot open '" + path + "'", {SourceLoc{path}}});
    return res;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return analyzeSource(buf.str(), path, opts);
}

ManifestParseError::ManifestParseError(int line, const std::string &what)
    : std::runtime_error("manifest line " + std::to_string(line) + ": " + what),
      line(line) {}

std::vector<ManifestEntry> parseManifest(const std::string &text,
                                         const std::string &baseDir) {
  std::vector<ManifestEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank)
      continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ManifestParseError(lineNo, "expected '<path>\\t<yes|no>'");
    std::string path = line.substr(0, tab);
    std::string label = line.substr(tab + 1);
    auto trim = [](std::string &s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    trim(path);
    trim(label);
    if (path.empty())
      throw ManifestParseError(lineNo, "empty kernel path");
    if (label != "yes" && label != "no")
      throw ManifestParseError(lineNo,
                               "label must be 'yes' or 'no', got '" + label +
                                   "'");
    ManifestEntry e;
    std::filesystem::path p(path);
    e.path = p.is_absolute() || baseDir.empty()
                 ? p.string()
                 : (std::filesystem::path(baseDir) / p).string();
    e.racy = label == "yes";
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<ManifestEntry> loadManifest(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ManifestParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseManifest(buf.str(),
                       std::filesystem::path(path).parent_path().string());
}

} // namespace omprace
