#ifndef OMPRACE_DIAGNOSTICS_HPP
#define OMPRACE_DIAGNOSTICS_HPP

#include "omprace/source_loc.hpp"

#include <string>
#include <vector>

namespace omprace {

enum class Severity {
  Race,
  UnsupportedPragma,
  SyntaxError,
  IllegalCharacter,
  Warning,
};

/// A rendered, user-facing message. Race diagnostics carry both the source
/// and the sink location; everything else carries one location.
struct Diagnostic {
  Severity severity;
  std::string text;
  std::vector<SourceLoc> locs;
};

const char *severityName(Severity s);

/// Collects diagnostics during a pipeline stage. Order of emission is
/// preserved; callers sort where the output format demands it.
class DiagnosticSink {
public:
  void report(Severity sev, SourceLoc loc, std::string text) {
    diags_.push_back(Diagnostic{sev, std::move(text), {std::move(loc)}});
  }
  void report(Diagnostic d) { diags_.push_back(std::move(d)); }

  const std::vector<Diagnostic> &all() const { return diags_; }
  std::vector<Diagnostic> take() { return std::move(diags_); }

  bool hasErrors() const {
    for (const auto &d : diags_)
      if (d.severity == Severity::SyntaxError ||
          d.severity == Severity::IllegalCharacter)
        return true;
    return false;
  }
  bool hasUnsupported() const {
    for (const auto &d : diags_)
      if (d.severity == Severity::UnsupportedPragma)
        return true;
    return false;
  }

private:
  std::vector<Diagnostic> diags_;
};

} // namespace omprace

#endif
