#ifndef OMPRACE_SYMBOLS_HPP
#define OMPRACE_SYMBOLS_HPP

#include "omprace/ast.hpp"
#include "omprace/diagnostics.hpp"

#include <string>
#include <vector>

namespace omprace {

struct SymbolInfo {
  int id = -1;
  std::string name;
  bool isArray = false;
  bool isGlobal = false;
  bool isParam = false;
  bool implicit = false; // synthesized for an undeclared name
  SourceLoc declLoc;
};

class SymbolTable {
public:
  int add(SymbolInfo info) {
    info.id = static_cast<int>(symbols_.size());
    symbols_.push_back(std::move(info));
    return symbols_.back().id;
  }
  const SymbolInfo &info(int id) const { return symbols_[static_cast<size_t>(id)]; }
  size_t size() const { return symbols_.size(); }

private:
  std::vector<SymbolInfo> symbols_;
};

/// Assigns a distinct symbol id per declaration (shadowing-safe) and writes
/// it into every VarRef/ArrayRef/Decl and clause variable list. A name used
/// without a declaration gets one synthesized function-scope symbol and a
/// warning, so fragments lifted from larger programs still analyze.
SymbolTable resolveSymbols(Program &p, DiagnosticSink &diags);

} // namespace omprace

#endif
