#ifndef OMPRACE_PARSER_HPP
#define OMPRACE_PARSER_HPP

#include "omprace/ast.hpp"
#include "omprace/diagnostics.hpp"
#include "omprace/token.hpp"

#include <string>
#include <vector>

namespace omprace {

/// Parses a token stream into a Program. Never throws: syntax problems are
/// reported through `diags` and recovery resynchronizes at ';' or '}'.
/// Directives outside the supported set are reported as UnsupportedPragma
/// and skipped; the statement that follows them is parsed as plain code.
Program parseProgram(const std::vector<Token> &tokens, DiagnosticSink &diags);

/// tokenize + parseProgram in one step.
Program parseSource(const std::string &source, const std::string &file,
                    DiagnosticSink &diags);

} // namespace omprace

#endif
