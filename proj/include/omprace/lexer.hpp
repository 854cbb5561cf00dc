#ifndef OMPRACE_LEXER_HPP
#define OMPRACE_LEXER_HPP

#include "omprace/diagnostics.hpp"
#include "omprace/token.hpp"

#include <string>
#include <vector>

namespace omprace {

/// Lexes mini-OMP-C source text. Bytes outside the grammar's alphabet are
/// reported as IllegalCharacter diagnostics and skipped, so lexing is total.
/// The trailing Eof token is always present.
std::vector<Token> tokenize(const std::string &source, const std::string &file,
                            DiagnosticSink &diags);

} // namespace omprace

#endif
