#ifndef OMPRACE_INLINER_HPP
#define OMPRACE_INLINER_HPP

#include "omprace/ast.hpp"
#include "omprace/diagnostics.hpp"

#include <set>
#include <string>

namespace omprace {

/// Names of functions that appear as a call statement anywhere in the
/// program. Used to pick analysis roots: a defined function nobody calls is
/// analyzed on its own.
std::set<std::string> calledFunctions(const Program &p);

/// Expands calls to defined functions in place, one level deep. Scalar
/// arguments become fresh by-value locals; array parameters are renamed to
/// the caller's array. Calls that cannot be expanded (recursive, undefined
/// callee, arity mismatch, array argument that is not a plain name, callee
/// with an early return) stay in the tree and get a warning; they have no
/// modeled effect on memory.
void inlineCalls(Program &p, DiagnosticSink &diags);

} // namespace omprace

#endif
