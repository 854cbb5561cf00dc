#ifndef OMPRACE_ACCESS_HPP
#define OMPRACE_ACCESS_HPP

#include "omprace/cfg.hpp"
#include "omprace/symbols.hpp"
#include "omprace/taskgraph.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace omprace {

/// How a variable is held by the threads of the enclosing region.
enum class Sharing {
  Shared,
  Private,
  FirstPrivate,
  LastPrivate,
  ThreadPrivate,
  ReductionVar,
  LoopInduction,
};

const char *sharingName(Sharing s);

/// One memory access: a read or write of a symbol from one block. Array
/// accesses keep their subscript expression for the disjointness check;
/// scalar accesses have index == nullptr.
struct Access {
  int node = -1;  // task graph node
  int block = -1; // CFG block
  int symbol = -1;
  bool write = false;
  bool atomicCtx = false;
  Sharing sharing = Sharing::Shared;
  const Expr *index = nullptr;
  SourceLoc loc;
};

/// Sharing attribute of `sym` in a block with context `ctx`. Explicit clauses
/// on enclosing constructs win, innermost first; then a worksharing or simd
/// loop's induction variable; then variables declared inside the region
/// itself. Everything else is shared. `itemPrivateIv` is the induction
/// variable a loop-control item is tied to, or -1.
Sharing classifySharing(const Cfg &cfg, const BlockCtx &ctx, int sym,
                        int itemPrivateIv);

/// Walks every block item and lists the reads and writes it performs.
/// Subscripts of array references are address arithmetic, not data accesses:
/// plain scalars inside them are skipped, but arrays indexed there are real
/// loads and are collected.
std::vector<Access> collectAccesses(const Cfg &cfg, const TaskGraph &tg,
                                    const SymbolTable &symtab);

/// A subscript in linear form: sum of coeff*symbol plus a constant.
/// `symbolic` marks anything the linearizer cannot express; such forms
/// compare as possibly-equal everywhere.
struct AffineForm {
  std::map<int, std::int64_t> terms;
  std::int64_t constant = 0;
  bool symbolic = false;
};

AffineForm affinize(const Expr *e);

/// True only when the two subscripted accesses provably never touch the same
/// element: distinct constants, or both of the form iv+c over the same
/// worksharing loop with equal c (distinct instances run distinct
/// iterations). Anything else, including any symbolic form, may alias.
bool subscriptsDisjoint(const Cfg &cfg, const Access &a, const Access &b);

} // namespace omprace

#endif // OMPRACE_ACCESS_HPP
