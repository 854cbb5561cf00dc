#include "omprace/racedetect.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace omprace {

namespace {

bool locLess(const SourceLoc &a, const SourceLoc &b) {
  return std::tie(a.line, a.col) < std::tie(b.line, b.col);
}

bool eligible(const Cfg &cfg, const Access &a) {
  if (a.sharing != Sharing::Shared && a.sharing != Sharing::ReductionVar)
    return false;
  return cfg.block(a.block).ctx.parallelRegionId >= 0;
}

} // namespace

const char *raceKindName(RaceKind k) {
  return k == RaceKind::WriteWrite ? "write-write" : "write-read";
}

std::vector<RaceReport> detectRaces(const Cfg &cfg, const TaskGraph &tg,
                                    const PiaResult &pia,
                                    const std::vector<Access> &accesses,
                                    const SymbolTable &symtab,
                                    RaceOptions opts) {
  std::map<int, std::vector<const Access *>> bySymbol;
  for (const Access &a : accesses)
    if (eligible(cfg, a))
      bySymbol[a.symbol].push_back(&a);

  std::vector<RaceReport> out;
  std::set<std::tuple<int, int, int, int, int, int>> seen;

  for (auto &[sym, list] : bySymbol) {
    for (size_t i = 0; i < list.size(); ++i) {
      for (size_t j = i; j < list.size(); ++j) {
        const Access &a = *list[i];
        const Access &b = *list[j];
        if (!a.write && !b.write)
          continue;
        if (cfg.block(a.block).ctx.root != cfg.block(b.block).ctx.root)
          continue; // different entry points never run together
        if (i == j) {
          // one textual access racing with itself requires a second running
          // instance of its block, and only writes conflict
          if (!a.write || !tg.multiInstance(a.node))
            continue;
        }
        if (a.sharing == Sharing::ReductionVar &&
            b.sharing == Sharing::ReductionVar)
          continue; // the reduction runtime combines these
        if (a.atomicCtx && b.atomicCtx)
          continue;
        if (opts.useMhp &&
            !mayHappenInParallel(tg, pia, a.node, b.node).may)
          continue;
        if (subscriptsDisjoint(cfg, a, b))
          continue;

        const Access &src = locLess(b.loc, a.loc) ? b : a;
        const Access &snk = &src == &a ? b : a;
        RaceReport r;
        r.kind = a.write && b.write ? RaceKind::WriteWrite
                                    : RaceKind::WriteRead;
        r.symbol = sym;
        r.var = symtab.info(sym).name;
        r.source = src.loc;
        r.sink = snk.loc;
        r.sourcePhase = pia.span(src.node);
        r.sinkPhase = pia.span(snk.node);
        auto key = std::make_tuple(sym, r.source.line, r.source.col,
                                   r.sink.line, r.sink.col,
                                   static_cast<int>(r.kind));
        if (seen.insert(key).second)
          out.push_back(std::move(r));
      }
    }
  }

  std::sort(out.begin(), out.end(),
            [](const RaceReport &x, const RaceReport &y) {
              return std::tie(x.source.line, x.source.col, x.sink.line,
                              x.sink.col, x.var) <
                     std::tie(y.source.line, y.source.col, y.sink.line,
                              y.sink.col, y.var);
            });
  return out;
}

} // namespace omprace
