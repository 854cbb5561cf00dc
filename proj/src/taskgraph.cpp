#include "omprace/taskgraph.hpp"

#include <algorithm>

namespace omprace {

namespace {

void addEdge(std::vector<std::vector<int>> &succ,
             std::vector<std::vector<int>> &pred, int from, int to) {
  auto &s = succ[from];
  if (std::find(s.begin(), s.end(), to) != s.end())
    return;
  s.push_back(to);
  pred[to].push_back(from);
}

void dropEdge(std::vector<std::vector<int>> &succ,
              std::vector<std::vector<int>> &pred, int from, int to) {
  auto &s = succ[from];
  s.erase(std::remove(s.begin(), s.end(), to), s.end());
  auto &p = pred[to];
  p.erase(std::remove(p.begin(), p.end(), from), p.end());
}

} // namespace

TaskGraph buildTaskGraph(const Cfg &cfg) {
  int nb = static_cast<int>(cfg.blocks.size());
  // Virtual ids while stitching: 0 = R, 1 = T, 2+i = block i.
  std::vector<std::vector<int>> succ(nb + 2), pred(nb + 2);

  for (const RootInfo &root : cfg.roots) {
    if (root.entry >= 0)
      addEdge(succ, pred, 0, root.entry + 2);
    else
      addEdge(succ, pred, 0, 1);
    for (int e : root.exits)
      addEdge(succ, pred, e + 2, 1);
  }
  for (int i = 0; i < nb; ++i)
    for (int s : cfg.blocks[i].succs)
      addEdge(succ, pred, i + 2, s + 2);

  // Fold trailing empty region exits into T. The bump each one carried moves
  // onto T, matching the convention that T's transfer closes the last
  // region. An exit whose sole predecessor is the empty entry of an empty
  // region stays, so the minimal R -> entry -> exit -> T chain survives.
  std::vector<char> dead(nb + 2, 0);
  int extraT = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < nb; ++i) {
      int v = i + 2;
      if (dead[v])
        continue;
      const BasicBlock &b = cfg.blocks[i];
      if (!b.isParallelExit || !b.items.empty())
        continue;
      if (succ[v].size() != 1 || succ[v][0] != 1)
        continue;
      if (pred[v].size() == 1 && pred[v][0] >= 2) {
        const BasicBlock &p = cfg.blocks[pred[v][0] - 2];
        if (p.isParallelEntry && p.items.empty())
          continue;
      }
      extraT += 1;
      std::vector<int> ps = pred[v];
      for (int p : ps) {
        dropEdge(succ, pred, p, v);
        addEdge(succ, pred, p, 1);
      }
      dropEdge(succ, pred, v, 1);
      dead[v] = 1;
      changed = true;
    }
  }

  TaskGraph tg;
  tg.cfg = &cfg;
  std::vector<int> remap(nb + 2, -1);
  {
    TgNode r;
    r.id = 0;
    r.name = "R";
    tg.nodes.push_back(std::move(r));
    TgNode t;
    t.id = 1;
    t.name = "T";
    t.extraBumps = extraT;
    tg.nodes.push_back(std::move(t));
  }
  remap[0] = 0;
  remap[1] = 1;
  int barCount = 0;
  tg.blockToNode.assign(nb, 1);
  for (int i = 0; i < nb; ++i) {
    if (dead[i + 2]) {
      remap[i + 2] = 1; // merged away; anything mapped here lands on T
      continue;
    }
    TgNode n;
    n.id = static_cast<int>(tg.nodes.size());
    n.block = i;
    n.name = cfg.blocks[i].hasBarrier ? "bar" + std::to_string(++barCount)
                                      : "BB" + std::to_string(i);
    remap[i + 2] = n.id;
    tg.blockToNode[i] = n.id;
    tg.nodes.push_back(std::move(n));
  }
  for (int v = 0; v < nb + 2; ++v) {
    if (v >= 2 && dead[v])
      continue;
    for (int s : succ[v]) {
      TgNode &from = tg.nodes[remap[v]];
      int to = remap[s];
      if (std::find(from.succs.begin(), from.succs.end(), to) !=
          from.succs.end())
        continue;
      from.succs.push_back(to);
      tg.nodes[to].preds.push_back(remap[v]);
    }
  }
  return tg;
}

} // namespace omprace
