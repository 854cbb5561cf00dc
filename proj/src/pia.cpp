#include "omprace/pia.hpp"

#include <limits>

namespace omprace {

namespace {

/// Weak topological ordering (Bourdoncle): a hierarchical ordering of the
/// graph where every cycle is confined to a component whose first element is
/// its head. Solving components recursively, innermost first, gives a
/// fixpoint with a bounded number of node evaluations.
struct WtoElem {
  int node = -1;         // the node, or the component head
  bool component = false;
  std::vector<WtoElem> body; // component members after the head
};

class WtoBuilder {
public:
  explicit WtoBuilder(const PhaseGraph &g) : g_(g), dfn_(g.size(), 0) {}

  std::vector<WtoElem> build() {
    std::vector<WtoElem> partition;
    if (g_.size() > 0 && g_.root >= 0 && g_.root < g_.size())
      visit(g_.root, partition);
    // Nodes unreachable from the root still need defined intervals; they
    // come last and simply evaluate to bottom.
    for (int v = 0; v < g_.size(); ++v)
      if (dfn_[v] == 0) {
        WtoElem e;
        e.node = v;
        partition.push_back(std::move(e));
      }
    return partition;
  }

private:
  static constexpr std::int64_t kDone =
      std::numeric_limits<std::int64_t>::max();

  const PhaseGraph &g_;
  std::vector<std::int64_t> dfn_;
  std::vector<int> stack_;
  std::int64_t num_ = 0;

  WtoElem component(int v) {
    WtoElem c;
    c.component = true;
    c.node = v;
    for (int s : g_.succs[v])
      if (dfn_[s] == 0)
        visit(s, c.body);
    return c;
  }

  std::int64_t visit(int v, std::vector<WtoElem> &partition) {
    stack_.push_back(v);
    dfn_[v] = ++num_;
    std::int64_t head = dfn_[v];
    bool loop = false;
    for (int s : g_.succs[v]) {
      std::int64_t min = dfn_[s] == 0 ? visit(s, partition) : dfn_[s];
      if (min <= head) {
        head = min;
        loop = true;
      }
    }
    if (head == dfn_[v]) {
      dfn_[v] = kDone;
      int e = stack_.back();
      stack_.pop_back();
      if (loop) {
        while (e != v) {
          dfn_[e] = 0;
          e = stack_.back();
          stack_.pop_back();
        }
        partition.insert(partition.begin(), component(v));
      } else {
        WtoElem el;
        el.node = v;
        partition.insert(partition.begin(), std::move(el));
      }
    }
    return head;
  }
};

class Solver {
public:
  Solver(const PhaseGraph &g, PiaOptions opts) : g_(g), opts_(opts) {
    res_.in.assign(g.size(), PhaseInterval::bottom());
    res_.out.assign(g.size(), PhaseInterval::bottom());
    cap_ = 64 * (static_cast<std::int64_t>(g.size()) + 2);
  }

  PiaResult solve() {
    auto wto = WtoBuilder(g_).build();
    for (const WtoElem &e : wto)
      apply(e);
    return std::move(res_);
  }

private:
  const PhaseGraph &g_;
  PiaOptions opts_;
  PiaResult res_;
  std::int64_t cap_ = 0;

  void countEval() {
    if (++res_.iterations > cap_)
      throw IterationCapExceeded();
  }

  PhaseInterval transfer(int v, const PhaseInterval &in) const {
    int b = g_.bumps[v];
    if (b == 0)
      return in;
    return add(in, PhaseInterval{b, b}, opts_.bound);
  }

  PhaseInterval joinPreds(int v, const std::vector<char> *exclude) const {
    if (v == g_.root)
      return PhaseInterval{0, 0}; // boundary condition
    PhaseInterval r = PhaseInterval::bottom();
    for (int p : g_.preds[v])
      if (!exclude || !(*exclude)[p])
        r = join(r, res_.out[p]);
    return r;
  }

  void apply(const WtoElem &e) {
    if (e.component) {
      solveComponent(e);
      return;
    }
    countEval();
    res_.in[e.node] = joinPreds(e.node, nullptr);
    res_.out[e.node] = transfer(e.node, res_.in[e.node]);
  }

  void bodyPass(const WtoElem &c) {
    for (const WtoElem &e : c.body)
      apply(e);
  }

  static void collectMembers(const WtoElem &e, std::vector<char> &members) {
    members[e.node] = 1;
    for (const WtoElem &x : e.body)
      if (x.component)
        collectMembers(x, members);
      else
        members[x.node] = 1;
  }

  void solveComponent(const WtoElem &c) {
    int h = c.node;
    std::vector<char> members(g_.size(), 0);
    collectMembers(c, members);

    // Entry value: what flows into the head from outside the component.
    PhaseInterval pi0 = joinPreds(h, &members);
    countEval();
    res_.in[h] = pi0;
    res_.out[h] = transfer(h, pi0);
    bodyPass(c);
    PhaseInterval pi1 = joinPreds(h, nullptr);
    if (leq(pi1, res_.in[h]))
      return; // the body adds no phases; already stable

    std::int64_t tc = h < static_cast<int>(g_.tripCounts.size())
                          ? g_.tripCounts[h]
                          : -1;
    if (tc >= 0) {
      // Closed form over the known iteration count. The header is pinned to
      // the accelerated interval rather than re-checked against the plain
      // equations: one more body pass would widen the upper bound past the
      // closed form again, and only the saturated interval satisfies the
      // equations verbatim. A known trip count is exactly what lets us stop
      // below saturation.
      PhaseInterval acc = accelerateLoop(pi0, pi1, tc, opts_.bound);
      countEval();
      res_.in[h] = acc;
      res_.out[h] = transfer(h, acc);
      bodyPass(c);
      return;
    }

    // Unknown trip count: widen the header until the back edges stabilize.
    // The upper threshold is the saturation bound, so each side of the
    // header interval moves at most once.
    while (true) {
      countEval();
      res_.in[h] = widen(res_.in[h], pi1, 0, opts_.bound);
      res_.out[h] = transfer(h, res_.in[h]);
      bodyPass(c);
      pi1 = joinPreds(h, nullptr);
      if (leq(pi1, res_.in[h]))
        return;
    }
  }
};

} // namespace

PhaseGraph phaseView(const TaskGraph &tg) {
  PhaseGraph g;
  int n = static_cast<int>(tg.nodes.size());
  g.root = tg.root;
  g.succs.resize(n);
  g.preds.resize(n);
  g.bumps.resize(n);
  g.tripCounts.resize(n);
  for (int i = 0; i < n; ++i) {
    g.succs[i] = tg.nodes[i].succs;
    g.preds[i] = tg.nodes[i].preds;
    g.bumps[i] = tg.bumpCount(i);
    g.tripCounts[i] = tg.tripCount(i);
  }
  return g;
}

PiaResult runPia(const PhaseGraph &g, PiaOptions opts) {
  return Solver(g, opts).solve();
}

PiaResult runPia(const TaskGraph &tg, PiaOptions opts) {
  return runPia(phaseView(tg), opts);
}

} // namespace omprace
