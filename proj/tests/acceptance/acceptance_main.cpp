// Acceptance gate: one self-contained check per release criterion, each
// printing exactly one PASS/FAIL line. Exit status is the number of failures.
#include "omprace/driver.hpp"
#include "omprace/metrics.hpp"
#include "omprace/pia.hpp"
#include "omprace/report.hpp"

#include "support/dot_checker.hpp"
#include "support/graph_gen.hpp"
#include "support/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace omprace;
using namespace omprace::testsupport;

namespace {

std::string corpusPath(const std::string &name) {
  return std::string(CORPUS_DIR) + "/" + name;
}

double msSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string readFile(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string runProcess(const std::string &cmd) {
  std::string full = "NO_COLOR=1 " + cmd;
  FILE *p = popen(full.c_str(), "r");
  if (!p)
    return "<popen failed>";
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    out.append(buf, n);
  pclose(p);
  return out;
}

PhaseInterval pi(std::int64_t lo, std::int64_t hi) {
  return PhaseInterval::make(lo, hi);
}

// ---- criterion 1: exact phase intervals on the two-single kernel ----------

bool criterion1(std::string &msg) {
  auto t0 = std::chrono::steady_clock::now();
  auto a = analyze(kTwoSingles);
  double ms = msSince(t0);
  const TaskGraph &tg = a->tg;
  const PiaResult &r = a->pia;

  auto soleSucc = [&](int n) { return tg.nodes[n].succs.at(0); };
  int root = tg.root;
  int entry = soleSucc(root);
  if (tg.nodes[entry].succs.size() != 2) {
    msg = "entry fan-out is not 2";
    return false;
  }
  auto pick = [&](int n, bool barrier) {
    for (int s : tg.nodes[n].succs) {
      bool isBar = tg.nodes[s].name.rfind("bar", 0) == 0;
      if (isBar == barrier)
        return s;
    }
    return -1;
  };
  int body1 = pick(entry, false), bar1 = pick(entry, true);
  int mid = soleSucc(bar1);
  int body2 = pick(mid, false), bar2 = pick(mid, true);
  int last = soleSucc(bar2);
  int term = tg.terminal;

  struct Want {
    int node;
    PhaseInterval in, out;
  };
  std::vector<Want> want = {
      {root, pi(0, 0), pi(0, 0)},  {entry, pi(0, 0), pi(1, 1)},
      {body1, pi(1, 1), pi(1, 1)}, {bar1, pi(1, 1), pi(2, 2)},
      {mid, pi(2, 2), pi(2, 2)},   {body2, pi(2, 2), pi(2, 2)},
      {bar2, pi(2, 2), pi(3, 3)},  {last, pi(3, 3), pi(3, 3)},
      {term, pi(3, 3), pi(4, 4)},
  };
  for (const auto &w : want) {
    if (w.node < 0) {
      msg = "navigation failed";
      return false;
    }
    if (!(r.in[w.node] == w.in) || !(r.out[w.node] == w.out)) {
      msg = "node " + tg.nodes[w.node].name + " has " + r.in[w.node].str() +
            "/" + r.out[w.node].str();
      return false;
    }
  }
  if (ms >= 1000.0) {
    msg = "took " + std::to_string(ms) + " ms";
    return false;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "9 interval pairs exact in %.1f ms", ms);
  msg = buf;
  return true;
}

// ---- criterion 2: the nowait kernel races, the barriered twin does not ----

bool criterion2(std::string &msg) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisResult racy = analyzeFile(corpusPath("drb013_nowait.c"));
  AnalysisResult fixed = analyzeFile(corpusPath("drb013_fixed.c"));
  double ms = msSince(t0);

  if (racy.races.size() != 1) {
    msg = "nowait kernel reported " + std::to_string(racy.races.size()) +
          " races";
    return false;
  }
  const RaceReport &r = racy.races[0];
  if (r.var != "a" || r.kind != RaceKind::WriteRead ||
      r.source.line != 14 || r.sink.line != 18) {
    msg = "wrong race: " + r.var + " " + r.source.str() + " -> " +
          r.sink.str();
    return false;
  }
  if (!fixed.races.empty()) {
    msg = "barriered kernel reported " + std::to_string(fixed.races.size()) +
          " races";
    return false;
  }
  if (ms >= 1000.0) {
    msg = "took " + std::to_string(ms) + " ms";
    return false;
  }
  char buf[112];
  std::snprintf(buf, sizeof buf,
                "one write/read race with nowait, none without, %.1f ms", ms);
  msg = buf;
  return true;
}

// ---- criterion 3: byte-exact monochrome race report -----------------------

bool criterion3(std::string &msg) {
  std::string path = corpusPath("sections_race.c");
  AnalysisResult res = analyzeFile(path);
  if (res.races.size() != 1) {
    msg = "expected exactly one race";
    return false;
  }
  ReportOptions opts;
  opts.color = false;
  std::string got = formatRaces(res.races, res.lines, opts);
  std::string want = "Data Race detected.\n"
                     "Source : " + path + ":10:11\n"
                     "Sink : " + path + ":12:11\n"
                     "==============\n"
                     " 9 :     {\n"
                     ">> 10 :         { x = 1; }\n"
                     "11 : #pragma omp section\n"
                     ">> 12 :         { x = 2; }\n"
                     "13 :     }\n"
                     "==============\n";
  if (got != want) {
    msg = "report differs from the golden block";
    return false;
  }
  msg = "report matches the golden block byte for byte";
  return true;
}

// ---- criterion 4: the lattice property suite runs at scale ----------------

bool criterion4(std::string &msg) {
  std::string out = runProcess(std::string(LATTICE_BIN) + " 2>&1");
  // doctest prints: [doctest] assertions: N | N passed | M failed |
  auto pos = out.find("assertions:");
  long asserts = -1, failed = -1;
  if (pos != std::string::npos)
    std::sscanf(out.c_str() + pos, "assertions: %ld", &asserts);
  auto fpos = out.find("passed |");
  if (fpos != std::string::npos)
    std::sscanf(out.c_str() + fpos, "passed | %ld failed", &failed);
  if (asserts < 10000 || failed != 0) {
    msg = "lattice suite: " + std::to_string(asserts) + " assertions, " +
          std::to_string(failed) + " failed";
    return false;
  }
  msg = std::to_string(asserts) + " lattice property assertions, all passing";
  return true;
}

// ---- criterion 5: solver vs path enumeration on random loop-free graphs ---

bool criterion5(std::string &msg) {
  std::mt19937 rng(7041);
  int graphs = 0;
  for (int trial = 0; trial < 150; ++trial) {
    PhaseGraph g = randomDag(rng);
    auto oracle = pathBounds(g);
    PiaResult r = runPia(g);
    for (int n = 0; n < g.size(); ++n) {
      if (!oracle[n].reachable) {
        if (!r.in[n].isBottom()) {
          msg = "unreachable node has non-bottom interval";
          return false;
        }
        continue;
      }
      if (!(r.in[n] == pi(oracle[n].lo, oracle[n].hi))) {
        msg = "graph " + std::to_string(trial) + " node " + std::to_string(n) +
              ": solver " + r.in[n].str() + " oracle [" +
              std::to_string(oracle[n].lo) + "," + std::to_string(oracle[n].hi) +
              "]";
        return false;
      }
    }
    ++graphs;
  }
  if (graphs < 100) {
    msg = "only " + std::to_string(graphs) + " graphs checked";
    return false;
  }
  msg = std::to_string(graphs) +
        " random loop-free graphs match exhaustive path enumeration";
  return true;
}

// ---- criterion 6: loop acceleration vs unrolled ground truth --------------

bool criterion6(std::string &msg) {
  std::mt19937 rng(90125);
  int loops = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LoopGraph lg = randomLoop(rng);
    PiaResult r = runPia(lg.g);
    Unrolled u = unroll(lg, lg.tc);
    auto pb = pathBounds(u.g);
    PhaseInterval truth = PhaseInterval::bottom();
    for (int h : u.headerCopies)
      truth = join(truth, pi(pb[h].lo, pb[h].hi));
    if (!(r.in[lg.header] == truth)) {
      msg = "loop " + std::to_string(trial) + " (tc=" +
            std::to_string(lg.tc) + "): header " + r.in[lg.header].str() +
            " vs unrolled " + truth.str();
      return false;
    }
    ++loops;
  }
  if (loops < 100) {
    msg = "only " + std::to_string(loops) + " loops checked";
    return false;
  }
  msg = std::to_string(loops) +
        " random counted loops match their unrolled ground truth";
  return true;
}

// ---- criterion 7: the kernel corpus scores perfect precision and recall ---

bool criterion7(std::string &msg) {
  std::vector<ManifestEntry> entries;
  try {
    entries = loadManifest(corpusPath("manifest.tsv"));
  } catch (const ManifestParseError &e) {
    msg = e.what();
    return false;
  }
  if (entries.size() < 20) {
    msg = "only " + std::to_string(entries.size()) + " kernels";
    return false;
  }
  std::int64_t tp = 0, fp = 0, tn = 0, fn = 0;
  std::string corpusText;
  for (const auto &e : entries) {
    AnalysisResult res = analyzeFile(e.path);
    if (res.parseError || !res.covered) {
      msg = e.path + " did not analyze cleanly";
      return false;
    }
    corpusText += readFile(e.path);
    bool reported = !res.races.empty();
    if (e.racy && reported)
      ++tp;
    else if (e.racy)
      ++fn;
    else if (reported)
      ++fp;
    else
      ++tn;
  }
  Metrics m = computeMetrics(tp, fp, tn, fn);
  if (!(m.precision == Rational::make(1, 1)) ||
      !(m.recall == Rational::make(1, 1))) {
    msg = "precision " + m.precision.str() + ", recall " + m.recall.str();
    return false;
  }
  const char *constructs[] = {
      "#pragma omp parallel", "#pragma omp for",  "nowait",
      "#pragma omp single",   "#pragma omp master", "#pragma omp sections",
      "#pragma omp critical (", "#pragma omp critical\n",
      "#pragma omp atomic",   "#pragma omp barrier", "reduction(",
      "private(",             "firstprivate(",    "lastprivate(",
      "shared(",              "threadprivate(",
  };
  for (const char *c : constructs)
    if (corpusText.find(c) == std::string::npos) {
      msg = std::string("construct missing from corpus: ") + c;
      return false;
    }
  msg = std::to_string(entries.size()) +
        " kernels, precision 1, recall 1, all constructs present";
  return true;
}

// ---- criterion 8: confusion-matrix ratios are exact rationals -------------

bool criterion8(std::string &msg) {
  Metrics m = computeMetrics(10, 2, 8, 1);
  struct Want {
    const char *name;
    Rational got, want;
  };
  Want want[] = {
      {"precision", m.precision, Rational::make(5, 6)},
      {"recall", m.recall, Rational::make(10, 11)},
      {"accuracy", m.accuracy, Rational::make(6, 7)},
      {"f1", m.f1, Rational::make(20, 23)},
      {"tpr", m.tpr, Rational::make(10, 11)},
      {"fpr", m.fpr, Rational::make(1, 5)},
      {"tnr", m.tnr, Rational::make(4, 5)},
      {"fnr", m.fnr, Rational::make(1, 11)},
      {"lr+", m.positiveLikelihood, Rational::make(50, 11)},
      {"lr-", m.negativeLikelihood, Rational::make(5, 44)},
      {"dor", m.diagnosticOdds, Rational::make(40, 1)},
  };
  for (const auto &w : want)
    if (!(w.got == w.want)) {
      msg = std::string(w.name) + " = " + w.got.str() + ", want " +
            w.want.str();
      return false;
    }
  msg = "all 11 ratios exact on the tp=10 fp=2 tn=8 fn=1 matrix";
  return true;
}

// ---- criterion 9: emitted graphs parse and mirror the task graph ----------

bool criterion9(std::string &msg) {
  std::vector<ManifestEntry> entries;
  try {
    entries = loadManifest(corpusPath("manifest.tsv"));
  } catch (const ManifestParseError &e) {
    msg = e.what();
    return false;
  }
  int checked = 0;
  for (const auto &e : entries) {
    AnalysisResult res = analyzeFile(e.path);
    if (!res.pipeline) {
      msg = e.path + " did not produce a pipeline";
      return false;
    }
    const TaskGraph &tg = res.pipeline->tg;
    std::string dot = emitDot(tg, res.pipeline->pia, kDefaultPhaseBound);
    DotGraph g;
    try {
      g = parseDot(dot);
    } catch (const DotParseError &err) {
      msg = e.path + ": " + err.what();
      return false;
    }
    size_t edges = 0;
    for (const auto &n : tg.nodes)
      edges += n.succs.size();
    if (g.nodes.size() != tg.nodes.size() || g.edges.size() != edges) {
      msg = e.path + ": dot has " + std::to_string(g.nodes.size()) + "/" +
            std::to_string(g.edges.size()) + " nodes/edges, graph has " +
            std::to_string(tg.nodes.size()) + "/" + std::to_string(edges);
      return false;
    }
    ++checked;
  }
  msg = std::to_string(checked) +
        " kernel graphs parse and match node/edge counts";
  return true;
}

// ---- criterion 10: end-to-end runs are byte-identical ---------------------

bool criterion10(std::string &msg) {
  std::string checkCmd = std::string(CHECK_BIN) + " " +
                         corpusPath("sections_nowait.c") + " " +
                         corpusPath("critical_different_names.c") +
                         " 2>&1";
  std::string benchCmd =
      std::string(CHECK_BIN) + " bench " + corpusPath("manifest.tsv") + " 2>&1";
  std::string a1 = runProcess(checkCmd), a2 = runProcess(checkCmd);
  std::string b1 = runProcess(benchCmd), b2 = runProcess(benchCmd);
  if (a1 != a2 || a1.empty()) {
    msg = "check output differs between runs";
    return false;
  }
  if (b1 != b2 || b1.empty()) {
    msg = "bench output differs between runs";
    return false;
  }
  msg = "check and bench outputs are byte-identical across runs";
  return true;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *title;
    std::function<bool(std::string &)> fn;
  };
  std::vector<Criterion> all = {
      {1, "two-single kernel phase intervals", criterion1},
      {2, "nowait kernel race appears and disappears", criterion2},
      {3, "monochrome race report golden", criterion3},
      {4, "lattice property suite at scale", criterion4},
      {5, "solver matches path enumeration", criterion5},
      {6, "acceleration matches unrolled loops", criterion6},
      {7, "corpus precision and recall", criterion7},
      {8, "exact confusion-matrix ratios", criterion8},
      {9, "task graph dot output well-formed", criterion9},
      {10, "deterministic output", criterion10},
  };
  int failures = 0;
  for (auto &c : all) {
    std::string msg;
    bool ok = false;
    try {
      ok = c.fn(msg);
    } catch (const std::exception &e) {
      msg = std::string("exception: ") + e.what();
    }
    if (!ok)
      ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " ("
              << c.title << "): " << msg << "\n";
  }
  return failures;
}
