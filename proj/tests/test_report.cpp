#include "doctest.h"

#include "omprace/access.hpp"
#include "omprace/racedetect.hpp"
#include "omprace/report.hpp"

#include "support/dot_checker.hpp"
#include "support/pipeline.hpp"

#include "json.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace omprace;
using testsupport::analyze;
using testsupport::Analysis;

namespace {

std::vector<std::string> splitLines(const std::string &text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    lines.push_back(cur);
  return lines;
}

std::vector<RaceReport> racesOf(const Analysis &a) {
  auto accesses = collectAccesses(a.cfg, a.tg, a.symbols);
  return detectRaces(a.cfg, a.tg, a.pia, accesses, a.symbols, RaceOptions{});
}

// Two unnamed sections racing on a shared scalar; the layout below is load
// bearing: the report excerpt golden depends on the exact columns.
const char *kSectionsRace = "void main()\n"
                            "{\n"
                            "    int x;\n"
                            "\n"
                            "#pragma omp parallel\n"
                            "    {\n"
                            "\n"
                            "#pragma omp sections\n"
                            "    {\n"
                            "        { x = 1; }\n"
                            "#pragma omp section\n"
                            "        { x = 2; }\n"
                            "    }\n"
                            "    }\n"
                            "}\n";

RaceReport fabricateRace(int srcLine, int sinkLine) {
  RaceReport r;
  r.kind = RaceKind::WriteWrite;
  r.var = "v";
  r.source = SourceLoc{"f.c", srcLine, 3};
  r.sink = SourceLoc{"f.c", sinkLine, 5};
  return r;
}

} // namespace

TEST_CASE("race report golden: sections kernel, monochrome") {
  auto a = analyze(kSectionsRace);
  auto races = racesOf(*a);
  REQUIRE(races.size() == 1);
  CHECK(races[0].kind == RaceKind::WriteWrite);
  CHECK(races[0].var == "x");

  ReportOptions opts;
  opts.color = false;
  std::string got = formatRaces(races, splitLines(kSectionsRace), opts);
  std::string want = "Data Race detected.\n"
                     "Source : t.c:10:11\n"
                     "Sink : t.c:12:11\n"
                     "==============\n"
                     " 9 :     {\n"
                     ">> 10 :         { x = 1; }\n"
                     "11 : #pragma omp section\n"
                     ">> 12 :         { x = 2; }\n"
                     "13 :     }\n"
                     "==============\n";
  CHECK(got == want);
}

TEST_CASE("race report golden: color mode wraps racing lines in red") {
  auto a = analyze(kSectionsRace);
  auto races = racesOf(*a);
  REQUIRE(races.size() == 1);

  ReportOptions opts;
  opts.color = true;
  std::string got = formatRaces(races, splitLines(kSectionsRace), opts);
  std::string want = "Data Race detected.\n"
                     "Source : t.c:10:11\n"
                     "Sink : t.c:12:11\n"
                     "==============\n"
                     " 9 :     {\n"
                     "\x1b[31m10 :         { x = 1; }\x1b[0m\n"
                     "11 : #pragma omp section\n"
                     "\x1b[31m12 :         { x = 2; }\x1b[0m\n"
                     "13 :     }\n"
                     "==============\n";
  CHECK(got == want);
  CHECK(got.find(">> ") == std::string::npos);
}

TEST_CASE("excerpt clamps at the first line") {
  std::vector<std::string> lines = {"aa", "bb", "cc", "dd"};
  ReportOptions opts;
  opts.color = false;
  std::string got = formatRaceReport(fabricateRace(1, 2), lines, opts);
  std::string want = "Data Race detected.\n"
                     "Source : f.c:1:3\n"
                     "Sink : f.c:2:5\n"
                     "==============\n"
                     ">> 1 : aa\n"
                     ">> 2 : bb\n"
                     "3 : cc\n"
                     "==============\n";
  CHECK(got == want);
}

TEST_CASE("excerpt clamps at the last line") {
  std::vector<std::string> lines = {"aa", "bb", "cc", "dd"};
  ReportOptions opts;
  opts.color = false;
  std::string got = formatRaceReport(fabricateRace(3, 4), lines, opts);
  std::string want = "Data Race detected.\n"
                     "Source : f.c:3:3\n"
                     "Sink : f.c:4:5\n"
                     "==============\n"
                     "2 : bb\n"
                     ">> 3 : cc\n"
                     ">> 4 : dd\n"
                     "==============\n";
  CHECK(got == want);
}

TEST_CASE("single-line file: excerpt is just that line") {
  std::vector<std::string> lines = {"only"};
  ReportOptions opts;
  opts.color = false;
  std::string got = formatRaceReport(fabricateRace(1, 1), lines, opts);
  std::string want = "Data Race detected.\n"
                     "Source : f.c:1:3\n"
                     "Sink : f.c:1:5\n"
                     "==============\n"
                     ">> 1 : only\n"
                     "==============\n";
  CHECK(got == want);
}

TEST_CASE("line numbers right-align to the widest number in the excerpt") {
  std::vector<std::string> lines(120, "z");
  ReportOptions opts;
  opts.color = false;
  std::string got = formatRaceReport(fabricateRace(99, 101), lines, opts);
  // hi = 102, so every number pads to three columns; the ">> " marker sits
  // outside the padded field.
  CHECK(got.find(" 98 : z\n") != std::string::npos);
  CHECK(got.find(">>  99 : z\n") != std::string::npos);
  CHECK(got.find("100 : z\n") != std::string::npos);
  CHECK(got.find(">> 101 : z\n") != std::string::npos);
  CHECK(got.find("102 : z\n") != std::string::npos);
}

TEST_CASE("formatRaces joins blocks with one blank line") {
  std::vector<std::string> lines = {"aa", "bb", "cc", "dd", "ee", "ff"};
  std::vector<RaceReport> races = {fabricateRace(2, 2), fabricateRace(5, 5)};
  ReportOptions opts;
  opts.color = false;
  std::string got = formatRaces(races, lines, opts);
  auto seam = got.find("==============\n\nData Race detected.\n");
  CHECK(seam != std::string::npos);
  CHECK(got.find("\n\n\n") == std::string::npos);
  CHECK(formatRaces({}, lines, opts).empty());
}

TEST_CASE("emitDot output parses and mirrors the task graph") {
  auto a = analyze(testsupport::kTwoSingles);
  std::string dot = emitDot(a->tg, a->pia, kDefaultPhaseBound);
  testsupport::DotGraph g = testsupport::parseDot(dot);

  CHECK(g.name == "TaskGraph");
  CHECK(g.nodes.size() == a->tg.nodes.size());
  CHECK(g.edges.size() == testsupport::edgeCount(a->tg));

  // Every graph edge appears verbatim, and nothing else does.
  for (const auto &n : a->tg.nodes)
    for (int s : n.succs) {
      std::pair<std::string, std::string> e{"n" + std::to_string(n.id),
                                            "n" + std::to_string(s)};
      CHECK(std::count(g.edges.begin(), g.edges.end(), e) == 1);
    }

  for (const auto &n : a->tg.nodes) {
    auto it = g.nodes.find("n" + std::to_string(n.id));
    REQUIRE(it != g.nodes.end());
    const auto &attrs = it->second;
    std::string wantLabel = n.name + "\\n" +
                            a->pia.in[n.id].str(kDefaultPhaseBound) +
                            "_in " +
                            a->pia.out[n.id].str(kDefaultPhaseBound) +
                            "_out";
    CHECK(attrs.at("label") == wantLabel);
    if (n.id == a->tg.root) {
      CHECK(attrs.at("shape") == "Mdiamond");
      CHECK(!attrs.count("fillcolor"));
    } else if (n.id == a->tg.terminal) {
      CHECK(attrs.at("shape") == "Msquare");
    } else {
      CHECK(attrs.at("style") == "filled");
      CHECK(attrs.at("fillcolor") ==
            (a->tg.multiInstance(n.id) ? "darkgrey" : "lightgrey"));
    }
  }

  // The two single-construct bodies are the only single-instance block nodes.
  int lightgrey = 0;
  for (const auto &[id, attrs] : g.nodes)
    if (attrs.count("fillcolor") && attrs.at("fillcolor") == "lightgrey")
      ++lightgrey;
  CHECK(lightgrey == 2);
}

TEST_CASE("emitDot renders saturated bounds as inf and still parses") {
  auto a = analyze(testsupport::kTwoSingles, /*bound=*/2);
  std::string dot = emitDot(a->tg, a->pia, 2);
  testsupport::DotGraph g = testsupport::parseDot(dot);
  CHECK(g.nodes.size() == a->tg.nodes.size());
  bool sawInf = false;
  for (const auto &[id, attrs] : g.nodes)
    if (attrs.at("label").find("inf") != std::string::npos)
      sawInf = true;
  CHECK(sawInf);
}

TEST_CASE("dot checker rejects malformed documents") {
  using testsupport::parseDot;
  CHECK_THROWS_AS(parseDot("graph G { }"), testsupport::DotParseError);
  CHECK_THROWS_AS(parseDot("digraph G { n0 [x=1] }"),
                  testsupport::DotParseError); // missing ';'
  CHECK_THROWS_AS(parseDot("digraph G { n0 [x=1]; n0 -> n1; }"),
                  testsupport::DotParseError); // n1 undeclared
  CHECK_THROWS_AS(parseDot("digraph G { n0 [x=1]; n0 [y=2]; }"),
                  testsupport::DotParseError); // duplicate node
  CHECK_THROWS_AS(parseDot("digraph G { n0 [x=\"broken]; }"),
                  testsupport::DotParseError); // unterminated string
  CHECK_THROWS_AS(parseDot("digraph G { } trailing"),
                  testsupport::DotParseError);
  testsupport::DotGraph ok =
      parseDot("digraph G {\n  a [k=\"v w\", s=bare];\n  b [k=2];\n"
               "  a -> b;\n  a -> a;\n}\n");
  CHECK(ok.nodes.at("a").at("k") == "v w");
  CHECK(ok.nodes.at("a").at("s") == "bare");
  CHECK(ok.edges.size() == 2);
}

TEST_CASE("race json line has a fixed field order") {
  auto a = analyze(kSectionsRace);
  auto races = racesOf(*a);
  REQUIRE(races.size() == 1);
  std::string line = raceJsonLine(races[0], kDefaultPhaseBound);
  CHECK(line ==
        "{\"kind\":\"race\",\"raceKind\":\"write-write\",\"var\":\"x\","
        "\"source\":{\"file\":\"t.c\",\"line\":10,\"col\":11},"
        "\"sink\":{\"file\":\"t.c\",\"line\":12,\"col\":11},"
        "\"sourcePhase\":\"[1,1]\",\"sinkPhase\":\"[1,1]\"}");
  auto j = nlohmann::json::parse(line);
  CHECK(j["raceKind"] == "write-write");
  CHECK(j["source"]["line"] == 10);
  CHECK(j["sink"]["col"] == 11);
}

TEST_CASE("diagnostic json line carries severity, message, first loc") {
  Diagnostic d;
  d.severity = Severity::Warning;
  d.text = "ignoring unknown clause 'foo'";
  d.locs = {SourceLoc{"k.c", 4, 21}, SourceLoc{"k.c", 9, 1}};
  std::string line = diagnosticJsonLine(d);
  CHECK(line == "{\"kind\":\"warning\",\"message\":\"ignoring unknown clause "
                "'foo'\",\"loc\":{\"file\":\"k.c\",\"line\":4,\"col\":21}}");

  Diagnostic bare;
  bare.severity = Severity::SyntaxError;
  bare.text = "boom";
  std::string line2 = diagnosticJsonLine(bare);
  auto j = nlohmann::json::parse(line2);
  CHECK(j["kind"] == "syntax-error");
  CHECK(!j.contains("loc"));
}
