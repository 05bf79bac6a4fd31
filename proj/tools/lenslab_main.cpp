// Copyright 2026 The lenslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through lenslab.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lenslab/lenslab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFlatAlternating = 3;
constexpr int kExitWindow = 4;
constexpr int kExitGolden = 5;
constexpr int kExitError = 6;

class Owned {
 public:
  Owned() = default;
  ~Owned() { lenslab_string_free(s_); }
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  char** out() { return &s_; }
  std::string str() const { return s_ == nullptr ? std::string() : s_; }

 private:
  char* s_ = nullptr;
};

int Report(lenslab_status st) {
  std::cerr << "lenslab: " << lenslab_status_name(st) << ": "
            << lenslab_last_error() << "\n";
  switch (st) {
    case LENSLAB_INVALID_ARGUMENT:
    case LENSLAB_NOT_COPRIME:
    case LENSLAB_DEGENERATE:
      return kExitUsage;
    case LENSLAB_NOT_FLAT_ALTERNATING:
      return kExitNotFlatAlternating;
    case LENSLAB_WINDOW_TOO_SMALL:
      return kExitWindow;
    case LENSLAB_GOLDEN_MISMATCH:
      return kExitGolden;
    default:
      return kExitError;
  }
}

lenslab_source ParseSource(const std::string& s) {
  if (s == "torus") return LENSLAB_SOURCE_TORUS;
  if (s == "ist") return LENSLAB_SOURCE_IST;
  return LENSLAB_SOURCE_TYPE_A;
}

std::string DataDir() {
  if (const char* env = std::getenv("LENSLAB_DATA_DIR")) return env;
  return LENSLAB_DEFAULT_DATA_DIR;
}

struct PolyArgs {
  int64_t p = 0;
  int64_t k = 0;
  std::string method = "type-a";
  std::optional<int64_t> lift;
  bool json = false;
};

int RunPoly(const PolyArgs& a) {
  lenslab_knot* knot = nullptr;
  lenslab_status st =
      a.lift ? lenslab_knot_create_lift(a.p, a.k, *a.lift, &knot)
             : lenslab_knot_create(a.p, a.k, ParseSource(a.method), &knot);
  if (st != LENSLAB_OK) return Report(st);
  Owned text;
  if (a.json) {
    st = lenslab_knot_json(knot, text.out());
  } else {
    st = lenslab_knot_summary(knot, text.out());
  }
  int fa = lenslab_knot_flat_alternating(knot);
  lenslab_knot_destroy(knot);
  std::cout << text.str();
  if (a.json) std::cout << "\n";
  if (st == LENSLAB_OK && !fa) st = LENSLAB_NOT_FLAT_ALTERNATING;
  if (st == LENSLAB_NOT_FLAT_ALTERNATING) {
    std::cerr << "lenslab: polynomial is not flat/alternating\n";
    return kExitNotFlatAlternating;
  }
  return st == LENSLAB_OK ? kExitOk : Report(st);
}

struct TraceArgs {
  int64_t p = 0;
  int64_t k = 0;
  std::string kind = "auto";
  std::string window;
  std::string format = "ascii";
};

bool ParseWindowArg(const std::string& text, lenslab_window* w) {
  std::istringstream in(text);
  int64_t v[4];
  char sep;
  for (int n = 0; n < 4; ++n) {
    if (!(in >> v[n])) return false;
    if (n < 3 && !(in >> sep && sep == ':')) return false;
  }
  if (in >> sep) return false;
  *w = {v[0], v[1], v[2], v[3]};
  return w->i_min <= w->i_max && w->j_min <= w->j_max;
}

int RunTrace(const TraceArgs& a) {
  lenslab_grid_kind kind = LENSLAB_GRID_AUTO;
  if (a.kind == "a") kind = LENSLAB_GRID_A;
  if (a.kind == "b") kind = LENSLAB_GRID_B;
  lenslab_window w{};
  const lenslab_window* wp = nullptr;
  if (!a.window.empty()) {
    if (!ParseWindowArg(a.window, &w)) {
      std::cerr << "lenslab: bad window '" << a.window
                << "', expected imin:imax:jmin:jmax\n";
      return kExitUsage;
    }
    wp = &w;
  }
  Owned out;
  lenslab_status st = lenslab_trace(
      a.p, a.k, kind, wp,
      a.format == "svg" ? LENSLAB_FORMAT_SVG : LENSLAB_FORMAT_ASCII, out.out());
  if (st != LENSLAB_OK) return Report(st);
  std::cout << out.str();
  return kExitOk;
}

struct VerifyArgs {
  std::optional<int64_t> pmax;
  std::optional<int64_t> p;
  std::optional<int64_t> k;
  std::string source = "type-a";
  bool tsv = false;
  bool self_test = false;
  unsigned threads = 0;
};

int EmitSweep(const lenslab_sweep* sweep, bool tsv, bool self_test) {
  size_t total_pass = 0, total_fail = 0, total_skip = 0, failed_reports = 0;
  size_t n = lenslab_sweep_size(sweep);
  if (tsv) std::cout << lenslab_report_tsv_header() << "\n";
  for (size_t i = 0; i < n; ++i) {
    const lenslab_report* r = lenslab_sweep_at(sweep, i);
    size_t pass = 0, fail = 0, skip = 0;
    lenslab_report_counts(r, &pass, &fail, &skip);
    total_pass += pass;
    total_fail += fail;
    total_skip += skip;
    if (fail > 0) ++failed_reports;
    Owned line;
    lenslab_status st = tsv ? lenslab_report_tsv(r, line.out())
                            : lenslab_report_json(r, line.out());
    if (st != LENSLAB_OK) return Report(st);
    std::cout << line.str() << "\n";
  }
  nlohmann::json summary = {{"reports", n},
                            {"pass", total_pass},
                            {"fail", total_fail},
                            {"skip", total_skip},
                            {"failed_reports", failed_reports}};
  if (tsv) {
    std::cerr << "summary: " << summary.dump() << "\n";
  } else {
    std::cout << nlohmann::json{{"summary", summary}}.dump() << "\n";
  }
  if (self_test) {
    // Every corrupted case must be caught.
    return failed_reports == n ? kExitOk : kExitCheckFailed;
  }
  return total_fail == 0 ? kExitOk : kExitCheckFailed;
}

int RunVerify(const VerifyArgs& a) {
  lenslab_sweep* sweep = nullptr;
  lenslab_status st;
  if (a.self_test) {
    st = lenslab_self_test(&sweep);
  } else if (a.pmax) {
    st = lenslab_verify_sweep(*a.pmax, ParseSource(a.source), a.threads,
                              &sweep);
  } else {
    if (!a.p || !a.k) {
      std::cerr << "lenslab: verify needs --pmax N or P K\n";
      return kExitUsage;
    }
    lenslab_report* r = nullptr;
    st = lenslab_verify(*a.p, *a.k, ParseSource(a.source), &r);
    if (st != LENSLAB_OK) return Report(st);
    size_t fail = 0;
    lenslab_report_counts(r, nullptr, &fail, nullptr);
    Owned line;
    st = a.tsv ? lenslab_report_tsv(r, line.out())
               : lenslab_report_json(r, line.out());
    lenslab_report_destroy(r);
    if (st != LENSLAB_OK) return Report(st);
    if (a.tsv) std::cout << lenslab_report_tsv_header() << "\n";
    std::cout << line.str() << "\n";
    return fail == 0 ? kExitOk : kExitCheckFailed;
  }
  if (st != LENSLAB_OK) return Report(st);
  int rc = EmitSweep(sweep, a.tsv, a.self_test);
  lenslab_sweep_destroy(sweep);
  return rc;
}

struct TablesArgs {
  int which = 1;
  std::string golden;
  bool no_check = false;
};

int RunTables(const TablesArgs& a) {
  Owned tsv;
  lenslab_status st = lenslab_table_tsv(a.which, tsv.out());
  if (st != LENSLAB_OK) return Report(st);
  std::cout << tsv.str();
  if (a.no_check) return kExitOk;
  std::string path = a.golden.empty() ? DataDir() + "/golden/table" +
                                            std::to_string(a.which) + ".tsv"
                                      : a.golden;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "lenslab: cannot read golden file " << path << "\n";
    return kExitError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Owned diff;
  st = lenslab_table_compare(a.which, buf.str().c_str(), diff.out());
  if (st == LENSLAB_GOLDEN_MISMATCH) {
    std::cerr << diff.str();
    return Report(st);
  }
  if (st != LENSLAB_OK) return Report(st);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lenslab: lens space surgery knot toolkit"};
  app.require_subcommand(1);

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "Alexander polynomial of a parameter");
  poly_cmd->add_option("P", poly.p, "lens order p")->required();
  poly_cmd->add_option("K", poly.k, "surgery parameter k")->required();
  poly_cmd->add_option("--method", poly.method, "torus | type-a | ist")
      ->check(CLI::IsMember({"torus", "type-a", "ist"}));
  poly_cmd->add_option("--lift", poly.lift, "explicit torus lift l");
  poly_cmd->add_flag("--json", poly.json, "print JSON");

  TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("trace", "Trace the non-zero curve");
  trace_cmd->add_option("P", trace.p)->required();
  trace_cmd->add_option("K", trace.k)->required();
  trace_cmd->add_option("--kind", trace.kind, "auto | a | b")
      ->check(CLI::IsMember({"auto", "a", "b"}));
  trace_cmd->add_option("--window", trace.window, "imin:imax:jmin:jmax");
  trace_cmd->add_option("--format", trace.format, "ascii | svg")
      ->check(CLI::IsMember({"ascii", "svg"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the structural checks");
  verify_cmd->add_option("P", verify.p);
  verify_cmd->add_option("K", verify.k);
  verify_cmd->add_option("--pmax", verify.pmax, "sweep every p <= N")
      ->check(CLI::Range(int64_t{2}, int64_t{100000}));
  verify_cmd->add_option("--source", verify.source, "type-a | torus | ist")
      ->check(CLI::IsMember({"torus", "type-a", "ist"}));
  verify_cmd->add_flag("--tsv", verify.tsv, "TSV instead of JSON lines");
  verify_cmd->add_flag("--self-test", verify.self_test,
                       "run against deliberately corrupted inputs");
  verify_cmd->add_option("--threads", verify.threads, "worker threads");

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Regenerate a catalog table");
  tables_cmd->add_option("--which", tables.which, "1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));
  tables_cmd->add_option("--golden", tables.golden, "golden TSV to compare");
  tables_cmd->add_flag("--no-check", tables.no_check, "skip the comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (*poly_cmd) return RunPoly(poly);
  if (*trace_cmd) return RunTrace(trace);
  if (*verify_cmd) return RunVerify(verify);
  return RunTables(tables);
}
