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

#include "lenslab/lenslab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "lenslab/alexander.hpp"
#include "lenslab/catalog.hpp"
#include "lenslab/error.hpp"
#include "lenslab/lattice.hpp"
#include "lenslab/verify.hpp"

struct lenslab_knot {
  lenslab::KnotClass kc;
};

struct lenslab_report {
  lenslab::VerificationReport rep;
};

struct lenslab_sweep {
  std::vector<lenslab_report> reports;
};

namespace {

using lenslab::ErrorCode;

static_assert(static_cast<int>(ErrorCode::kGoldenMismatch) ==
              LENSLAB_GOLDEN_MISMATCH);
static_assert(static_cast<int>(ErrorCode::kWindowTooSmall) ==
              LENSLAB_WINDOW_TOO_SMALL);
static_assert(static_cast<int>(ErrorCode::kInvalidArgument) ==
              LENSLAB_INVALID_ARGUMENT);

thread_local std::string last_error;

template <typename Fn>
lenslab_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const lenslab::Error& e) {
    last_error = e.what();
    return static_cast<lenslab_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return LENSLAB_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return LENSLAB_INTERNAL;
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void RequireOut(const void* out) {
  if (out == nullptr) {
    throw lenslab::Error(ErrorCode::kInvalidArgument, "null output pointer");
  }
}

lenslab::Source ToSource(lenslab_source s) {
  switch (s) {
    case LENSLAB_SOURCE_TORUS: return lenslab::Source::kTorusReduction;
    case LENSLAB_SOURCE_TYPE_A: return lenslab::Source::kTypeAFormula;
    case LENSLAB_SOURCE_IST: return lenslab::Source::kISTFormula;
  }
  throw lenslab::Error(ErrorCode::kInvalidArgument, "unknown source");
}

}  // namespace

extern "C" {

const char* lenslab_status_name(lenslab_status status) {
  switch (status) {
    case LENSLAB_OK: return "Ok";
    case LENSLAB_INTERNAL: return "Internal";
    default:
      if (status >= LENSLAB_INVALID_ARGUMENT &&
          status <= LENSLAB_GOLDEN_MISMATCH) {
        return lenslab::ErrorCodeName(static_cast<ErrorCode>(status)).data();
      }
      return "Unknown";
  }
}

const char* lenslab_last_error(void) { return last_error.c_str(); }

void lenslab_string_free(char* s) { std::free(s); }

lenslab_status lenslab_normalize(int64_t p, int64_t k, lenslab_param* out) {
  return Guard([&] {
    RequireOut(out);
    lenslab::SurgeryParameter sp = lenslab::Normalize(p, k);
    *out = {sp.p, sp.k, sp.k2, sp.q, sp.e, sp.c, sp.m};
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_param_json(int64_t p, int64_t k, char** out) {
  return Guard([&] {
    RequireOut(out);
    *out = Dup(lenslab::ToJson(lenslab::Normalize(p, k)).dump());
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_knot_create(int64_t p, int64_t k, lenslab_source source,
                                   lenslab_knot** out) {
  return Guard([&] {
    RequireOut(out);
    auto knot = std::make_unique<lenslab_knot>();
    knot->kc = lenslab::MakeKnotClass(p, k, ToSource(source));
    *out = knot.release();
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_knot_create_lift(int64_t p, int64_t k, int64_t l,
                                        lenslab_knot** out) {
  return Guard([&] {
    RequireOut(out);
    lenslab::SurgeryParameter sp = lenslab::Normalize(p, k);
    auto knot = std::make_unique<lenslab_knot>();
    knot->kc = lenslab::MakeKnotClass(sp, lenslab::YamkaRep(sp, l),
                                      lenslab::Source::kTorusReduction);
    *out = knot.release();
    return LENSLAB_OK;
  });
}

void lenslab_knot_destroy(lenslab_knot* knot) { delete knot; }

lenslab_status lenslab_knot_text(const lenslab_knot* knot, char** out) {
  return Guard([&] {
    RequireOut(knot);
    RequireOut(out);
    *out = Dup(lenslab::ToText(knot->kc.poly));
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_knot_json(const lenslab_knot* knot, char** out) {
  return Guard([&] {
    RequireOut(knot);
    RequireOut(out);
    *out = Dup(lenslab::ToJson(knot->kc).dump());
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_knot_summary(const lenslab_knot* knot, char** out) {
  return Guard([&] {
    RequireOut(knot);
    RequireOut(out);
    const auto& kc = knot->kc;
    std::ostringstream os;
    os << "poly: " << lenslab::ToText(kc.poly) << "\n";
    if (!kc.profile) {
      os << "coefficients: min_exp " << kc.poly.min_exp() << ", "
         << lenslab::FormatSequence(kc.poly.coeffs()) << "\n";
      *out = Dup(os.str());
      last_error = "polynomial is not flat/alternating";
      return LENSLAB_NOT_FLAT_ALTERNATING;
    }
    const auto& pr = *kc.profile;
    os << "NS_h: " << lenslab::FormatSequence(pr.ns_h) << "\n"
       << "g: " << pr.degree << "\n"
       << "alpha: " << pr.alpha << "\n"
       << "AS: " << lenslab::FormatSequence(pr.adjacent) << "\n";
    *out = Dup(os.str());
    return LENSLAB_OK;
  });
}

int lenslab_knot_flat_alternating(const lenslab_knot* knot) {
  return knot != nullptr && knot->kc.profile.has_value();
}

int64_t lenslab_knot_genus(const lenslab_knot* knot) {
  return knot == nullptr ? -1 : lenslab::Genus(knot->kc.poly);
}

lenslab_status lenslab_knot_coefficients(const lenslab_knot* knot,
                                         int64_t* min_exp,
                                         const int64_t** coeffs,
                                         size_t* count) {
  return Guard([&] {
    RequireOut(knot);
    RequireOut(min_exp);
    RequireOut(coeffs);
    RequireOut(count);
    *min_exp = knot->kc.poly.min_exp();
    *coeffs = knot->kc.poly.coeffs().data();
    *count = knot->kc.poly.coeffs().size();
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_trace(int64_t p, int64_t k, lenslab_grid_kind kind,
                             const lenslab_window* window,
                             lenslab_format format, char** out) {
  return Guard([&] {
    RequireOut(out);
    lenslab::SurgeryParameter sp = lenslab::Normalize(p, k);
    lenslab::LaurentPoly poly = lenslab::TypeAPoly(sp);
    if (kind == LENSLAB_GRID_AUTO) {
      kind = lenslab::FlatAlternating(poly) ? LENSLAB_GRID_A : LENSLAB_GRID_B;
    }
    std::optional<lenslab::Window> w;
    if (window != nullptr) {
      w = lenslab::Window{window->i_min, window->i_max, window->j_min,
                          window->j_max};
    }
    std::optional<lenslab::CoefficientGrid> grid;
    if (kind == LENSLAB_GRID_A) {
      grid = lenslab::AGrid(sp, poly, w ? *w : lenslab::DefaultAWindow(sp));
    } else if (kind == LENSLAB_GRID_B) {
      grid = lenslab::BGrid(p, k, w ? *w : lenslab::DefaultBWindow(p, k));
    } else {
      throw lenslab::Error(ErrorCode::kInvalidArgument, "unknown grid kind");
    }
    lenslab::RequireTraversableWindow(*grid);
    lenslab::NonZeroCurve curve = lenslab::Trace(*grid);
    *out = Dup(format == LENSLAB_FORMAT_SVG ? lenslab::RenderSvg(*grid, curve)
                                            : lenslab::RenderAscii(*grid, curve));
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_verify(int64_t p, int64_t k, lenslab_source source,
                              lenslab_report** out) {
  return Guard([&] {
    RequireOut(out);
    auto rep = std::make_unique<lenslab_report>();
    rep->rep = lenslab::RunAll(lenslab::Normalize(p, k), ToSource(source));
    *out = rep.release();
    return LENSLAB_OK;
  });
}

void lenslab_report_destroy(lenslab_report* report) { delete report; }

lenslab_status lenslab_report_json(const lenslab_report* report, char** out) {
  return Guard([&] {
    RequireOut(report);
    RequireOut(out);
    *out = Dup(lenslab::ToJson(report->rep).dump());
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_report_tsv(const lenslab_report* report, char** out) {
  return Guard([&] {
    RequireOut(report);
    RequireOut(out);
    *out = Dup(lenslab::ReportTsvLine(report->rep));
    return LENSLAB_OK;
  });
}

const char* lenslab_report_tsv_header(void) {
  static const std::string header = lenslab::ReportTsvHeader();
  return header.c_str();
}

void lenslab_report_counts(const lenslab_report* report, size_t* pass,
                           size_t* fail, size_t* skip) {
  if (report == nullptr) return;
  if (pass) *pass = report->rep.Count(lenslab::Status::kPass);
  if (fail) *fail = report->rep.Count(lenslab::Status::kFail);
  if (skip) *skip = report->rep.Count(lenslab::Status::kSkip);
}

lenslab_status lenslab_verify_sweep(int64_t p_max, lenslab_source source,
                                    unsigned threads, lenslab_sweep** out) {
  return Guard([&] {
    RequireOut(out);
    auto sweep = std::make_unique<lenslab_sweep>();
    for (auto& r : lenslab::Sweep(p_max, ToSource(source), threads)) {
      sweep->reports.push_back({std::move(r)});
    }
    *out = sweep.release();
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_self_test(lenslab_sweep** out) {
  return Guard([&] {
    RequireOut(out);
    auto sweep = std::make_unique<lenslab_sweep>();
    for (auto& r : lenslab::SelfTest()) sweep->reports.push_back({std::move(r)});
    *out = sweep.release();
    return LENSLAB_OK;
  });
}

size_t lenslab_sweep_size(const lenslab_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->reports.size();
}

const lenslab_report* lenslab_sweep_at(const lenslab_sweep* sweep,
                                       size_t index) {
  if (sweep == nullptr || index >= sweep->reports.size()) return nullptr;
  return &sweep->reports[index];
}

void lenslab_sweep_destroy(lenslab_sweep* sweep) { delete sweep; }

lenslab_status lenslab_table_tsv(int which, char** out) {
  return Guard([&] {
    RequireOut(out);
    *out = Dup(lenslab::GenerateTableTsv(which));
    return LENSLAB_OK;
  });
}

lenslab_status lenslab_table_compare(int which, const char* golden,
                                     char** diff) {
  return Guard([&] {
    RequireOut(golden);
    RequireOut(diff);
    auto cells = lenslab::CompareTsv(golden, lenslab::GenerateTableTsv(which));
    *diff = Dup(lenslab::FormatMismatches(cells));
    if (cells.empty()) return LENSLAB_OK;
    last_error = std::to_string(cells.size()) + " cells differ from golden";
    return LENSLAB_GOLDEN_MISMATCH;
  });
}

}  // extern "C"
