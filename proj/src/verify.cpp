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

#include "lenslab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

#include "lenslab/arith.hpp"
#include "lenslab/error.hpp"
#include "lenslab/lattice.hpp"

namespace lenslab {

namespace {

constexpr std::string_view kFlatAlternating = "flat_alternating";
constexpr std::string_view kConstruction = "construction_agreement";
constexpr std::string_view kN2 = "n2";
constexpr std::string_view kAlphaBound = "alpha_bound";
constexpr std::string_view kAlphaTwo = "alpha_two";
constexpr std::string_view kDs1 = "ds1";
constexpr std::string_view kAdjacentTail = "adjacent_tail";
constexpr std::string_view kKk1 = "kk1";
constexpr std::string_view kCountBound = "count_bound";
constexpr std::string_view kThirdFourth = "third_fourth";
constexpr std::string_view kK2Window = "k2_window";
constexpr std::string_view kClassifySmall = "classify_small";
constexpr std::string_view kNonLSpaceGenus = "nonlspace_genus";
constexpr std::string_view kDifference = "difference_closed_form";
constexpr std::string_view kZeroRuns = "zero_runs";
constexpr std::string_view kTraversable = "traversable";
constexpr std::string_view kPointSymmetry = "point_symmetry";
constexpr std::string_view kTorusStrip = "torus_strip";

Finding Make(std::string_view id, Status s, std::string detail = {}) {
  return {std::string(id), s, std::move(detail)};
}

Finding Verdict(std::string_view id, bool ok, std::string detail) {
  return Make(id, ok ? Status::kPass : Status::kFail, std::move(detail));
}

std::string Str(std::int64_t v) { return std::to_string(v); }

std::string Seq(const std::vector<std::int64_t>& v) { return FormatSequence(v); }

bool IsTypeA(Source s) { return s != Source::kISTFormula; }

struct NamedPoly {
  const char* name;
  LaurentPoly poly;
};

const std::vector<NamedPoly>& SmallGenusList() {
  static const std::vector<NamedPoly> list = {
      {"T(2,3)", TorusPolynomial(2, 3)},  {"T(2,5)", TorusPolynomial(2, 5)},
      {"T(2,7)", TorusPolynomial(2, 7)},  {"T(3,4)", TorusPolynomial(3, 4)},
      {"T(2,9)", TorusPolynomial(2, 9)},  {"T(3,5)", TorusPolynomial(3, 5)},
      {"T(2,11)", TorusPolynomial(2, 11)}, {"Pr(-2,3,7)", PretzelPolynomial()},
  };
  return list;
}

std::string Describe(const LaurentPoly& poly) {
  if (auto m = TorusMatch(poly)) {
    return "T(" + Str(m->first) + "," + Str(m->second) + ")";
  }
  if (poly == PretzelPolynomial()) return "Pr(-2,3,7)";
  return ToText(poly);
}

bool OneOf(const LaurentPoly& poly, std::initializer_list<LaurentPoly> list) {
  return std::find(list.begin(), list.end(), poly) != list.end();
}

}  // namespace

std::string_view StatusName(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkip: return "skip";
  }
  return "unknown";
}

std::string_view BucketName(Bucket b) {
  switch (b) {
    case Bucket::kT2n: return "T2n";
    case Bucket::kForbidden: return "Forbidden";
    case Bucket::kSpecial: return "Special";
    case Bucket::kGeneric: return "Generic";
  }
  return "unknown";
}

std::size_t VerificationReport::Count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [&](const Finding& f) { return f.status == s; }));
}

const Finding* VerificationReport::Get(std::string_view check_id) const {
  for (const auto& f : findings) {
    if (f.check_id == check_id) return &f;
  }
  return nullptr;
}

const std::vector<std::string_view>& RegisteredChecks() {
  static const std::vector<std::string_view> ids = {
      kFlatAlternating, kConstruction, kN2,          kAlphaBound,
      kAlphaTwo,        kDs1,          kAdjacentTail, kKk1,
      kCountBound,      kThirdFourth,  kK2Window,     kClassifySmall,
      kNonLSpaceGenus,  kDifference,   kZeroRuns,     kTraversable,
      kPointSymmetry,   kTorusStrip,
  };
  return ids;
}

LaurentPoly PretzelPolynomial() {
  return LaurentPoly(-5, {1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1});
}

std::optional<std::pair<std::int64_t, std::int64_t>> TorusMatch(
    const LaurentPoly& poly) {
  if (poly.IsZero() || !poly.IsSymmetric()) return std::nullopt;
  const std::int64_t d = poly.max_exp();
  if (d < 1) return std::nullopt;
  for (std::int64_t r = 2; (r - 1) * (r - 1) <= 2 * d; ++r) {
    if ((2 * d) % (r - 1) != 0) continue;
    std::int64_t s = 2 * d / (r - 1) + 1;
    if (s <= r || Gcd(r, s) != 1) continue;
    if (TorusPolynomial(r, s) == poly) return std::pair(r, s);
  }
  return std::nullopt;
}

Finding CheckN2(const NonZeroProfile& pr) {
  if (pr.degree < 1 || pr.r < 1) {
    return Make(kN2, Status::kSkip, "trivial polynomial");
  }
  return Verdict(kN2, pr.n(2) == pr.degree - 1,
                 "n2 = " + Str(pr.n(2)) + ", d = " + Str(pr.degree));
}

Finding CheckAlphaBound(const SurgeryParameter& sp, const NonZeroProfile& pr,
                        const LaurentPoly& poly) {
  const std::int64_t bound = std::max(sp.k, sp.k2_abs());
  if (pr.alpha + 1 < bound) {
    return Make(kAlphaBound, Status::kFail,
                "alpha + 1 = " + Str(pr.alpha + 1) + " < " + Str(bound));
  }
  const std::int64_t d1 = pr.adjacent.front();
  for (std::int64_t ds : pr.adjacent) {
    std::int64_t width = d1 - ds + 1;
    if ((width == sp.k || width == sp.k2_abs()) && poly.Coeff(ds - 1) != 0) {
      return Make(kAlphaBound, Status::kFail,
                  "coefficient of t^" + Str(ds - 1) + " is nonzero");
    }
  }
  return Make(kAlphaBound, Status::kPass,
              "alpha = " + Str(pr.alpha) + ", max{k,|k2|} = " + Str(bound));
}

Finding CheckAlphaTwo(const NonZeroProfile& pr, const LaurentPoly& poly) {
  if (pr.alpha != 2) return Make(kAlphaTwo, Status::kSkip, "alpha != 2");
  return Verdict(kAlphaTwo, poly == TorusPolynomial(2, 3),
                 "alpha = 2 with " + Describe(poly));
}

Finding CheckDs1(const SurgeryParameter& sp, const NonZeroProfile& pr) {
  const std::int64_t d1 = pr.adjacent.front();
  auto hit = [&](std::int64_t shift) {
    for (std::int64_t ds : pr.adjacent) {
      if (ds == d1 - shift || ds == d1 - shift + 1) return true;
    }
    return false;
  };
  bool ok = hit(sp.k) && hit(sp.k2_abs());
  return Verdict(kDs1, ok,
                 "AS = " + Seq(pr.adjacent) + ", k = " + Str(sp.k) +
                     ", |k2| = " + Str(sp.k2_abs()));
}

Finding CheckAdjacentTail(const SurgeryParameter& sp, const NonZeroProfile& pr) {
  const std::int64_t d1 = pr.adjacent.front();
  for (std::int64_t ds : pr.adjacent) {
    if (ds == d1 - sp.k + 1 || ds == d1 - sp.k2_abs() + 1) {
      if (pr.alpha != d1 - ds) {
        return Make(kAdjacentTail, Status::kFail,
                    "d_s1 = " + Str(ds) + " but alpha = " + Str(pr.alpha));
      }
    }
  }
  const std::size_t s = pr.adjacent.size();
  if (2 * s + 1 > pr.ns.size()) {
    return Make(kAdjacentTail, Status::kPass, "adjacent region covers NS");
  }
  std::int64_t gap = pr.n(2 * s - 1) - pr.n(2 * s);
  if (gap == 2 && pr.n(2) - pr.n(3) == 1 && pr.n(2 * s) - pr.n(2 * s + 1) != 1) {
    return Make(kAdjacentTail, Status::kFail,
                "n_2s - n_2s+1 = " + Str(pr.n(2 * s) - pr.n(2 * s + 1)));
  }
  return Make(kAdjacentTail, Status::kPass, "tail gap " + Str(gap));
}

Finding CheckKk1(const SurgeryParameter& sp, const NonZeroProfile& pr) {
  if (sp.k2_abs() != sp.k + 1) return Make(kKk1, Status::kSkip, "|k2| != k+1");
  return Verdict(kKk1, pr.alpha == sp.k,
                 "alpha = " + Str(pr.alpha) + ", k = " + Str(sp.k));
}

Finding CheckCountBound(const SurgeryParameter& sp, const NonZeroProfile& pr) {
  const std::int64_t bound = std::max(sp.k, sp.k2_abs());
  return Verdict(kCountBound, bound <= 2 * pr.r + 1,
                 "max{k,|k2|} = " + Str(bound) + ", 2r+1 = " + Str(2 * pr.r + 1));
}

Finding CheckThirdFourth(const NonZeroProfile& pr, Source source) {
  if (pr.ns.size() < 4) {
    return Make(kThirdFourth, Status::kSkip, "fewer than four nonzero terms");
  }
  if (pr.adjacent.size() < 2) {
    return Make(kThirdFourth, Status::kFail, "no second adjacent entry");
  }
  const std::int64_t d2 = pr.adjacent[1];
  const std::int64_t n3 = pr.n(3), n4 = pr.n(4);
  const std::int64_t gap = n3 - n4;
  bool ok = n3 == d2 && gap >= 1 && gap <= 3 && pr.degree > d2 + 1;
  if (IsTypeA(source) && gap == 3) ok = false;
  return Verdict(kThirdFourth, ok,
                 "(n3,n4) = (" + Str(n3) + "," + Str(n4) + "), d2 = " + Str(d2));
}

WindowClassification ClassifyK2Window(const SurgeryParameter& sp,
                                      const LaurentPoly& poly,
                                      const NonZeroProfile& pr, Source source) {
  const std::int64_t g = pr.degree;
  const std::int64_t vals[] = {sp.k, sp.k2_abs()};
  auto any = [&](std::initializer_list<std::int64_t> targets) {
    for (std::int64_t v : vals) {
      for (std::int64_t t : targets) {
        if (v == t) return true;
      }
    }
    return false;
  };
  WindowClassification wc;
  const std::string where = "g = " + Str(g) + ", k = " + Str(sp.k) +
                            ", |k2| = " + Str(sp.k2_abs());
  if (any({2 * g, 2 * g + 1})) {
    wc.bucket = Bucket::kT2n;
    bool ok = poly == TorusPolynomial(2, 2 * g + 1) && sp.k == 2 &&
              (sp.p == 4 * g + 1 || sp.p == 4 * g + 3);
    wc.finding = Verdict(kK2Window, ok, "T2n: " + where + ", " + Describe(poly));
  } else if (any({2 * g - 1})) {
    wc.bucket = Bucket::kForbidden;
    wc.finding = Make(kK2Window, Status::kFail, "Forbidden: " + where);
  } else if (any({2 * g - 2, 2 * g - 3, 2 * g - 4})) {
    wc.bucket = Bucket::kSpecial;
    if (!IsTypeA(source)) {
      wc.finding = Make(kK2Window, Status::kSkip,
                        "Special window is stated for type-(A) knots");
    } else {
      bool ok = OneOf(poly, {TorusPolynomial(3, 4), PretzelPolynomial()});
      wc.finding =
          Verdict(kK2Window, ok, "Special: " + where + ", " + Describe(poly));
    }
  } else {
    wc.bucket = Bucket::kGeneric;
    wc.finding = Make(kK2Window, Status::kPass, "Generic: " + where);
  }
  return wc;
}

Finding ClassifySmall(const LaurentPoly& poly, const NonZeroProfile& pr) {
  std::vector<std::string> applied;
  bool ok = true;
  if (pr.degree <= 5) {
    applied.push_back("g<=5");
    const auto& list = SmallGenusList();
    ok = ok && std::any_of(list.begin(), list.end(), [&](const NamedPoly& n) {
           return n.poly == poly;
         });
  }
  if (pr.ns.size() == 5) {
    applied.push_back("5 terms");
    ok = ok && OneOf(poly, {TorusPolynomial(2, 5), TorusPolynomial(3, 4)});
  }
  if (pr.ns.size() == 7) {
    applied.push_back("7 terms");
    ok = ok && OneOf(poly, {TorusPolynomial(2, 7), TorusPolynomial(3, 5),
                            TorusPolynomial(4, 5)});
  }
  if (applied.empty()) {
    return Make(kClassifySmall, Status::kSkip, "g > 5 and not 5 or 7 terms");
  }
  std::string lists;
  for (const auto& a : applied) lists += (lists.empty() ? "" : ", ") + a;
  return Verdict(kClassifySmall, ok, lists + ": " + Describe(poly));
}

namespace {

LaurentPoly IndependentConstruction(const SurgeryParameter& sp, Source source) {
  return source == Source::kTorusReduction ? TypeAPoly(sp) : YamkaRep(sp);
}

Finding GuardLattice(std::string_view id, const std::function<Finding()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    Status s = e.code() == ErrorCode::kWindowTooSmall ? Status::kSkip
                                                      : Status::kFail;
    return Make(id, s, std::string(ErrorCodeName(e.code())) + ": " + e.what());
  }
}

}  // namespace

VerificationReport RunAll(const SurgeryParameter& sp, Source source) {
  LaurentPoly poly;
  switch (source) {
    case Source::kTorusReduction: poly = YamkaRep(sp); break;
    case Source::kTypeAFormula: poly = TypeAPoly(sp); break;
    case Source::kISTFormula:
      if (!sp.trivial()) poly = IstPoly(sp.p, sp.k);
      break;
  }
  return RunAll(sp, poly, source);
}

VerificationReport RunAll(const SurgeryParameter& sp, const LaurentPoly& poly,
                          Source source) {
  VerificationReport rep;
  rep.param = sp;
  rep.source = source;
  rep.poly_text = ToText(poly);
  auto skip_rest = [&](const std::string& reason) {
    for (std::string_view id : RegisteredChecks()) {
      if (!rep.Get(id)) rep.findings.push_back(Make(id, Status::kSkip, reason));
    }
  };
  if (sp.trivial()) {
    skip_rest("trivial parameter (k = 1)");
    return rep;
  }
  const bool fa = poly.IsSymmetric() && FlatAlternating(poly);
  if (!fa) {
    if (IsTypeA(source)) {
      skip_rest("screened out: not flat/alternating");
    } else {
      rep.findings.push_back(Make(kFlatAlternating, Status::kFail,
                                  "not flat/alternating: " + ToText(poly)));
      skip_rest("polynomial is not flat/alternating");
    }
    return rep;
  }
  const NonZeroProfile pr = Profile(poly);
  rep.findings.push_back(
      Make(kFlatAlternating, Status::kPass, "NS_h = " + Seq(pr.ns_h)));

  if (IsTypeA(source)) {
    LaurentPoly other = IndependentConstruction(sp, source);
    rep.findings.push_back(Verdict(kConstruction, other == poly,
                                   "independent construction gives " +
                                       ToText(other)));
  } else {
    bool ok = poly.EvaluateAtOne() == 1 && poly.IsSymmetric();
    rep.findings.push_back(Verdict(kConstruction, ok,
                                   "value at 1 is " + Str(poly.EvaluateAtOne())));
  }
  rep.findings.push_back(CheckN2(pr));
  rep.findings.push_back(CheckAlphaBound(sp, pr, poly));
  rep.findings.push_back(IsTypeA(source)
                             ? CheckAlphaTwo(pr, poly)
                             : Make(kAlphaTwo, Status::kSkip,
                                    "stated for admissible type-(A) knots"));
  rep.findings.push_back(CheckDs1(sp, pr));
  rep.findings.push_back(CheckAdjacentTail(sp, pr));
  rep.findings.push_back(CheckKk1(sp, pr));
  rep.findings.push_back(CheckCountBound(sp, pr));
  rep.findings.push_back(CheckThirdFourth(pr, source));
  rep.findings.push_back(ClassifyK2Window(sp, poly, pr, source).finding);
  rep.findings.push_back(ClassifySmall(poly, pr));
  if (IsTypeA(source)) {
    rep.findings.push_back(
        Make(kNonLSpaceGenus, Status::kSkip, "stated for type-(B) knots"));
  } else if (LSpaceClassify(sp.p, pr.degree) != LSpaceClass::kNonLSpace) {
    rep.findings.push_back(
        Make(kNonLSpaceGenus, Status::kSkip, "ambient manifold is an L-space"));
  } else {
    rep.findings.push_back(Verdict(kNonLSpaceGenus, pr.degree >= 6,
                                   "non-L-space with g = " + Str(pr.degree)));
  }

  if (IsTypeA(source)) {
    CoefficientGrid grid = AGrid(sp, poly, DefaultAWindow(sp));
    rep.findings.push_back(GuardLattice(kDifference, [&] {
      const Window& w = grid.window();
      for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
        for (std::int64_t i = w.i_min; i < w.i_max; ++i) {
          std::int64_t x = i + j * sp.k;
          int closed = DaClosedForm(sp, x);
          if (grid.Diff(i, j) != closed) {
            return Make(kDifference, Status::kFail,
                        "dA differs at (" + Str(i) + "," + Str(j) + ")");
          }
          if (closed == -1 && DaClosedForm(sp, x + sp.e * sp.k) != 1) {
            return Make(kDifference, Status::kFail,
                        "dA(x) = -1 without dA(x+ek) = 1 at x = " + Str(x));
          }
        }
      }
      return Make(kDifference, Status::kPass, "dA matches on the window");
    }));
    rep.findings.push_back(Verdict(kZeroRuns, ZeroRunsTwoValued(sp),
                                   "zero runs " + Seq(ZeroRuns(sp))));
    std::optional<NonZeroCurve> curve;
    rep.findings.push_back(GuardLattice(kTraversable, [&] {
      curve = Trace(grid);
      return Verdict(kTraversable, CheckTraversable(grid, *curve),
                     Str(static_cast<std::int64_t>(curve->components.size())) +
                         " components in the window");
    }));
    rep.findings.push_back(
        curve ? Verdict(kPointSymmetry, CheckPointSymmetry(grid, *curve),
                        "about the window centre")
              : Make(kPointSymmetry, Status::kSkip, "curve not traced"));
    rep.findings.push_back(GuardLattice(kTorusStrip, [&] {
      CoefficientGrid sg = AGrid(sp, poly, DefaultStripWindow(sp));
      bool empty = CheckTorusStrip(sg, Trace(sg));
      auto match = TorusMatch(poly);
      std::string detail = std::string("strip ") +
                           (empty ? "empty" : "occupied") + ", polynomial " +
                           (match ? "is" : "is not") + " a torus polynomial";
      return Verdict(kTorusStrip, empty == match.has_value(), detail);
    }));
  } else {
    IstExpansion x = ExpandIst(sp.p, sp.k);
    // Place the polynomial under test where the raw quotient sits.
    std::int64_t centre = (x.quotient.min_exp() + x.quotient.max_exp()) / 2;
    LaurentPoly raw = poly.Shifted(centre);
    if (x.quotient.LeadingCoeff() < 0) raw = raw.Negated();
    CoefficientGrid grid = BGrid(sp.p, sp.k, raw, DefaultBWindow(sp.p, sp.k));
    rep.findings.push_back(GuardLattice(kDifference, [&] {
      const Window& w = grid.window();
      for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
        for (std::int64_t i = w.i_min; i < w.i_max; ++i) {
          if (grid.Diff(i, j) != DbClosedForm(x, i, j)) {
            return Make(kDifference, Status::kFail,
                        "dB differs at (" + Str(i) + "," + Str(j) + ")");
          }
        }
      }
      return Make(kDifference, Status::kPass, "dB matches on the window");
    }));
    rep.findings.push_back(
        Make(kZeroRuns, Status::kSkip, "stated for the A-function"));
    std::optional<NonZeroCurve> curve;
    rep.findings.push_back(GuardLattice(kTraversable, [&] {
      curve = Trace(grid);
      return Verdict(kTraversable, CheckTraversable(grid, *curve),
                     Str(static_cast<std::int64_t>(curve->components.size())) +
                         " components in the window");
    }));
    rep.findings.push_back(
        curve ? Verdict(kPointSymmetry, CheckPointSymmetry(grid, *curve),
                        "about the window centre")
              : Make(kPointSymmetry, Status::kSkip, "curve not traced"));
    rep.findings.push_back(
        Make(kTorusStrip, Status::kSkip, "stated for type-(A) knots"));
  }
  return rep;
}

unsigned SweepThreads(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("LENSLAB_THREADS")) {
      n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  return std::max(1u, n);
}

std::vector<VerificationReport> Sweep(std::int64_t p_max, Source source,
                                      unsigned threads) {
  if (p_max < 3) {
    throw Error(ErrorCode::kInvalidArgument, "p_max must be at least 3");
  }
  const std::vector<SurgeryParameter> params = Enumerate(p_max);
  std::vector<VerificationReport> out(params.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t n = next++; n < params.size(); n = next++) {
      out[n] = RunAll(params[n], source);
    }
  };
  const unsigned count =
      std::min<unsigned>(SweepThreads(threads),
                         static_cast<unsigned>(std::max<std::size_t>(1, params.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<VerificationReport> SelfTest() {
  std::vector<VerificationReport> out;
  // Pretzel parameter fed the T(3,4) polynomial.
  out.push_back(RunAll(Normalize(19, 7), TorusPolynomial(3, 4),
                       Source::kTypeAFormula));
  // Trefoil parameter fed t^3 - 1 + t^-3.
  out.push_back(RunAll(Normalize(5, 2), LaurentPoly::FromTerms({{3, 1}, {0, -1}, {-3, 1}}),
                       Source::kTypeAFormula));
  // Table 1 row (10,3) with its g column corrupted to the trefoil.
  out.push_back(RunAll(Normalize(10, 3), TorusPolynomial(2, 3),
                       Source::kISTFormula));
  // A non-alternating IST polynomial.
  out.push_back(RunAll(Normalize(12, 5), LaurentPoly(-1, {1, 1, 1}),
                       Source::kISTFormula));
  return out;
}

}  // namespace lenslab
