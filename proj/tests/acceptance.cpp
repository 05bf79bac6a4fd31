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

// Prints one PASS/FAIL line per acceptance criterion. Exits nonzero only when
// a criterion fails that is not listed in kKnownFailures.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lenslab/alexander.hpp"
#include "lenslab/catalog.hpp"
#include "lenslab/lattice.hpp"
#include "lenslab/params.hpp"
#include "lenslab/verify.hpp"

using namespace lenslab;

namespace {

using V = std::vector<std::int64_t>;

// Criterion 8's strip clause: cable knots have an empty strip but are not
// torus knots. See README.
const std::set<int> kKnownFailures = {8};

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void Expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 12) notes.push_back(what);
    }
  }
};

std::string Tag(const SurgeryParameter& sp) {
  return "(" + std::to_string(sp.p) + "," + std::to_string(sp.k) + ")";
}

std::vector<SurgeryParameter> FlatAlternatingParams(std::int64_t p_max) {
  std::vector<SurgeryParameter> out;
  for (const auto& sp : Enumerate(p_max)) {
    if (!sp.trivial() && FlatAlternating(TypeAPoly(sp))) out.push_back(sp);
  }
  return out;
}

std::string ReadGolden(int which) {
  std::ifstream in(std::string(LENSLAB_GOLDEN_DIR) + "/table" +
                   std::to_string(which) + ".tsv");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome TrefoilAgreement() {
  Outcome o;
  const LaurentPoly trefoil(-1, {1, -1, 1});
  o.Expect(TorusPolynomial(2, 3) == trefoil, "torus_polynomial(2,3)");
  o.Expect(TypeAPoly(Normalize(5, 2)) == trefoil, "type_a_poly(5,2)");
  o.Expect(TypeAPoly(Normalize(7, 2)) == trefoil, "type_a_poly(7,2)");
  o.Expect(Normalize(7, 2).k2 == -3, "k2(7,2)");
  o.Expect(IstPoly(5, 2) == trefoil, "ist_poly(5,2)");
  return o;
}

Outcome Pretzel() {
  Outcome o;
  SurgeryParameter sp = Normalize(19, 7);
  const V ns{5, 4, 2, 1, 0, -1, -2, -4, -5};
  for (const LaurentPoly& f : {TypeAPoly(sp), YamkaRep(sp, 11)}) {
    NonZeroProfile pr = Profile(f);
    o.Expect(pr.ns == ns, "NS " + FormatSequence(pr.ns));
    o.Expect(pr.alpha == 7, "alpha " + std::to_string(pr.alpha));
    o.Expect(CheckAlphaBound(sp, pr, f).status == Status::kPass, "alpha_bound");
    o.Expect(CheckDs1(sp, pr).status == Status::kPass, "ds1");
    o.Expect(CheckThirdFourth(pr, Source::kTypeAFormula).status ==
                 Status::kPass,
             "third_fourth");
  }
  return o;
}

Outcome TableOne() {
  Outcome o;
  auto rows = GenerateTable(1);
  o.Expect(rows.size() == 13, "row count " + std::to_string(rows.size()));
  o.Expect(CompareTsv(ReadGolden(1), TableToTsv(1, rows)).empty(),
           "golden cells differ");
  std::set<std::pair<std::int64_t, std::int64_t>> listed, non;
  for (const auto& r : rows) {
    LaurentPoly f = IstPoly(r.p, r.k);
    o.Expect(Genus(f) == r.g, "g at " + std::to_string(r.p));
    o.Expect(Profile(f).ns_h == r.ns_h, "NS_h at " + std::to_string(r.p));
    SurgeryParameter sp = Normalize(r.p, r.k);
    listed.insert({sp.p, sp.k});
  }
  for (const auto& sp : Enumerate(23)) {
    if (sp.trivial()) continue;
    if (LSpaceClassifyIst(sp.p, sp.k) == LSpaceClass::kNonLSpace) {
      non.insert({sp.p, sp.k});
    }
  }
  o.Expect(listed == non, "NonLSpace set differs from the listed rows");
  return o;
}

Outcome TablesTwoThree() {
  Outcome o;
  std::size_t total = 0;
  for (int which : {2, 3}) {
    auto rows = GenerateTable(which);
    total += rows.size();
    auto diff = CompareTsv(ReadGolden(which), TableToTsv(which, rows));
    o.Expect(diff.empty(), "table " + std::to_string(which) + ": " +
                               FormatMismatches(diff));
    for (const auto& r : rows) {
      LaurentPoly f = IstPoly(r.p, r.k);
      NonZeroProfile pr = Profile(f);
      std::string t = "(" + std::to_string(r.p) + "," + std::to_string(r.k) + ")";
      o.Expect(Genus(f) == r.g && r.g <= 30, "g " + t);
      o.Expect(Normalize(r.p, r.k).k2_abs() == r.k2_abs, "k2 " + t);
      o.Expect(pr.ns_h == r.ns_h && pr.alpha == r.alpha, "profile " + t);
      if (which == 2) o.Expect(pr.adjacent == r.adjacent, "AS " + t);
    }
  }
  o.Expect(total == 39, "row count " + std::to_string(total));
  o.Expect(Profile(IstPoly(12, 5)).alpha == 14, "(12,5) alpha");
  o.Expect(Genus(IstPoly(16, 7)) == 24, "(16,7) g");
  o.Expect(Genus(IstPoly(20, 9)) == 40, "(20,9) g");
  NonZeroProfile r45 = Profile(IstPoly(45, 7));
  o.Expect(r45.alpha == 13 && r45.degree == 29 &&
               r45.ns_h == V{29, 28, 22, 21, 16, 14, 9, 7, 3, 0},
           "(45,7) row");
  return o;
}

Outcome TorusCoincidences() {
  Outcome o;
  struct Row {
    std::int64_t p, k, r, s;
  };
  const Row rows[] = {{10, 3, 3, 7},  {12, 5, 5, 7},  {17, 5, 5, 7},
                      {13, 5, 5, 8},  {15, 4, 4, 11}, {17, 3, 3, 11},
                      {19, 3, 3, 13}, {17, 4, 4, 13}, {20, 9, 9, 11},
                      {21, 8, 8, 13}, {23, 5, 5, 9}};
  for (const Row& row : rows) {
    LaurentPoly f = IstPoly(row.p, row.k);
    auto m = TorusMatch(f);
    bool ok = m && m->first == row.r && m->second == row.s &&
              Profile(f).ns == Profile(TorusPolynomial(row.r, row.s)).ns;
    o.Expect(ok, "K(" + std::to_string(row.p) + "," + std::to_string(row.k) +
                     ") vs T(" + std::to_string(row.r) + "," +
                     std::to_string(row.s) + ")");
  }
  o.Expect(!TorusMatch(IstPoly(23, 7)).has_value(), "(23,7) matched a torus knot");
  return o;
}

Outcome OracleSweep() {
  Outcome o;
  for (const auto& sp : Enumerate(200)) {
    LaurentPoly oracle = YamkaRep(sp);
    if (sp.trivial() || !FlatAlternating(oracle)) continue;
    o.Expect(TypeAPoly(sp) == oracle, Tag(sp));
  }
  return o;
}

Outcome TheoremSweep() {
  Outcome o;
  for (const auto& sp : FlatAlternatingParams(100)) {
    LaurentPoly f = TypeAPoly(sp);
    NonZeroProfile pr = Profile(f);
    std::int64_t d = pr.degree, k2 = sp.k2_abs();
    std::int64_t kmax = std::max(sp.k, k2);
    const std::string t = Tag(sp);
    if (pr.term_count() > 1) o.Expect(pr.n(2) == d - 1, "n2 " + t);
    o.Expect(pr.alpha + 1 >= kmax, "alpha bound " + t);
    o.Expect(kmax <= 2 * pr.r + 1, "count bound " + t);
    o.Expect(CheckThirdFourth(pr, Source::kTypeAFormula).status !=
                 Status::kFail,
             "third/fourth " + t);
    o.Expect(k2 != 2 * d - 1, "|k2| = 2g-1 " + t);
    if (k2 == sp.k + 1) o.Expect(pr.alpha == sp.k, "kk1 " + t);
    if (k2 == 2 * d || k2 == 2 * d + 1) {
      o.Expect(f == TorusPolynomial(2, 2 * d + 1) && sp.k == 2 &&
                   (sp.p == 4 * d + 1 || sp.p == 4 * d + 3),
               "T(2,n) " + t);
    }
  }
  return o;
}

Outcome LatticeSuite() {
  Outcome o;
  std::vector<std::string> strip;
  for (const auto& sp : FlatAlternatingParams(60)) {
    const std::string t = Tag(sp);
    CoefficientGrid g = AGrid(sp);
    const Window& w = g.window();
    bool diff_ok = true, lemma_ok = true;
    for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
      for (std::int64_t i = w.i_min; i < w.i_max; ++i) {
        std::int64_t x = i + j * sp.k;
        diff_ok = diff_ok && g.Diff(i, j) == DaClosedForm(sp, x);
        lemma_ok = lemma_ok && (DaClosedForm(sp, x) == -1) ==
                                   (DaClosedForm(sp, x + sp.e * sp.k) == 1);
      }
    }
    o.Expect(diff_ok, "dA " + t);
    o.Expect(lemma_ok, "dA lemma " + t);
    o.Expect(ZeroRunsTwoValued(sp), "zero runs " + t);
    NonZeroCurve c = Trace(g);
    o.Expect(CheckTraversable(g, c), "traversable " + t);
    o.Expect(CheckPointSymmetry(g, c), "point symmetry " + t);
    if (CheckTorusStrip(sp) != TorusMatch(TypeAPoly(sp)).has_value()) {
      strip.push_back(t);
    }
  }
  if (!strip.empty()) {
    std::string list;
    for (const auto& s : strip) list += s;
    o.ok = false;
    o.notes.push_back("torus strip disagrees with torus_match at " +
                      std::to_string(strip.size()) + " cable parameters " +
                      list);
  }
  return o;
}

Outcome ClassificationLists() {
  Outcome o;
  const std::vector<LaurentPoly> small = {
      TorusPolynomial(2, 3), TorusPolynomial(2, 5),  TorusPolynomial(2, 7),
      TorusPolynomial(3, 4), TorusPolynomial(2, 9),  TorusPolynomial(3, 5),
      TorusPolynomial(2, 11), PretzelPolynomial()};
  const std::vector<LaurentPoly> five = {TorusPolynomial(2, 5),
                                         TorusPolynomial(3, 4)};
  const std::vector<LaurentPoly> seven = {
      TorusPolynomial(2, 7), TorusPolynomial(3, 5), TorusPolynomial(4, 5)};
  auto in = [](const std::vector<LaurentPoly>& v, const LaurentPoly& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
  };
  for (const auto& sp : FlatAlternatingParams(100)) {
    LaurentPoly f = TypeAPoly(sp);
    NonZeroProfile pr = Profile(f);
    if (pr.degree <= 5) o.Expect(in(small, f), "g<=5 " + Tag(sp));
    if (pr.term_count() == 5) o.Expect(in(five, f), "5 terms " + Tag(sp));
    if (pr.term_count() == 7) o.Expect(in(seven, f), "7 terms " + Tag(sp));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "trefoil triple agreement", TrefoilAgreement},
      {2, "pretzel reproduction", Pretzel},
      {3, "table 1", TableOne},
      {4, "tables 2-3", TablesTwoThree},
      {5, "torus coincidences", TorusCoincidences},
      {6, "oracle equivalence p<=200", OracleSweep},
      {7, "theorem sweep p<=100", TheoremSweep},
      {8, "lattice suite p<=60", LatticeSuite},
      {9, "classification lists p<=100", ClassificationLists},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s", o.ok ? "PASS" : "FAIL", c.id, c.name);
    if (!o.ok) {
      bool known = kKnownFailures.count(c.id) > 0;
      std::printf(" (%s)", known ? "known" : "unexpected");
      if (!known) ++unexpected;
      for (const auto& n : o.notes) std::printf("\n    %s", n.c_str());
    }
    std::printf("\n");
  }
  return unexpected == 0 ? 0 : 1;
}
