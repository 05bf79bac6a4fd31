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

#include "lenslab/alexander.hpp"

#include <algorithm>
#include <string>

#include "lenslab/arith.hpp"
#include "lenslab/error.hpp"

namespace lenslab {

std::string_view SourceName(Source s) {
  switch (s) {
    case Source::kTorusReduction: return "torus";
    case Source::kTypeAFormula: return "type-a";
    case Source::kISTFormula: return "ist";
  }
  return "unknown";
}

std::int64_t CoprimeLift(const SurgeryParameter& sp) {
  std::int64_t l = Rem1p(sp.k2, sp.p);
  for (std::int64_t t = 0; t <= sp.k; ++t) {
    if (Gcd(sp.k, l) == 1) return l;
    l = CheckedAdd(l, sp.p);
  }
  throw Error(ErrorCode::kNoCoprimeLift,
              "no lift of k^-1 coprime to k for p = " + std::to_string(sp.p) +
                  ", k = " + std::to_string(sp.k));
}

LaurentPoly YamkaRep(const SurgeryParameter& sp) {
  return YamkaRep(sp, CoprimeLift(sp));
}

LaurentPoly YamkaRep(const SurgeryParameter& sp, std::int64_t l) {
  if (l < 1 || Mod(CheckedMul(sp.k, l), sp.p) != 1 % sp.p) {
    throw Error(ErrorCode::kInvalidArgument,
                "l = " + std::to_string(l) + " is not a positive inverse of k");
  }
  return SmallestSymmetricRep(ReduceCyclic(TorusPolynomial(sp.k, l), sp.p));
}

std::int64_t TypeACoefficient(const SurgeryParameter& sp, std::int64_t i) {
  const Interval iv(sp.k2);
  const std::int64_t qi = sp.q_inverse();
  const std::int64_t base = CheckedAdd(CheckedMul(sp.k, i), sp.c);
  std::int64_t count = 0;
  for (std::int64_t j = 1; j <= sp.k; ++j) {
    if (iv.Contains(Lar(-CheckedMul(qi, Mod(j + base, sp.p)), sp.p))) ++count;
  }
  return -sp.m + sp.e * count;
}

LaurentPoly TypeAPoly(const SurgeryParameter& sp) {
  const std::int64_t p = sp.p;
  const std::int64_t h = (p - 1) / 2;
  const std::int64_t half = p / 2;
  std::vector<std::int64_t> v(static_cast<std::size_t>(2 * half + 1), 0);
  std::int64_t sum = 0;
  for (std::int64_t i = -h; i <= h; ++i) {
    std::int64_t a = TypeACoefficient(sp, i);
    v[static_cast<std::size_t>(i + half)] = a;
    sum += a;
  }
  // Delta(1) = 1 leaves a deficit of 2 exactly when 2g = p.
  if (p % 2 == 0 && sum == -1) {
    v.front() = 1;
    v.back() = 1;
  }
  return LaurentPoly(-half, std::move(v));
}

IstExpansion ExpandIst(std::int64_t p, std::int64_t k) {
  if (!(1 < k && k < p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "IST formula needs 1 < k < p, got p = " + std::to_string(p) +
                    ", k = " + std::to_string(k));
  }
  if (Gcd(p, k) != 1) {
    throw Error(ErrorCode::kNotCoprime, "IST formula needs gcd(p, k) = 1");
  }
  IstExpansion x;
  x.p = p;
  x.k = k;
  x.q = Rem1p(-CheckedMul(k, k), p);
  x.q_prime = InvMod(x.q, p);
  std::vector<std::int64_t> rem(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    rem[static_cast<std::size_t>(i)] = Rem1p(CheckedMul(x.q_prime, i), p);
  }
  std::vector<std::int64_t> sorted(rem.begin() + 1, rem.end());
  std::sort(sorted.begin(), sorted.end());
  std::int64_t lo = 0, hi = 0;
  for (std::int64_t i = 0; i < k; ++i) {
    std::int64_t r = rem[static_cast<std::size_t>(i)];
    std::int64_t phi = std::lower_bound(sorted.begin(), sorted.end(), r) -
                       sorted.begin();
    std::int64_t ex = CheckedSub(CheckedMul(phi, p), CheckedMul(r, k));
    x.exponents.push_back(ex);
    lo = i == 0 ? ex : std::min(lo, ex);
    hi = i == 0 ? ex : std::max(hi, ex);
  }
  std::vector<std::int64_t> nc(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::int64_t ex : x.exponents) ++nc[static_cast<std::size_t>(ex - lo)];
  x.numerator = LaurentPoly(lo, std::move(nc));
  // N / (1 + ... + t^{k-1}) = N (t - 1) / (t^k - 1), a sparse division.
  LaurentPoly lifted = x.numerator * LaurentPoly::FromTerms({{1, 1}, {0, -1}});
  x.quotient = ExactDiv(lifted, LaurentPoly::FromTerms({{k, 1}, {0, -1}}));
  x.poly = Symmetrize(x.quotient);
  return x;
}

LaurentPoly IstPoly(std::int64_t p, std::int64_t k) { return ExpandIst(p, k).poly; }

std::int64_t Genus(const LaurentPoly& poly) { return poly.max_exp(); }

std::string_view LSpaceClassName(LSpaceClass c) {
  switch (c) {
    case LSpaceClass::kLSpace: return "LSpace";
    case LSpaceClass::kNonLSpace: return "NonLSpace";
    case LSpaceClass::kBoundary: return "Boundary";
  }
  return "unknown";
}

LSpaceClass LSpaceClassify(std::int64_t p, std::int64_t genus) {
  if (2 * genus < p + 1) return LSpaceClass::kLSpace;
  if (2 * genus > p + 1) return LSpaceClass::kNonLSpace;
  return LSpaceClass::kBoundary;
}

LSpaceClass LSpaceClassifyIst(std::int64_t p, std::int64_t k) {
  return LSpaceClassify(p, Genus(IstPoly(p, k)));
}

KnotClass MakeKnotClass(const SurgeryParameter& sp, const LaurentPoly& poly,
                        Source source) {
  KnotClass kc{sp, poly, std::nullopt, source};
  if (poly.IsSymmetric() && FlatAlternating(poly)) kc.profile = Profile(poly);
  return kc;
}

KnotClass MakeKnotClass(std::int64_t p, std::int64_t k, Source source) {
  SurgeryParameter sp = Normalize(p, k);
  switch (source) {
    case Source::kTorusReduction:
      return MakeKnotClass(sp, YamkaRep(sp), source);
    case Source::kTypeAFormula:
      return MakeKnotClass(sp, TypeAPoly(sp), source);
    case Source::kISTFormula:
      return MakeKnotClass(sp, IstPoly(p, Mod(k, p)), source);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown source");
}

}  // namespace lenslab
