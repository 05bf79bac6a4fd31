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

#ifndef LENSLAB_ALEXANDER_HPP_
#define LENSLAB_ALEXANDER_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lenslab/laurent.hpp"
#include "lenslab/params.hpp"

namespace lenslab {

enum class Source { kTorusReduction, kTypeAFormula, kISTFormula };

std::string_view SourceName(Source s);

// Smallest l = rem1p(k2, p) + t*p (t >= 0) with gcd(k, l) = 1.
std::int64_t CoprimeLift(const SurgeryParameter& sp);

// Symmetric representative of the torus polynomial T(k, l) folded mod p.
LaurentPoly YamkaRep(const SurgeryParameter& sp);
// Same with a caller-chosen lift; throws kInvalidArgument unless k*l = 1 mod
// p, and kNotCoprime unless gcd(k, l) = 1.
LaurentPoly YamkaRep(const SurgeryParameter& sp, std::int64_t l);

// Coefficient counting formula for type-(A) knots.
std::int64_t TypeACoefficient(const SurgeryParameter& sp, std::int64_t i);
LaurentPoly TypeAPoly(const SurgeryParameter& sp);

struct IstExpansion {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t q = 0;
  std::int64_t q_prime = 0;
  std::vector<std::int64_t> exponents;  // numerator exponent for i = 0..k-1
  LaurentPoly numerator;
  LaurentPoly quotient;  // numerator / (1 + t + ... + t^{k-1}), unsymmetrized
  LaurentPoly poly;      // Symmetrize(quotient)
};

// Requires gcd(p, k) = 1 and 1 < k < p.
IstExpansion ExpandIst(std::int64_t p, std::int64_t k);
LaurentPoly IstPoly(std::int64_t p, std::int64_t k);

std::int64_t Genus(const LaurentPoly& poly);

enum class LSpaceClass { kLSpace, kNonLSpace, kBoundary };

std::string_view LSpaceClassName(LSpaceClass c);
LSpaceClass LSpaceClassify(std::int64_t p, std::int64_t genus);
LSpaceClass LSpaceClassifyIst(std::int64_t p, std::int64_t k);

struct KnotClass {
  SurgeryParameter param;
  LaurentPoly poly;
  std::optional<NonZeroProfile> profile;  // empty unless flat/alternating
  Source source = Source::kTypeAFormula;
};

// For kISTFormula, k is used as given and param holds Normalize(p, k).
KnotClass MakeKnotClass(std::int64_t p, std::int64_t k, Source source);
KnotClass MakeKnotClass(const SurgeryParameter& sp, const LaurentPoly& poly,
                        Source source);

}  // namespace lenslab

#endif  // LENSLAB_ALEXANDER_HPP_
