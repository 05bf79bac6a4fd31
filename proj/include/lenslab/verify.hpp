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

#ifndef LENSLAB_VERIFY_HPP_
#define LENSLAB_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lenslab/alexander.hpp"
#include "lenslab/laurent.hpp"
#include "lenslab/params.hpp"

namespace lenslab {

enum class Status { kPass, kFail, kSkip };

std::string_view StatusName(Status s);

struct Finding {
  std::string check_id;
  Status status = Status::kSkip;
  std::string detail;
};

struct VerificationReport {
  SurgeryParameter param;
  Source source = Source::kTypeAFormula;
  std::string poly_text;
  std::vector<Finding> findings;

  std::size_t Count(Status s) const;
  bool HasFailures() const { return Count(Status::kFail) > 0; }
  const Finding* Get(std::string_view check_id) const;
};

// Check identifiers in report order.
const std::vector<std::string_view>& RegisteredChecks();

enum class Bucket { kT2n, kForbidden, kSpecial, kGeneric };

std::string_view BucketName(Bucket b);

struct WindowClassification {
  Bucket bucket = Bucket::kGeneric;
  Finding finding;
};

// Alexander polynomial of the (-2,3,7) pretzel knot.
LaurentPoly PretzelPolynomial();

// Coprime (r, s), 2 <= r < s, with TorusPolynomial(r, s) == poly.
std::optional<std::pair<std::int64_t, std::int64_t>> TorusMatch(
    const LaurentPoly& poly);

Finding CheckN2(const NonZeroProfile& pr);
Finding CheckAlphaBound(const SurgeryParameter& sp, const NonZeroProfile& pr,
                        const LaurentPoly& poly);
Finding CheckAlphaTwo(const NonZeroProfile& pr, const LaurentPoly& poly);
Finding CheckDs1(const SurgeryParameter& sp, const NonZeroProfile& pr);
Finding CheckAdjacentTail(const SurgeryParameter& sp, const NonZeroProfile& pr);
Finding CheckKk1(const SurgeryParameter& sp, const NonZeroProfile& pr);
Finding CheckCountBound(const SurgeryParameter& sp, const NonZeroProfile& pr);
// Type-(A) sources forbid the gap pattern (d2, d2-3).
Finding CheckThirdFourth(const NonZeroProfile& pr, Source source);
WindowClassification ClassifyK2Window(const SurgeryParameter& sp,
                                      const LaurentPoly& poly,
                                      const NonZeroProfile& pr, Source source);
Finding ClassifySmall(const LaurentPoly& poly, const NonZeroProfile& pr);

// Uses TypeAPoly for kTypeAFormula, YamkaRep for kTorusReduction and
// IstPoly(p, k) for kISTFormula.
VerificationReport RunAll(const SurgeryParameter& sp,
                          Source source = Source::kTypeAFormula);
// Checks a caller-supplied polynomial as if it came from source.
VerificationReport RunAll(const SurgeryParameter& sp, const LaurentPoly& poly,
                          Source source);

// Reports for Enumerate(p_max), sorted by (p, k). threads == 0 reads
// LENSLAB_THREADS, falling back to the hardware concurrency.
std::vector<VerificationReport> Sweep(std::int64_t p_max, Source source,
                                      unsigned threads = 0);

unsigned SweepThreads(unsigned requested);

// Reports on deliberately corrupted inputs; each is expected to fail.
std::vector<VerificationReport> SelfTest();

}  // namespace lenslab

#endif  // LENSLAB_VERIFY_HPP_
