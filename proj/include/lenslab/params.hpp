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

#ifndef LENSLAB_PARAMS_HPP_
#define LENSLAB_PARAMS_HPP_

#include <cstdint>
#include <vector>

namespace lenslab {

// Normalized lens surgery parameter. Invariants: gcd(p,k) = 1, 0 < k < p/2,
// k*k2 = 1 mod p with -p/2 < k2 < p/2, k^2 = -q mod p, e = sgn(k2),
// c = (k+1-p)(k-1)/2, m = (k*k2-1)/p.
struct SurgeryParameter {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t k2 = 0;
  std::int64_t q = 0;
  int e = 1;
  std::int64_t c = 0;
  std::int64_t m = 0;

  bool trivial() const { return k == 1; }
  std::int64_t k2_abs() const { return k2 < 0 ? -k2 : k2; }
  // q^{-1} mod p, equal to rem1p(-k2^2, p).
  std::int64_t q_inverse() const;

  friend bool operator==(const SurgeryParameter&,
                         const SurgeryParameter&) = default;
};

// Picks the representative of {+-k_raw, +-k_raw^{-1}} mod p in (0, p/2).
// Throws kNotCoprime, or kDegenerate for p <= 2.
SurgeryParameter Normalize(std::int64_t p, std::int64_t k_raw);

// The same class seen from the other side: k' = |k2|, k2' = e*k. Satisfies
// every invariant except minimality of k.
SurgeryParameter SwapRoles(const SurgeryParameter& sp);

// Checks every invariant listed on SurgeryParameter.
bool SatisfiesInvariants(const SurgeryParameter& sp);

// All normalized parameters with 3 <= p <= p_max, one per class
// (p, min(k,|k2|)), sorted by (p, k). k = 1 is kept (flagged trivial).
std::vector<SurgeryParameter> Enumerate(std::int64_t p_max);

}  // namespace lenslab

#endif  // LENSLAB_PARAMS_HPP_
