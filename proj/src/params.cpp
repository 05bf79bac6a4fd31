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

#include "lenslab/params.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "lenslab/arith.hpp"
#include "lenslab/error.hpp"

namespace lenslab {

static SurgeryParameter Derive(std::int64_t p, std::int64_t k);

std::int64_t SurgeryParameter::q_inverse() const {
  return Rem1p(-CheckedMul(k2, k2), p);
}

SurgeryParameter Normalize(std::int64_t p, std::int64_t k_raw) {
  if (p <= 2) {
    throw Error(ErrorCode::kDegenerate,
                "p = " + std::to_string(p) + " has no k with 0 < k < p/2");
  }
  if (Gcd(k_raw, p) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "k = " + std::to_string(k_raw) + " is not coprime to p = " +
                    std::to_string(p));
  }
  std::int64_t base = Mod(k_raw, p);
  std::int64_t inv = InvMod(base, p);
  std::int64_t k = p;
  for (std::int64_t cand : {base, p - base, inv, p - inv}) {
    if (cand > 0 && 2 * cand < p && cand < k) k = cand;
  }
  return Derive(p, k);
}

static SurgeryParameter Derive(std::int64_t p, std::int64_t k) {
  SurgeryParameter sp;
  sp.p = p;
  sp.k = k;
  sp.k2 = Lar(InvMod(k, p), p);
  sp.q = Rem1p(-CheckedMul(k, k), p);
  sp.e = sp.k2 > 0 ? 1 : -1;
  sp.c = CheckedMul(k + 1 - p, k - 1) / 2;
  sp.m = (CheckedMul(k, sp.k2) - 1) / p;
  return sp;
}

SurgeryParameter SwapRoles(const SurgeryParameter& sp) {
  return Derive(sp.p, sp.k2_abs());
}

bool SatisfiesInvariants(const SurgeryParameter& sp) {
  const std::int64_t p = sp.p;
  if (p < 3 || Gcd(sp.k, p) != 1) return false;
  if (!(0 < sp.k && 2 * sp.k < p)) return false;
  if (!(-p < 2 * sp.k2 && 2 * sp.k2 < p)) return false;
  if (Mod(sp.k * sp.k2, p) != 1 % p) return false;
  if (!(1 <= sp.q && sp.q <= p - 1)) return false;
  if (Mod(sp.k * sp.k + sp.q, p) != 0) return false;
  if (sp.e != (sp.k2 > 0 ? 1 : -1)) return false;
  std::int64_t twice_c = (sp.k + 1 - p) * (sp.k - 1);
  if (twice_c % 2 != 0 || sp.c != twice_c / 2) return false;
  std::int64_t mp = sp.k * sp.k2 - 1;
  if (mp % p != 0 || sp.m != mp / p) return false;
  return true;
}

std::vector<SurgeryParameter> Enumerate(std::int64_t p_max) {
  std::vector<SurgeryParameter> out;
  for (std::int64_t p = 3; p <= p_max; ++p) {
    std::set<std::int64_t> seen;
    for (std::int64_t kr = 1; kr < p; ++kr) {
      if (Gcd(kr, p) != 1) continue;
      SurgeryParameter sp = Normalize(p, kr);
      if (seen.insert(std::min(sp.k, sp.k2_abs())).second) out.push_back(sp);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.p, a.k) < std::pair(b.p, b.k);
  });
  return out;
}

}  // namespace lenslab
