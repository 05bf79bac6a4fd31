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

#ifndef LENSLAB_ARITH_HPP_
#define LENSLAB_ARITH_HPP_

#include <cstdint>

namespace lenslab {

// Overflow-checked 64-bit operations. Throw Error(kOverflow).
std::int64_t CheckedAdd(std::int64_t a, std::int64_t b);
std::int64_t CheckedSub(std::int64_t a, std::int64_t b);
std::int64_t CheckedMul(std::int64_t a, std::int64_t b);

// Floor modulus in [0, p).
std::int64_t Mod(std::int64_t y, std::int64_t p);

// Least absolute remainder: y mod p in (-p/2, p/2].
std::int64_t Lar(std::int64_t y, std::int64_t p);

// Remainder in [1, p]; multiples of p map to p.
std::int64_t Rem1p(std::int64_t y, std::int64_t p);

std::int64_t Gcd(std::int64_t a, std::int64_t b);

// Inverse of a modulo p in [1, p-1] (0 when p == 1). Throws kNotCoprime.
std::int64_t InvMod(std::int64_t a, std::int64_t p);

// I_alpha = {1..alpha} for alpha > 0, {alpha+1..0} for alpha < 0.
class Interval {
 public:
  explicit Interval(std::int64_t alpha);

  std::int64_t alpha() const { return alpha_; }
  std::int64_t size() const { return alpha_ > 0 ? alpha_ : -alpha_; }
  bool Contains(std::int64_t x) const;

 private:
  std::int64_t alpha_;
};

bool InInterval(std::int64_t x, const Interval& iv);

// E_beta: e if Lar(arg, p) lies in I_beta, else 0.
int EBeta(std::int64_t arg, std::int64_t beta, std::int64_t p, int e);

}  // namespace lenslab

#endif  // LENSLAB_ARITH_HPP_
