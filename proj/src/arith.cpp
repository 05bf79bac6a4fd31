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

#include "lenslab/arith.hpp"

#include <string>

#include "lenslab/error.hpp"

namespace lenslab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kAsymmetricFolding: return "AsymmetricFolding";
    case ErrorCode::kOddMiddleCoefficient: return "OddMiddleCoefficient";
    case ErrorCode::kNoCoprimeLift: return "NoCoprimeLift";
    case ErrorCode::kNotFlatAlternating: return "NotFlatAlternating";
    case ErrorCode::kNotFlat: return "NotFlat";
    case ErrorCode::kConflictingArrows: return "ConflictingArrows";
    case ErrorCode::kWindowTooSmall: return "WindowTooSmall";
    case ErrorCode::kGoldenMismatch: return "GoldenMismatch";
  }
  return "Unknown";
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in addition");
  }
  return r;
}

std::int64_t CheckedSub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in subtraction");
  }
  return r;
}

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer overflow in multiplication");
  }
  return r;
}

static void RequirePositive(std::int64_t p) {
  if (p < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must be positive, got " + std::to_string(p));
  }
}

std::int64_t Mod(std::int64_t y, std::int64_t p) {
  RequirePositive(p);
  std::int64_t r = y % p;
  return r < 0 ? r + p : r;
}

std::int64_t Lar(std::int64_t y, std::int64_t p) {
  std::int64_t r = Mod(y, p);
  // r > p/2 without halving odd p.
  return 2 * r > p ? r - p : r;
}

std::int64_t Rem1p(std::int64_t y, std::int64_t p) {
  std::int64_t r = Mod(y, p);
  return r == 0 ? p : r;
}

std::int64_t Gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t InvMod(std::int64_t a, std::int64_t p) {
  RequirePositive(p);
  if (Gcd(a, p) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                std::to_string(a) + " is not invertible modulo " +
                    std::to_string(p));
  }
  if (p == 1) return 0;
  std::int64_t old_r = Mod(a, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  return Mod(old_s, p);
}

Interval::Interval(std::int64_t alpha) : alpha_(alpha) {
  if (alpha == 0) {
    throw Error(ErrorCode::kInvalidArgument, "interval index must be nonzero");
  }
}

bool Interval::Contains(std::int64_t x) const {
  if (alpha_ > 0) return 1 <= x && x <= alpha_;
  return alpha_ + 1 <= x && x <= 0;
}

bool InInterval(std::int64_t x, const Interval& iv) { return iv.Contains(x); }

int EBeta(std::int64_t arg, std::int64_t beta, std::int64_t p, int e) {
  if (e != 1 && e != -1) {
    throw Error(ErrorCode::kInvalidArgument, "sign must be +1 or -1");
  }
  return Interval(beta).Contains(Lar(arg, p)) ? e : 0;
}

}  // namespace lenslab
