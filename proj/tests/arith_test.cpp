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

#include <cstdint>
#include <limits>

#include <gtest/gtest.h>

#include "lenslab/error.hpp"

namespace lenslab {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

TEST(ArithTest, CheckedOpsDetectOverflow) {
  EXPECT_EQ(CheckedAdd(2, 3), 5);
  EXPECT_EQ(CheckedMul(-4, 6), -24);
  EXPECT_THROW(CheckedAdd(kMax, 1), Error);
  EXPECT_THROW(CheckedSub(-kMax - 1, 1), Error);
  try {
    CheckedMul(kMax, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(ArithTest, Lar) {
  EXPECT_EQ(Lar(7, 5), 2);
  EXPECT_EQ(Lar(3, 5), -2);
  EXPECT_EQ(Lar(5, 10), 5);
  EXPECT_EQ(Lar(-5, 10), 5);
  EXPECT_EQ(Lar(0, 7), 0);
  EXPECT_EQ(Lar(-1, 7), -1);
  EXPECT_THROW(Lar(1, 0), Error);
}

TEST(ArithTest, Rem1p) {
  EXPECT_EQ(Rem1p(0, 7), 7);
  EXPECT_EQ(Rem1p(10, 10), 10);
  EXPECT_EQ(Rem1p(3, 7), 3);
  EXPECT_EQ(Rem1p(-1, 7), 6);
}

TEST(ArithTest, RangesHoldOverSweep) {
  for (std::int64_t p = 1; p <= 40; ++p) {
    for (std::int64_t y = -3 * p; y <= 3 * p; ++y) {
      std::int64_t l = Lar(y, p);
      EXPECT_GT(2 * l, -p);
      EXPECT_LE(2 * l, p);
      EXPECT_EQ(Mod(y - l, p), 0);
      std::int64_t r = Rem1p(y, p);
      EXPECT_GE(r, 1);
      EXPECT_LE(r, p);
      EXPECT_EQ(Mod(y - r, p), 0);
    }
  }
}

TEST(ArithTest, InvMod) {
  EXPECT_EQ(InvMod(2, 5), 3);
  EXPECT_EQ(InvMod(7, 19), 11);
  EXPECT_EQ(InvMod(3, 10), 7);
  EXPECT_EQ(InvMod(-3, 10), 3);
  EXPECT_THROW(InvMod(4, 10), Error);
  for (std::int64_t p = 2; p <= 60; ++p) {
    for (std::int64_t a = 1; a < p; ++a) {
      if (Gcd(a, p) != 1) continue;
      std::int64_t inv = InvMod(a, p);
      EXPECT_EQ(Mod(a * inv, p), 1);
    }
  }
}

TEST(ArithTest, Gcd) {
  EXPECT_EQ(Gcd(12, 18), 6);
  EXPECT_EQ(Gcd(-12, 18), 6);
  EXPECT_EQ(Gcd(0, 5), 5);
}

TEST(ArithTest, Intervals) {
  EXPECT_TRUE(InInterval(1, Interval(3)));
  EXPECT_TRUE(InInterval(3, Interval(3)));
  EXPECT_FALSE(InInterval(0, Interval(3)));
  EXPECT_TRUE(InInterval(0, Interval(-2)));
  EXPECT_TRUE(InInterval(-1, Interval(-2)));
  EXPECT_FALSE(InInterval(-2, Interval(-2)));
  EXPECT_EQ(Interval(-4).size(), 4);
  EXPECT_THROW(Interval(0), Error);
}

TEST(ArithTest, EBeta) {
  EXPECT_EQ(EBeta(2, 3, 7, -1), -1);
  EXPECT_EQ(EBeta(0, 3, 7, -1), 0);
  EXPECT_EQ(EBeta(-1, -2, 7, 1), 1);
  EXPECT_EQ(EBeta(9, 3, 7, 1), 1);
}

}  // namespace
}  // namespace lenslab
