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

#include "lenslab/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "lenslab/alexander.hpp"
#include "lenslab/error.hpp"
#include "lenslab/laurent.hpp"
#include "lenslab/params.hpp"

namespace lenslab {
namespace {

using V = std::vector<std::int64_t>;

std::string ReadGolden(int which) {
  std::ifstream in(std::string(LENSLAB_GOLDEN_DIR) + "/table" +
                   std::to_string(which) + ".tsv");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const TableRow* FindRow(const std::vector<TableRow>& rows, std::int64_t p,
                        std::int64_t k) {
  for (const auto& r : rows) {
    if (r.p == p && r.k == k) return &r;
  }
  return nullptr;
}

TEST(CatalogTest, TablesMatchGoldenByteForByte) {
  for (int which = 1; which <= 3; ++which) {
    std::string golden = ReadGolden(which);
    ASSERT_FALSE(golden.empty()) << which;
    std::string actual = GenerateTableTsv(which);
    EXPECT_EQ(actual, golden) << FormatMismatches(CompareTsv(golden, actual));
  }
}

TEST(CatalogTest, RowCounts) {
  EXPECT_EQ(GenerateTable(1).size(), 13u);
  EXPECT_EQ(GenerateTable(2).size(), 19u);
  EXPECT_EQ(GenerateTable(3).size(), 20u);
  EXPECT_THROW(GenerateTable(4), Error);
}

TEST(CatalogTest, Deterministic) {
  EXPECT_EQ(GenerateTableTsv(2), GenerateTableTsv(2));
}

TEST(CatalogTest, SpotRows) {
  auto t1 = GenerateTable(1);
  const TableRow* a = FindRow(t1, 10, 3);
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->g, 6);
  EXPECT_EQ(a->ns_h, (V{6, 5, 3, 2, 0}));
  EXPECT_EQ(a->ambient_label, "Σ(2,3,7)");
  const TableRow* b = FindRow(t1, 20, 9);
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->g, 40);

  auto t2 = GenerateTable(2);
  const TableRow* c = FindRow(t2, 12, 5);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->alpha, 14);
  EXPECT_EQ(c->adjacent, (V{12, 7, 5, 2, 0, -2}));

  auto t3 = GenerateTable(3);
  const TableRow* d = FindRow(t3, 16, 7);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->g, 24);
  const TableRow* e = FindRow(t3, 45, 7);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->g, 29);
  EXPECT_EQ(e->k2_abs, 13);
  EXPECT_EQ(e->alpha, 13);
  EXPECT_EQ(e->ns_h, (V{29, 28, 22, 21, 16, 14, 9, 7, 3, 0}));
}

TEST(CatalogTest, OrderingRules) {
  auto t1 = GenerateTable(1);
  EXPECT_TRUE(std::is_sorted(t1.begin(), t1.end(), [](auto& x, auto& y) {
    return std::tie(x.p, x.k) < std::tie(y.p, y.k);
  }));
  for (int which : {2, 3}) {
    auto t = GenerateTable(which);
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end(), [](auto& x, auto& y) {
      return std::tie(x.g, x.p) < std::tie(y.g, y.p);
    }));
  }
}

TEST(CatalogTest, TableOneIsExactlyTheNonLSpaceSet) {
  auto t1 = GenerateTable(1);
  std::size_t found = 0;
  for (std::int64_t p = 3; p <= 23; ++p) {
    for (std::int64_t k = 2; 2 * k < p; ++k) {
      if (std::gcd(k, p) != 1) continue;
      bool non = LSpaceClassifyIst(p, k) == LSpaceClass::kNonLSpace;
      bool listed = false;
      for (const auto& r : t1) {
        if (r.p == p && Normalize(p, k) == Normalize(r.p, r.k)) listed = true;
      }
      if (non) {
        EXPECT_TRUE(listed) << p << "," << k;
        ++found;
      } else {
        EXPECT_FALSE(listed) << p << "," << k;
      }
    }
  }
  EXPECT_GE(found, t1.size());
}

// Printed cells that disagree with recomputation.
TEST(CatalogTest, ErratumTableOneRow17x3) {
  V printed{10, 9, 7, 6, 4, 2, 1};
  // A symmetric alternating profile has an even number of nonnegative exponents
  // ending in 0; the printed row has neither property.
  EXPECT_NE(printed.back(), 0);
  EXPECT_EQ(Profile(IstPoly(17, 3)).ns_h, (V{10, 9, 7, 6, 4, 3, 1, 0}));
  EXPECT_EQ(FindRow(GenerateTable(2), 17, 3)->ns_h,
            FindRow(GenerateTable(1), 17, 3)->ns_h);
}

TEST(CatalogTest, ErratumTableTwoRow23x7) {
  NonZeroProfile pr = Profile(IstPoly(23, 7));
  EXPECT_EQ(pr.ns_h, (V{13, 12, 10, 9, 6, 5, 3, 2, 0}));
  // Printed AS contains 5, which sits at an even (minus-sign) position.
  auto pos = std::find(pr.ns.begin(), pr.ns.end(), 5) - pr.ns.begin();
  EXPECT_EQ(pos % 2, 1);
  EXPECT_EQ(pr.adjacent, (V{13, 10, 6, 3, 0}));
  EXPECT_EQ(pr.alpha, 13);
}

TEST(CatalogTest, ErratumTableThreeRow53) {
  EXPECT_EQ(Genus(IstPoly(53, 3)), 34);
  EXPECT_EQ(Genus(IstPoly(53, 5)), 30);
  EXPECT_EQ(Normalize(53, 5).k2_abs(), 21);
  EXPECT_NE(FindRow(GenerateTable(3), 53, 5), nullptr);
}

TEST(CatalogTest, CompareReportsCells) {
  std::string golden = ReadGolden(2);
  std::string broken = golden;
  auto at = broken.find("(6,3,0)");
  ASSERT_NE(at, std::string::npos);
  broken.replace(at, 7, "(6,3,1)");
  auto diff = CompareTsv(broken, GenerateTableTsv(2));
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_EQ(diff[0].column, "AS");
  EXPECT_EQ(diff[0].expected, "(6,3,1)");
  EXPECT_EQ(diff[0].actual, "(6,3,0)");
  EXPECT_NE(FormatMismatches(diff).find("AS"), std::string::npos);
  EXPECT_TRUE(CompareTsv(golden, golden).empty());
}

}  // namespace
}  // namespace lenslab
