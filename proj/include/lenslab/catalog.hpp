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

#ifndef LENSLAB_CATALOG_HPP_
#define LENSLAB_CATALOG_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace lenslab {

struct TableRow {
  std::int64_t g = 0;
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::int64_t k2_abs = 0;
  std::vector<std::int64_t> ns_h;
  std::vector<std::int64_t> adjacent;  // table 2 only
  std::int64_t alpha = 0;
  std::string ambient_label;  // table 1 only
};

// Table 1: every (p, k) with p <= 23 whose IST knot lives in a non-L-space.
// Tables 2 and 3: the listed double-primitive rows, recomputed.
// Throws kInvalidArgument unless which is 1, 2 or 3.
std::vector<TableRow> GenerateTable(int which);
std::string TableToTsv(int which, const std::vector<TableRow>& rows);
std::string GenerateTableTsv(int which);

struct CellMismatch {
  std::size_t line = 0;  // 1-based
  std::string column;
  std::string expected;
  std::string actual;
};

std::vector<CellMismatch> CompareTsv(const std::string& expected,
                                     const std::string& actual);
std::string FormatMismatches(const std::vector<CellMismatch>& diff);

}  // namespace lenslab

#endif  // LENSLAB_CATALOG_HPP_
