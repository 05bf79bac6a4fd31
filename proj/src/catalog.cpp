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
#include <map>
#include <sstream>
#include <tuple>
#include <utility>

#include "lenslab/alexander.hpp"
#include "lenslab/error.hpp"
#include "lenslab/laurent.hpp"
#include "lenslab/params.hpp"

namespace lenslab {

namespace {

using Key = std::pair<std::int64_t, std::int64_t>;

const std::map<Key, std::string>& AmbientLabels() {
  static const std::map<Key, std::string> labels = {
      {{10, 3}, "Σ(2,3,7)"},  {{12, 5}, "Σ(3,5,7)"},  {{13, 5}, "Σ(3,5,8)"},
      {{15, 4}, "Σ(3,4,11)"}, {{16, 7}, "Σ(4,7,9)"},  {{17, 3}, "Σ(2,3,11)"},
      {{17, 4}, "Σ(3,4,13)"}, {{17, 5}, "Σ(2,5,7)"},  {{19, 3}, "Σ(2,3,13)"},
      {{20, 9}, "Σ(5,9,11)"}, {{21, 8}, "Σ(5,8,13)"}, {{23, 5}, "Σ(2,5,9)"},
      {{23, 7}, "Σ(2,3,11)"},
  };
  return labels;
}

const std::vector<Key>& DoublePrimitiveKeys(int which) {
  static const std::vector<Key> table2 = {
      {10, 3}, {17, 3}, {12, 5}, {17, 5}, {19, 3}, {23, 7}, {13, 5},
      {15, 4}, {23, 5}, {26, 3}, {26, 7}, {29, 8}, {17, 4}, {25, 9},
      {28, 3}, {29, 9}, {27, 5}, {35, 8}, {38, 9},
  };
  static const std::vector<Key> table3 = {
      {35, 3}, {16, 7}, {32, 7}, {33, 5}, {35, 11}, {37, 3}, {37, 13},
      {43, 9}, {42, 11}, {47, 5}, {44, 3}, {44, 7}, {44, 13}, {45, 7},
      {55, 16}, {39, 7}, {43, 15}, {46, 3}, {53, 5}, {58, 7},
  };
  return which == 2 ? table2 : table3;
}

TableRow RowFor(std::int64_t p, std::int64_t k) {
  SurgeryParameter sp = Normalize(p, k);
  LaurentPoly poly = IstPoly(p, k);
  NonZeroProfile pr = Profile(poly);
  TableRow row;
  row.g = Genus(poly);
  row.p = p;
  row.k = sp.k;
  row.k2_abs = sp.k2_abs();
  row.ns_h = pr.ns_h;
  row.adjacent = pr.adjacent;
  row.alpha = pr.alpha;
  return row;
}

void RequireTable(int which) {
  if (which < 1 || which > 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "table must be 1, 2 or 3, got " + std::to_string(which));
  }
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::vector<TableRow> GenerateTable(int which) {
  RequireTable(which);
  std::vector<TableRow> rows;
  if (which == 1) {
    for (const SurgeryParameter& sp : Enumerate(23)) {
      if (sp.trivial()) continue;
      if (LSpaceClassifyIst(sp.p, sp.k) != LSpaceClass::kNonLSpace) continue;
      TableRow row = RowFor(sp.p, sp.k);
      auto it = AmbientLabels().find({sp.p, sp.k});
      row.ambient_label = it == AmbientLabels().end() ? "?" : it->second;
      rows.push_back(std::move(row));
    }
    return rows;
  }
  for (const auto& [p, k] : DoublePrimitiveKeys(which)) {
    rows.push_back(RowFor(p, k));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.g, a.p, a.k) < std::tie(b.g, b.p, b.k);
  });
  return rows;
}

std::string TableToTsv(int which, const std::vector<TableRow>& rows) {
  RequireTable(which);
  std::ostringstream os;
  if (which == 1) {
    os << "# Table 1: Type-(B) knots in non-L-space homology spheres.\n"
          "# Rows: every (p,k) with p <= 23 and 2g > p+1. Ambient labels are"
          " carried verbatim.\n"
          "p\tk\tambient\tg\tNS_h\n";
    for (const auto& r : rows) {
      os << r.p << '\t' << r.k << '\t' << r.ambient_label << '\t' << r.g << '\t'
         << FormatSequence(r.ns_h) << '\n';
    }
  } else if (which == 2) {
    os << "# Table 2: The list of double-primitive knots (g <= 21).\n"
          "# Columns recomputed from the IST formula.\n"
          "g\tp\tk\tk2_abs\tNS_h\tAS\talpha\n";
    for (const auto& r : rows) {
      os << r.g << '\t' << r.p << '\t' << r.k << '\t' << r.k2_abs << '\t'
         << FormatSequence(r.ns_h) << '\t' << FormatSequence(r.adjacent) << '\t'
         << r.alpha << '\n';
    }
  } else {
    os << "# Table 3: Non-zero sequences of double-primitive knots"
          " (22 <= g <= 30).\n"
          "# Columns recomputed from the IST formula.\n"
          "g\tp\tk\tk2_abs\tNS_h\talpha\n";
    for (const auto& r : rows) {
      os << r.g << '\t' << r.p << '\t' << r.k << '\t' << r.k2_abs << '\t'
         << FormatSequence(r.ns_h) << '\t' << r.alpha << '\n';
    }
  }
  return os.str();
}

std::string GenerateTableTsv(int which) {
  return TableToTsv(which, GenerateTable(which));
}

std::vector<CellMismatch> CompareTsv(const std::string& expected,
                                     const std::string& actual) {
  std::vector<CellMismatch> diff;
  auto el = Split(expected, '\n');
  auto al = Split(actual, '\n');
  std::vector<std::string> header;
  for (std::size_t n = 0; n < std::max(el.size(), al.size()); ++n) {
    const std::string e = n < el.size() ? el[n] : std::string("<missing>");
    const std::string a = n < al.size() ? al[n] : std::string("<missing>");
    if (e == a) {
      if (!e.empty() && e[0] != '#' && header.empty()) header = Split(e, '\t');
      continue;
    }
    auto ec = Split(e, '\t');
    auto ac = Split(a, '\t');
    if (ec.size() != ac.size() || e[0] == '#' || a[0] == '#') {
      diff.push_back({n + 1, "<line>", e, a});
      continue;
    }
    for (std::size_t c = 0; c < ec.size(); ++c) {
      if (ec[c] == ac[c]) continue;
      std::string col = c < header.size() ? header[c] : std::to_string(c + 1);
      diff.push_back({n + 1, col, ec[c], ac[c]});
    }
  }
  return diff;
}

std::string FormatMismatches(const std::vector<CellMismatch>& diff) {
  std::ostringstream os;
  for (const auto& d : diff) {
    os << "line " << d.line << ", " << d.column << ": expected " << d.expected
       << ", got " << d.actual << '\n';
  }
  return os.str();
}

}  // namespace lenslab
