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

#include "lenslab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "lenslab/arith.hpp"
#include "lenslab/error.hpp"

namespace lenslab {

namespace {

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) {
  return -FloorDiv(-a, b);
}

void ValidateWindow(const Window& w) {
  if (w.i_min > w.i_max || w.j_min > w.j_max) {
    throw Error(ErrorCode::kInvalidArgument, "empty lattice window");
  }
  if (w.width() * w.height() > 50'000'000) {
    throw Error(ErrorCode::kInvalidArgument, "lattice window too large");
  }
}

}  // namespace

Window ParseWindow(const std::string& text) {
  Window w;
  std::int64_t* slots[] = {&w.i_min, &w.i_max, &w.j_min, &w.j_max};
  std::size_t pos = 0;
  for (int n = 0; n < 4; ++n) {
    std::size_t end = text.find(':', pos);
    if ((n < 3) != (end != std::string::npos)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "window must look like imin:imax:jmin:jmax");
    }
    std::string part = text.substr(pos, end == std::string::npos
                                            ? std::string::npos
                                            : end - pos);
    char* tail = nullptr;
    long long v = std::strtoll(part.c_str(), &tail, 10);
    if (part.empty() || *tail != '\0') {
      throw Error(ErrorCode::kInvalidArgument, "bad window bound: " + part);
    }
    *slots[n] = v;
    pos = end + 1;
  }
  ValidateWindow(w);
  return w;
}

std::int64_t CoefficientGrid::At(std::int64_t i, std::int64_t j) const {
  if (!window_.Contains(i, j)) {
    throw Error(ErrorCode::kInvalidArgument, "cell outside the grid window");
  }
  return values_[static_cast<std::size_t>((j - window_.j_min) *
                                              window_.width() +
                                          (i - window_.i_min))];
}

void CoefficientGrid::Set(std::int64_t i, std::int64_t j, std::int64_t v) {
  if (!window_.Contains(i, j)) {
    throw Error(ErrorCode::kInvalidArgument, "cell outside the grid window");
  }
  values_[static_cast<std::size_t>((j - window_.j_min) * window_.width() +
                                   (i - window_.i_min))] = v;
}

std::int64_t CoefficientGrid::Diff(std::int64_t i, std::int64_t j) const {
  return At(i, j) - At(i + 1, j);
}

std::int64_t CoefficientGrid::IndexOf(std::int64_t i, std::int64_t j) const {
  if (kind_ == GridKind::kA) {
    return CheckedSub(-j, CheckedMul(param_.k2, CheckedAdd(i, param_.c)));
  }
  return CheckedSub(j, CheckedMul(i, step_));
}

std::vector<std::int64_t> CoefficientGrid::RegionsOf(std::int64_t i,
                                                     std::int64_t j) const {
  std::int64_t s = IndexOf(i, j);
  std::vector<std::int64_t> out;
  if (period_ == 0) {
    if (lo_ <= s && s <= hi_) out.push_back(0);
    return out;
  }
  for (std::int64_t n = CeilDiv(s - hi_, period_);
       n <= FloorDiv(s - lo_, period_); ++n) {
    out.push_back(n);
  }
  return out;
}

std::int64_t CoefficientGrid::RegionValue(std::int64_t i, std::int64_t j,
                                          std::int64_t n) const {
  auto regions = RegionsOf(i, j);
  if (std::find(regions.begin(), regions.end(), n) == regions.end()) return 0;
  std::int64_t v = At(i, j);
  if (regions.size() == 1) return v;
  if (v % 2 != 0) {
    throw Error(ErrorCode::kNotFlat,
                "odd value " + std::to_string(v) + " on a region overlap at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return v / 2;
}

Window DefaultAWindow(const SurgeryParameter& sp) {
  std::int64_t j0 = -CheckedMul(sp.k2, sp.c);
  return {-3, 3, j0 - 2 * sp.p, j0 + 2 * sp.p};
}

Window DefaultBWindow(std::int64_t p, std::int64_t k) {
  const LaurentPoly& b = ExpandIst(p, k).quotient;
  std::int64_t lo = b.min_exp(), hi = b.max_exp();
  std::int64_t half = (hi - lo) + 3 * k + 2;
  return {-3, 3, FloorDiv(lo + hi, 2) - half, CeilDiv(lo + hi, 2) + half};
}

CoefficientGrid AGrid(const SurgeryParameter& sp, const LaurentPoly& poly,
                      const Window& window) {
  ValidateWindow(window);
  CoefficientGrid g;
  g.kind_ = GridKind::kA;
  g.param_ = sp;
  g.step_ = sp.k;
  g.window_ = window;
  std::int64_t d = poly.IsZero() ? 0 : poly.max_exp();
  g.lo_ = -d;
  g.hi_ = d;
  g.period_ = sp.p;
  PeriodicCoeffs abar = ReduceCyclic(poly, sp.p);
  g.values_.reserve(static_cast<std::size_t>(window.width() * window.height()));
  for (std::int64_t j = window.j_min; j <= window.j_max; ++j) {
    for (std::int64_t i = window.i_min; i <= window.i_max; ++i) {
      g.values_.push_back(abar.At(g.IndexOf(i, j)));
    }
  }
  return g;
}

CoefficientGrid AGrid(const SurgeryParameter& sp, const Window& window) {
  return AGrid(sp, TypeAPoly(sp), window);
}

CoefficientGrid AGrid(const SurgeryParameter& sp) {
  return AGrid(sp, DefaultAWindow(sp));
}

CoefficientGrid BGrid(std::int64_t p, std::int64_t k,
                      const LaurentPoly& quotient, const Window& window) {
  ValidateWindow(window);
  CoefficientGrid g;
  g.kind_ = GridKind::kB;
  g.param_ = Normalize(p, k);
  g.step_ = k;
  g.window_ = window;
  g.lo_ = quotient.min_exp();
  g.hi_ = quotient.max_exp();
  g.period_ = 0;
  g.values_.reserve(static_cast<std::size_t>(window.width() * window.height()));
  for (std::int64_t j = window.j_min; j <= window.j_max; ++j) {
    for (std::int64_t i = window.i_min; i <= window.i_max; ++i) {
      g.values_.push_back(quotient.Coeff(g.IndexOf(i, j)));
    }
  }
  return g;
}

CoefficientGrid BGrid(std::int64_t p, std::int64_t k, const Window& window) {
  return BGrid(p, k, ExpandIst(p, k).quotient, window);
}

CoefficientGrid BGrid(std::int64_t p, std::int64_t k) {
  return BGrid(p, k, DefaultBWindow(p, k));
}

std::int64_t AFunction(const SurgeryParameter& sp, const PeriodicCoeffs& abar,
                       std::int64_t x) {
  return abar.At(-CheckedMul(sp.k2, Mod(CheckedAdd(x, sp.c), sp.p)));
}

int DaClosedForm(const SurgeryParameter& sp, std::int64_t x) {
  std::int64_t r = Lar(CheckedMul(Mod(x, sp.p), sp.q_inverse()), sp.p);
  if (Interval(sp.k2_abs()).Contains(r)) return -1;
  if (Interval(-sp.k2_abs()).Contains(r)) return 1;
  return 0;
}

int DbClosedForm(const IstExpansion& x, std::int64_t i, std::int64_t j) {
  std::int64_t l = CheckedSub(j, CheckedMul(i, x.k));
  auto has = [&](std::int64_t v) {
    return std::find(x.exponents.begin(), x.exponents.end(), v) !=
           x.exponents.end();
  };
  return (has(l) ? 1 : 0) - (has(l - 1) ? 1 : 0);
}

std::int64_t CentralRegion(const CoefficientGrid& grid) {
  if (grid.period() == 0) return 0;
  const Window& w = grid.window();
  std::int64_t s = grid.IndexOf(FloorDiv(w.i_min + w.i_max, 2),
                                FloorDiv(w.j_min + w.j_max, 2));
  return FloorDiv(2 * s + grid.period(), 2 * grid.period());
}

std::set<Cell> Region(const CoefficientGrid& grid, std::int64_t n) {
  std::set<Cell> out;
  const Window& w = grid.window();
  for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
    for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
      auto r = grid.RegionsOf(i, j);
      if (std::find(r.begin(), r.end(), n) != r.end()) out.insert({i, j});
    }
  }
  return out;
}

std::set<Cell> Region(const CoefficientGrid& grid) {
  return Region(grid, CentralRegion(grid));
}

std::optional<std::size_t> NonZeroCurve::Find(const Cell& c,
                                              std::int64_t region) const {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end(), c,
      [&](const CurveNode& n, const Cell& key) {
        return std::pair(n.cell, n.region) < std::pair(key, region);
      });
  if (it != nodes.end() && it->cell == c && it->region == region) {
    return static_cast<std::size_t>(it - nodes.begin());
  }
  return std::nullopt;
}

std::vector<std::size_t> NonZeroCurve::Neighbours(std::size_t node) const {
  std::vector<std::size_t> out;
  for (const auto& e : edges) {
    if (e.a == node) out.push_back(e.b);
    if (e.b == node) out.push_back(e.a);
  }
  return out;
}

NonZeroCurve Trace(const CoefficientGrid& grid) {
  const Window& w = grid.window();
  NonZeroCurve curve;
  curve.window = w;
  for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
    for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
      std::int64_t v = grid.At(i, j);
      auto regions = grid.RegionsOf(i, j);
      if (v != 0 && regions.empty()) curve.stray.push_back({i, j});
      for (std::int64_t n : regions) {
        std::int64_t rv = grid.RegionValue(i, j, n);
        if (rv > 1 || rv < -1) {
          throw Error(ErrorCode::kNotFlat,
                      "value " + std::to_string(v) + " at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
        }
        if (rv != 0) {
          curve.nodes.push_back(
              {{i, j}, n, rv > 0 ? Arrow::kRight : Arrow::kLeft});
        }
      }
    }
  }
  std::sort(curve.nodes.begin(), curve.nodes.end());

  std::set<std::pair<std::size_t, std::pair<std::size_t, bool>>> edges;
  const int e = grid.param().e;
  for (std::size_t a = 0; a < curve.nodes.size(); ++a) {
    const CurveNode& node = curve.nodes[a];
    const auto [i, j] = node.cell;
    const std::int64_t n = node.region;
    if (auto b = curve.Find({i + 1, j}, n)) {
      if (curve.nodes[*b].arrow != node.arrow) {
        throw Error(ErrorCode::kConflictingArrows,
                    "opposite arrows at (" + std::to_string(i) + "," +
                        std::to_string(j) + ") and its right neighbour");
      }
      edges.insert({a, {*b, false}});
    }
    if (j + 1 > w.j_max) continue;
    // Blocks whose lower row contains this node.
    for (std::int64_t bi : {i - 1, i}) {
      if (bi < w.i_min || bi + 1 > w.i_max) continue;
      auto rv = [&](std::int64_t x, std::int64_t y) {
        return grid.RegionValue(x, y, n);
      };
      std::int64_t lower = rv(bi, j) - rv(bi + 1, j);
      std::int64_t upper = rv(bi, j + 1) - rv(bi + 1, j + 1);
      bool join = grid.kind() == GridKind::kA ? (lower == -e && upper == e)
                                              : (lower == 1 && upper == -1);
      if (!join) continue;
      std::int64_t ui = rv(bi, j + 1) != 0 ? bi : bi + 1;
      if (auto b = curve.Find({ui, j + 1}, n)) edges.insert({a, {*b, true}});
    }
  }
  for (const auto& [a, rest] : edges) {
    curve.edges.push_back({a, rest.first, rest.second});
  }

  std::vector<std::vector<std::size_t>> adj(curve.nodes.size());
  for (const auto& ed : curve.edges) {
    adj[ed.a].push_back(ed.b);
    adj[ed.b].push_back(ed.a);
  }
  std::vector<bool> seen(curve.nodes.size(), false);
  for (std::size_t start = 0; start < curve.nodes.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (std::size_t y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    auto lowest = [&](std::size_t x, std::size_t y) {
      const Cell& cx = curve.nodes[x].cell;
      const Cell& cy = curve.nodes[y].cell;
      return std::pair(cx.j, cx.i) < std::pair(cy.j, cy.i);
    };
    bool simple = true;
    std::vector<std::size_t> ends;
    for (std::size_t x : members) {
      if (adj[x].size() > 2) simple = false;
      if (adj[x].size() <= 1) ends.push_back(x);
    }
    std::vector<std::size_t> order;
    if (simple) {
      std::size_t cur = ends.empty()
                            ? *std::min_element(members.begin(), members.end(),
                                                lowest)
                            : *std::min_element(ends.begin(), ends.end(), lowest);
      std::set<std::size_t> walked;
      while (walked.insert(cur).second) {
        order.push_back(cur);
        for (std::size_t y : adj[cur]) {
          if (!walked.count(y)) {
            cur = y;
            break;
          }
        }
      }
    }
    if (order.size() != members.size()) {
      order = members;
      std::sort(order.begin(), order.end(), lowest);
    }
    curve.components.push_back(std::move(order));
  }
  return curve;
}

void RequireTraversableWindow(const CoefficientGrid& grid) {
  const Window& w = grid.window();
  std::int64_t span = grid.kind() == GridKind::kA
                          ? 3 * grid.period()
                          : (grid.region_hi() - grid.region_lo()) + 3;
  if (w.width() < 3 || w.height() < span) {
    throw Error(ErrorCode::kWindowTooSmall,
                "window " + std::to_string(w.width()) + "x" +
                    std::to_string(w.height()) + " is below the required " +
                    "3x" + std::to_string(span));
  }
}

namespace {

// Quotient of one region's curve by the translation fixing the index s.
// Nodes are offsets t = s - n*period; edges carry the column shift.
struct RegionQuotient {
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, std::int64_t>>>
      edges;
  std::set<std::int64_t> offsets;
  bool consistent = true;
};

std::map<std::int64_t, RegionQuotient> BuildQuotients(
    const CoefficientGrid& grid, const NonZeroCurve& curve) {
  const Window& w = grid.window();
  std::map<std::int64_t, RegionQuotient> out;
  std::vector<std::vector<std::size_t>> adj(curve.nodes.size());
  for (const auto& ed : curve.edges) {
    adj[ed.a].push_back(ed.b);
    adj[ed.b].push_back(ed.a);
  }
  auto offset = [&](std::size_t x) {
    const CurveNode& n = curve.nodes[x];
    return grid.IndexOf(n.cell.i, n.cell.j) - n.region * grid.period();
  };
  for (std::size_t x = 0; x < curve.nodes.size(); ++x) {
    const CurveNode& n = curve.nodes[x];
    RegionQuotient& rq = out[n.region];
    std::int64_t t = offset(x);
    rq.offsets.insert(t);
    const auto [i, j] = n.cell;
    bool interior = i - 1 >= w.i_min && i + 1 <= w.i_max && j - 1 >= w.j_min &&
                    j + 1 <= w.j_max;
    if (!interior) continue;
    std::vector<std::pair<std::int64_t, std::int64_t>> desc;
    for (std::size_t y : adj[x]) {
      desc.emplace_back(offset(y), curve.nodes[y].cell.i - i);
    }
    std::sort(desc.begin(), desc.end());
    auto [it, fresh] = rq.edges.emplace(t, desc);
    if (!fresh && it->second != desc) rq.consistent = false;
  }
  return out;
}

}  // namespace

bool CheckTraversable(const CoefficientGrid& grid, const NonZeroCurve& curve) {
  RequireTraversableWindow(grid);
  if (!curve.stray.empty()) return false;
  auto quotients = BuildQuotients(grid, curve);
  std::size_t checked = 0;
  for (const auto& [n, rq] : quotients) {
    if (!rq.consistent) return false;
    if (rq.edges.size() != rq.offsets.size()) continue;  // not fully visible
    ++checked;
    for (const auto& [t, desc] : rq.edges) {
      if (desc.size() != 2) return false;
    }
    std::map<std::int64_t, std::int64_t> potential;
    std::int64_t winding = 0;
    std::int64_t first = rq.edges.begin()->first;
    potential[first] = 0;
    std::deque<std::int64_t> queue{first};
    while (!queue.empty()) {
      std::int64_t t = queue.front();
      queue.pop_front();
      for (const auto& [u, di] : rq.edges.at(t)) {
        auto it = potential.find(u);
        if (it == potential.end()) {
          potential[u] = potential[t] + di;
          queue.push_back(u);
        } else {
          winding = Gcd(winding, potential[t] + di - it->second);
        }
      }
    }
    if (potential.size() != rq.offsets.size() || winding != 1) return false;
  }
  if (checked == 0) {
    throw Error(ErrorCode::kWindowTooSmall,
                "no region is fully visible in the window");
  }
  return true;
}

bool CheckTraversable(const CoefficientGrid& grid) {
  return CheckTraversable(grid, Trace(grid));
}

bool CheckTraversable(const SurgeryParameter& sp, const Window& window) {
  return CheckTraversable(AGrid(sp, window));
}

bool CheckPointSymmetry(const CoefficientGrid& grid,
                        const NonZeroCurve& curve) {
  const Window& w = grid.window();
  const std::int64_t ci2 = w.i_min + w.i_max;
  const std::int64_t cj2 = w.j_min + w.j_max;
  // Index of the image cell is shift - s.
  const std::int64_t shift =
      grid.IndexOf(ci2 - w.i_min, cj2 - w.j_min) + grid.IndexOf(w.i_min, w.j_min);
  std::int64_t region_sum = 0;
  if (grid.period() == 0) {
    if (shift != grid.region_lo() + grid.region_hi()) return false;
  } else {
    if (Mod(shift, grid.period()) != 0) return false;
    region_sum = shift / grid.period();
  }
  auto image = [&](const Cell& c) { return Cell{ci2 - c.i, cj2 - c.j}; };
  for (const auto& node : curve.nodes) {
    auto m = curve.Find(image(node.cell), region_sum - node.region);
    if (!m || curve.nodes[*m].arrow != node.arrow) return false;
  }
  std::set<Cell> stray(curve.stray.begin(), curve.stray.end());
  for (const Cell& c : curve.stray) {
    if (!stray.count(image(c))) return false;
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& ed : curve.edges) {
    edges.insert(std::minmax(ed.a, ed.b));
  }
  for (const auto& ed : curve.edges) {
    const CurveNode& a = curve.nodes[ed.a];
    const CurveNode& b = curve.nodes[ed.b];
    auto ma = curve.Find(image(a.cell), region_sum - a.region);
    auto mb = curve.Find(image(b.cell), region_sum - b.region);
    if (!ma || !mb || !edges.count(std::minmax(*ma, *mb))) return false;
  }
  return true;
}

Window DefaultStripWindow(const SurgeryParameter& sp) {
  Window w = DefaultAWindow(sp);
  w.i_min = -(sp.k + 2);
  w.i_max = sp.k + 2;
  return w;
}

bool CheckTorusStrip(const CoefficientGrid& grid, const NonZeroCurve& curve) {
  if (grid.kind() != GridKind::kA) {
    throw Error(ErrorCode::kInvalidArgument,
                "the torus strip test applies to A-grids");
  }
  const Window& w = grid.window();
  const std::int64_t k = grid.param().k;
  if (w.width() < k + 2 || w.height() < grid.period()) {
    throw Error(ErrorCode::kWindowTooSmall,
                "torus strip needs at least " + std::to_string(k + 2) +
                    " columns and one period of rows");
  }
  const std::int64_t n0 = CentralRegion(grid);
  std::set<Cell> gamma, shifted;
  for (const auto& node : curve.nodes) {
    if (node.region != n0) continue;
    gamma.insert(node.cell);
    shifted.insert({node.cell.i + k, node.cell.j - 1});
  }
  // Rows where the curve touches the side of the window may be clipped, and
  // so may their translates.
  std::set<std::int64_t> clipped;
  for (const Cell& c : gamma) {
    if (c.i == w.i_min || c.i == w.i_max) clipped.insert(c.j);
  }
  std::size_t rows = 0;
  for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
    if (clipped.count(j) || clipped.count(j + 1)) continue;
    std::int64_t lo = w.i_max, hi = w.i_min;
    bool has_gamma = false, has_shifted = false;
    for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
      bool g = gamma.count({i, j}) > 0;
      bool s = shifted.count({i, j}) > 0;
      has_gamma = has_gamma || g;
      has_shifted = has_shifted || s;
      if (g || s) {
        lo = std::min(lo, i);
        hi = std::max(hi, i);
      }
    }
    if (!(has_gamma && has_shifted)) continue;
    ++rows;
    for (std::int64_t i = lo + 1; i < hi; ++i) {
      if (grid.At(i, j) != 0 && !gamma.count({i, j}) &&
          !shifted.count({i, j})) {
        return false;
      }
    }
  }
  if (rows == 0) {
    throw Error(ErrorCode::kWindowTooSmall,
                "the curve and its translate share no row in the window");
  }
  return true;
}

bool CheckTorusStrip(const SurgeryParameter& sp, const Window& window) {
  CoefficientGrid g = AGrid(sp, window);
  return CheckTorusStrip(g, Trace(g));
}

bool CheckTorusStrip(const SurgeryParameter& sp) {
  return CheckTorusStrip(sp, DefaultStripWindow(sp));
}

std::vector<std::int64_t> ZeroRuns(const SurgeryParameter& sp) {
  std::vector<std::int64_t> nonzero;
  for (std::int64_t j = 0; j < sp.p; ++j) {
    if (DaClosedForm(sp, CheckedMul(j, sp.k)) != 0) nonzero.push_back(j);
  }
  std::vector<std::int64_t> runs;
  for (std::size_t n = 0; n < nonzero.size(); ++n) {
    std::int64_t next = n + 1 < nonzero.size() ? nonzero[n + 1]
                                               : nonzero.front() + sp.p;
    runs.push_back(next - nonzero[n] - 1);
  }
  return runs;
}

bool ZeroRunsTwoValued(const SurgeryParameter& sp) {
  std::set<std::int64_t> lengths;
  for (std::int64_t r : ZeroRuns(sp)) {
    if (r > 0) lengths.insert(r);
  }
  if (lengths.size() > 2) return false;
  return lengths.size() < 2 || *lengths.rbegin() - *lengths.begin() == 1;
}

namespace {

std::string Header(const CoefficientGrid& grid) {
  const SurgeryParameter& sp = grid.param();
  const Window& w = grid.window();
  std::ostringstream os;
  os << (grid.kind() == GridKind::kA ? "A" : "B") << "-grid p=" << sp.p
     << " k=" << (grid.kind() == GridKind::kA ? sp.k : grid.step())
     << " k2=" << sp.k2 << " e=" << sp.e << " window i=[" << w.i_min << ","
     << w.i_max << "] j=[" << w.j_min << "," << w.j_max << "]";
  return os.str();
}

std::string Verdicts(const CoefficientGrid& grid, const NonZeroCurve& curve) {
  std::ostringstream os;
  os << "components: " << curve.components.size() << "\n";
  os << "traversable: ";
  try {
    os << (CheckTraversable(grid, curve) ? "yes" : "no") << "\n";
  } catch (const Error& e) {
    os << "n/a (" << e.what() << ")\n";
  }
  os << "point symmetry: " << (CheckPointSymmetry(grid, curve) ? "yes" : "no")
     << "\n";
  return os.str();
}

}  // namespace

std::string RenderAscii(const CoefficientGrid& grid, const NonZeroCurve& curve) {
  const Window& w = grid.window();
  const std::size_t width = static_cast<std::size_t>(3 * w.width());
  auto col = [&](std::int64_t i) {
    return static_cast<std::size_t>(3 * (i - w.i_min));
  };
  // Glyph rows indexed from the top; row 2*(j_max - j) holds lattice row j,
  // the row below it holds the joins from j-1 up to j.
  const std::size_t rows = static_cast<std::size_t>(2 * w.height() - 1);
  std::vector<std::vector<std::string>> canvas(
      rows, std::vector<std::string>(width, " "));
  auto row_of = [&](std::int64_t j) {
    return static_cast<std::size_t>(2 * (w.j_max - j));
  };
  for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
    for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
      std::int64_t v = grid.At(i, j);
      std::string text = v == 0 ? " ." : (v > 0 ? "+" : "-") +
                                             std::to_string(v < 0 ? -v : v);
      if (text.size() > 2) text = v > 0 ? "+*" : "-*";
      canvas[row_of(j)][col(i)] = text.substr(0, 1);
      canvas[row_of(j)][col(i) + 1] = text.substr(1, 1);
    }
  }
  auto put = [](std::string& slot, const std::string& glyph) {
    if (slot == " " || slot == glyph) {
      slot = glyph;
    } else {
      slot = "╳";
    }
  };
  for (const auto& ed : curve.edges) {
    const Cell& a = curve.nodes[ed.a].cell;
    const Cell& b = curve.nodes[ed.b].cell;
    if (!ed.corner) {
      put(canvas[row_of(a.j)][col(std::min(a.i, b.i)) + 2], "─");
      continue;
    }
    const Cell& lo = a.j < b.j ? a : b;
    const Cell& hi = a.j < b.j ? b : a;
    auto& line = canvas[row_of(lo.j) - 1];
    if (lo.i == hi.i) {
      put(line[col(lo.i) + 1], "│");
    } else if (hi.i == lo.i + 1) {
      put(line[col(lo.i) + 2], "╱");
    } else {
      put(line[col(hi.i) + 2], "╲");
    }
  }
  std::ostringstream os;
  os << Header(grid) << "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    if (r % 2 == 0) {
      std::string label = std::to_string(w.j_max - static_cast<std::int64_t>(r / 2));
      line = std::string(6 - std::min<std::size_t>(6, label.size()), ' ') + label + " ";
    } else {
      line = std::string(7, ' ');
    }
    for (const auto& g : canvas[r]) line += g;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  std::string axis(7, ' ');
  for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
    std::string label = std::to_string(i);
    axis += std::string(3 - std::min<std::size_t>(3, label.size()), ' ') + label;
  }
  os << axis << "\n" << Verdicts(grid, curve);
  return os.str();
}

std::string RenderSvg(const CoefficientGrid& grid, const NonZeroCurve& curve) {
  const Window& w = grid.window();
  constexpr int kStep = 24;
  constexpr int kMargin = 30;
  auto x = [&](std::int64_t i) { return kMargin + kStep * (i - w.i_min); };
  auto y = [&](std::int64_t j) { return kMargin + kStep * (w.j_max - j); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << 2 * kMargin + kStep * (w.width() - 1) << "\" height=\""
     << 2 * kMargin + kStep * (w.height() - 1) << "\">\n";
  os << "<title>" << Header(grid) << "</title>\n";
  for (const auto& ed : curve.edges) {
    const Cell& a = curve.nodes[ed.a].cell;
    const Cell& b = curve.nodes[ed.b].cell;
    os << "<line x1=\"" << x(a.i) << "\" y1=\"" << y(a.j) << "\" x2=\""
       << x(b.i) << "\" y2=\"" << y(b.j)
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (std::int64_t j = w.j_min; j <= w.j_max; ++j) {
    for (std::int64_t i = w.i_min; i <= w.i_max; ++i) {
      std::int64_t v = grid.At(i, j);
      if (v == 0) {
        os << "<circle cx=\"" << x(i) << "\" cy=\"" << y(j)
           << "\" r=\"1.5\" fill=\"gray\"/>\n";
        continue;
      }
      os << "<text x=\"" << x(i) << "\" y=\"" << y(j) + 4
         << "\" font-size=\"11\" text-anchor=\"middle\" fill=\""
         << (v > 0 ? "firebrick" : "navy") << "\">" << (v > 0 ? "+" : "")
         << v << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lenslab
