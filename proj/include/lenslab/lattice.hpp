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

#ifndef LENSLAB_LATTICE_HPP_
#define LENSLAB_LATTICE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lenslab/alexander.hpp"
#include "lenslab/laurent.hpp"
#include "lenslab/params.hpp"

namespace lenslab {

enum class GridKind { kA, kB };

struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Window {
  std::int64_t i_min = 0;
  std::int64_t i_max = 0;
  std::int64_t j_min = 0;
  std::int64_t j_max = 0;

  std::int64_t width() const { return i_max - i_min + 1; }
  std::int64_t height() const { return j_max - j_min + 1; }
  bool Contains(std::int64_t i, std::int64_t j) const {
    return i_min <= i && i <= i_max && j_min <= j && j <= j_max;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

// Parses "imin:imax:jmin:jmax". Throws kInvalidArgument.
Window ParseWindow(const std::string& text);

// Windowed lattice values. Kind A: A_{i,j} = abar_{s} with
// s = -j - k2(i+c). Kind B: B_{i,j} = b_{s} with s = j - ik, b the raw IST
// quotient. Region n collects the cells with n*period + lo <= s <=
// n*period + hi (kind B has one region, n = 0).
class CoefficientGrid {
 public:
  GridKind kind() const { return kind_; }
  const SurgeryParameter& param() const { return param_; }
  std::int64_t step() const { return step_; }
  const Window& window() const { return window_; }
  std::int64_t region_lo() const { return lo_; }
  std::int64_t region_hi() const { return hi_; }
  std::int64_t period() const { return period_; }

  std::int64_t At(std::int64_t i, std::int64_t j) const;
  void Set(std::int64_t i, std::int64_t j, std::int64_t v);
  // At(i,j) - At(i+1,j).
  std::int64_t Diff(std::int64_t i, std::int64_t j) const;

  std::int64_t IndexOf(std::int64_t i, std::int64_t j) const;
  // Regions containing the cell (two on the overlap row when 2g = p).
  std::vector<std::int64_t> RegionsOf(std::int64_t i, std::int64_t j) const;
  // Value carried by the cell inside region n (0 when outside).
  std::int64_t RegionValue(std::int64_t i, std::int64_t j,
                           std::int64_t n) const;

  friend CoefficientGrid AGrid(const SurgeryParameter&, const LaurentPoly&,
                               const Window&);
  friend CoefficientGrid BGrid(std::int64_t, std::int64_t, const LaurentPoly&,
                               const Window&);

 private:
  GridKind kind_ = GridKind::kA;
  SurgeryParameter param_;
  std::int64_t step_ = 0;
  Window window_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::int64_t period_ = 0;
  std::vector<std::int64_t> values_;
};

// i in [-3,3], j within 2p of the row where s(0,j) = 0.
Window DefaultAWindow(const SurgeryParameter& sp);
// i in [-3,3], j symmetric about the centre of the raw IST support and wide
// enough to show the whole strip in every column.
Window DefaultBWindow(std::int64_t p, std::int64_t k);

CoefficientGrid AGrid(const SurgeryParameter& sp, const LaurentPoly& poly,
                      const Window& window);
CoefficientGrid AGrid(const SurgeryParameter& sp, const Window& window);
CoefficientGrid AGrid(const SurgeryParameter& sp);
// quotient plays the role of the raw IST quotient.
CoefficientGrid BGrid(std::int64_t p, std::int64_t k,
                      const LaurentPoly& quotient, const Window& window);
CoefficientGrid BGrid(std::int64_t p, std::int64_t k, const Window& window);
CoefficientGrid BGrid(std::int64_t p, std::int64_t k);

// A(x) = abar_{-k2(x+c)}, so that A(i + jk) = A_{i,j}.
std::int64_t AFunction(const SurgeryParameter& sp, const PeriodicCoeffs& abar,
                       std::int64_t x);
// Closed form of A(x) - A(x+1).
int DaClosedForm(const SurgeryParameter& sp, std::int64_t x);
// Closed form of B_{i,j} - B_{i+1,j}.
int DbClosedForm(const IstExpansion& x, std::int64_t i, std::int64_t j);

// Cells of region n (or the region through the window centre) in the window.
std::set<Cell> Region(const CoefficientGrid& grid, std::int64_t n);
std::set<Cell> Region(const CoefficientGrid& grid);
std::int64_t CentralRegion(const CoefficientGrid& grid);

enum class Arrow { kLeft = -1, kRight = 1 };

struct CurveNode {
  Cell cell;
  std::int64_t region = 0;
  Arrow arrow = Arrow::kRight;
  friend auto operator<=>(const CurveNode&, const CurveNode&) = default;
};

struct CurveEdge {
  std::size_t a = 0;  // lower (or left) end
  std::size_t b = 0;
  bool corner = false;
  friend auto operator<=>(const CurveEdge&, const CurveEdge&) = default;
};

struct NonZeroCurve {
  Window window;
  std::vector<CurveNode> nodes;  // sorted
  std::vector<CurveEdge> edges;  // sorted
  // Node indices of each component, in path order from its lowest end.
  std::vector<std::vector<std::size_t>> components;
  // Nonzero cells outside every region.
  std::vector<Cell> stray;

  std::optional<std::size_t> Find(const Cell& c, std::int64_t region) const;
  std::vector<std::size_t> Neighbours(std::size_t node) const;
};

// Throws kNotFlat, kConflictingArrows.
NonZeroCurve Trace(const CoefficientGrid& grid);

// Throws kWindowTooSmall.
void RequireTraversableWindow(const CoefficientGrid& grid);
bool CheckTraversable(const CoefficientGrid& grid, const NonZeroCurve& curve);
bool CheckTraversable(const CoefficientGrid& grid);
bool CheckTraversable(const SurgeryParameter& sp, const Window& window);

// Symmetry about the window centre.
bool CheckPointSymmetry(const CoefficientGrid& grid, const NonZeroCurve& curve);

// Kind A only. Throws kWindowTooSmall.
bool CheckTorusStrip(const CoefficientGrid& grid, const NonZeroCurve& curve);
bool CheckTorusStrip(const SurgeryParameter& sp, const Window& window);
bool CheckTorusStrip(const SurgeryParameter& sp);
Window DefaultStripWindow(const SurgeryParameter& sp);

// Zero-run lengths between consecutive nonzero entries of one dA column over
// a full period, taken cyclically.
std::vector<std::int64_t> ZeroRuns(const SurgeryParameter& sp);
bool ZeroRunsTwoValued(const SurgeryParameter& sp);

std::string RenderAscii(const CoefficientGrid& grid, const NonZeroCurve& curve);
std::string RenderSvg(const CoefficientGrid& grid, const NonZeroCurve& curve);

}  // namespace lenslab

#endif  // LENSLAB_LATTICE_HPP_
