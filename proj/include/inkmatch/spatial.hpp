// Copyright 2026 The inkmatch Authors
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


#ifndef INKMATCH_SPATIAL_HPP
#define INKMATCH_SPATIAL_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "inkmatch/config.hpp"
#include "inkmatch/types.hpp"

namespace inkmatch {

// Coordinates grow downward: "top" is the smaller y.

struct Rect {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// The 2 x 3 relational grid, row-major from the top-left.
enum class Region : int { kTopLeft = 0, kTop, kTopRight, kBottomLeft, kBottom, kBottomRight };

inline constexpr std::size_t kRegionCount = 6;
inline constexpr std::array<Region, kRegionCount> kAllRegions{
    Region::kTopLeft, Region::kTop, Region::kTopRight,
    Region::kBottomLeft, Region::kBottom, Region::kBottomRight};

constexpr int region_row(Region r) { return static_cast<int>(r) / 3; }
constexpr int region_column(Region r) { return static_cast<int>(r) % 3; }
constexpr Region make_region(int row, int column) { return static_cast<Region>(row * 3 + column); }

/// "T-L", "T", "T-R", "B-L", "B", "B-R".
std::string_view region_name(Region r);
std::optional<Region> region_from_name(std::string_view name);

/// Disconnected, externally connected, overlap/intersect.
enum class TopoRelation { kDC, kEC, kOI };
std::string_view relation_name(TopoRelation r);

Rect mbr(const Stroke& stroke);
Rect mbr(const std::vector<Stroke>& strokes);
Vec2 centroid(const Stroke& stroke);

/// OI when polyline segments of the two strokes cross (or overlap
/// collinearly); EC when they come within `eps` without crossing; DC otherwise.
TopoRelation topological_relation(const Stroke& a, const Stroke& b, double eps);

/// Whether `a` sits above `b`. DC pairs compare MBR borders; EC/OI pairs (and DC
/// pairs whose MBRs overlap vertically) compare a's lower MBR border with b's
/// centroid level. Returns nullopt when neither is above the other.
enum class VerticalOrder { kAbove, kBelow };
std::optional<VerticalOrder> vertical_order(const Stroke& a, const Stroke& b, double eps);

/// Index of the first stroke (writing order) that is wide, flat and high in
/// the symbol frame.
std::optional<std::size_t> find_shirorekha(const std::vector<Stroke>& strokes, const SpatialConfig& config);

/// Column by thirds of the frame width (left-closed intervals), row by the
/// centroid level against `split_y`: strictly above is top.
Region region_of(const Stroke& stroke, const Rect& frame, double split_y);

struct SymbolLayout {
  Rect frame;
  std::optional<std::size_t> shirorekha;
  /// Every stroke meeting the shirorekha test; all are placed in the top row.
  std::vector<std::size_t> headline_strokes;
  double split_y = 0.0;
  std::vector<Region> regions;
  /// Relation of each stroke to the reference shirorekha (nullopt for the
  /// shirorekha itself or when there is none).
  std::vector<std::optional<TopoRelation>> relation_to_shirorekha;
};

/// Frame = whole-symbol MBR; the split is the shirorekha's lower MBR edge, or
/// the frame's midline when the symbol has none.
SymbolLayout layout_symbol(const std::vector<Stroke>& strokes, const SpatialConfig& config);

}  // namespace inkmatch

#endif  // INKMATCH_SPATIAL_HPP
