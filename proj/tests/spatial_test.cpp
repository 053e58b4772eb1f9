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


#include <random>

#include "doctest.h"
#include "inkmatch/spatial.hpp"
#include "support.hpp"

using namespace inkmatch;
using inkmatch::test::make_stroke;

namespace {

constexpr double kEps = 0.01;

Stroke dot_at(double x, double y) { return make_stroke({{x, y - 0.01}, {x, y + 0.01}}); }

}  // namespace

TEST_CASE("mbr and centroid") {
  const Stroke s = make_stroke({{0, 0}, {2, 1}});
  CHECK(mbr(s) == Rect{0, 0, 2, 1});
  CHECK(centroid(s).isApprox(Vec2(1, 0.5)));
  const Rect degenerate = mbr(make_stroke({{3, 4}, {3, 4}}));
  CHECK(degenerate.area() == 0.0);
  CHECK(degenerate.xmin == 3.0);
  CHECK(mbr(std::vector<Stroke>{s, make_stroke({{-1, 3}, {0, 0}})}) == Rect{-1, 0, 2, 3});
}

TEST_CASE("region names round-trip") {
  for (Region r : kAllRegions) CHECK(region_from_name(region_name(r)) == r);
  CHECK(region_name(Region::kTop) == "T");
  CHECK(region_name(Region::kBottomRight) == "B-R");
  CHECK_FALSE(region_from_name("X").has_value());
  CHECK(region_row(Region::kBottomLeft) == 1);
  CHECK(region_column(Region::kTopRight) == 2);
}

TEST_CASE("topological relations") {
  const Stroke a = make_stroke({{0, 0}, {1, 1}});
  const Stroke b = make_stroke({{0, 1}, {1, 0}});
  CHECK(topological_relation(a, b, kEps) == TopoRelation::kOI);

  const Stroke low = make_stroke({{0, 0}, {1, 0}});
  const Stroke high = make_stroke({{0, 10 * kEps}, {1, 10 * kEps}});
  CHECK(topological_relation(low, high, kEps) == TopoRelation::kDC);

  const Stroke stem = make_stroke({{0.5, 0}, {0.5, -1}});
  CHECK(topological_relation(stem, low, kEps) == TopoRelation::kEC);
  CHECK(topological_relation(low, stem, kEps) == TopoRelation::kEC);

  const Stroke near = make_stroke({{0.5, 0.5 * kEps}, {0.5, 1}});
  CHECK(topological_relation(near, low, kEps) == TopoRelation::kEC);

  const Stroke overlap = make_stroke({{0.5, 0}, {2, 0}});
  CHECK(topological_relation(low, overlap, kEps) == TopoRelation::kOI);

  const Stroke chain = make_stroke({{1, 0}, {2, 1}});
  CHECK(topological_relation(low, chain, kEps) == TopoRelation::kEC);

  const Stroke through = make_stroke({{0.5, 1}, {0.5, 0}, {0.6, -1}});
  CHECK(topological_relation(through, low, kEps) == TopoRelation::kOI);
  CHECK(relation_name(TopoRelation::kEC) == "EC");
}

TEST_CASE("vertical order") {
  const Stroke top = make_stroke({{0, 0}, {1, 0}});
  const Stroke bottom = make_stroke({{0, 2}, {1, 2}});
  CHECK(vertical_order(top, bottom, kEps) == VerticalOrder::kAbove);
  CHECK(vertical_order(bottom, top, kEps) == VerticalOrder::kBelow);
  const Stroke hanging = make_stroke({{0.5, 0}, {0.5, 1}});
  CHECK(vertical_order(top, hanging, kEps) == VerticalOrder::kAbove);
  CHECK_FALSE(vertical_order(top, top, kEps).has_value());
}

TEST_CASE("find_shirorekha") {
  const SpatialConfig cfg;
  const std::vector<Stroke> sym{make_stroke({{0.3, 0.2}, {0.3, 1.0}}), make_stroke({{0.6, 0.4}, {0.6, 0.9}, {0.8, 1.0}}),
                                make_stroke({{0, 0}, {1, 0.02}})};
  CHECK(find_shirorekha(sym, cfg) == 2u);
  CHECK_FALSE(find_shirorekha({make_stroke({{0, 0}, {0, 1}})}, cfg).has_value());
  const std::vector<Stroke> two{make_stroke({{0.5, 0.2}, {0.5, 1.0}}), make_stroke({{0, 0}, {1, 0}}),
                                make_stroke({{0, 0.05}, {0.9, 0.05}})};
  CHECK(find_shirorekha(two, cfg) == 1u);
  const std::vector<Stroke> low_bar{make_stroke({{0.5, 0}, {0.5, 1.0}}), make_stroke({{0, 0.9}, {1, 0.9}})};
  CHECK_FALSE(find_shirorekha(low_bar, cfg).has_value());
  CHECK_FALSE(find_shirorekha({}, cfg).has_value());
}

TEST_CASE("region_of thresholds with y growing downward") {
  const Rect unit{0, 0, 1, 1};
  CHECK(region_of(dot_at(0.9, 0.2), unit, 0.5) == Region::kTopRight);
  CHECK(region_of(dot_at(0.9, 0.8), unit, 0.5) == Region::kBottomRight);
  CHECK(region_of(dot_at(0.1, 0.8), unit, 0.5) == Region::kBottomLeft);
  CHECK(region_of(dot_at(0.5, 0.1), unit, 0.5) == Region::kTop);
  CHECK(region_of(dot_at(0.5, 0.5), unit, 0.5) == Region::kBottom);
}

TEST_CASE("column boundaries are left-closed") {
  const Rect frame{0, 0, 3, 3};
  CHECK(region_of(dot_at(1.0, 0.5), frame, 1.5) == Region::kTop);
  CHECK(region_of(dot_at(2.0, 0.5), frame, 1.5) == Region::kTopRight);
  CHECK(region_of(dot_at(0.0, 0.5), frame, 1.5) == Region::kTopLeft);
  CHECK(region_of(dot_at(3.0, 2.5), frame, 1.5) == Region::kBottomRight);
}

TEST_CASE("two-stroke character layout") {
  const std::vector<Stroke> ka{make_stroke({{0, 0.1}, {1, 0.1}}),
                               make_stroke({{0.5, 0.1}, {0.5, 0.6}, {0.3, 0.7}, {0.5, 0.8}, {0.7, 0.7}, {0.5, 1.0}})};
  const SymbolLayout layout = layout_symbol(ka, SpatialConfig{});
  CHECK(layout.shirorekha == 0u);
  CHECK(layout.split_y == doctest::Approx(0.1));
  CHECK(layout.regions[0] == Region::kTop);
  CHECK(layout.regions[1] == Region::kBottom);
  CHECK_FALSE(layout.relation_to_shirorekha[0].has_value());
  CHECK(layout.relation_to_shirorekha[1] == TopoRelation::kEC);
}

TEST_CASE("all headline strokes sit in the top row") {
  const std::vector<Stroke> sym{make_stroke({{0, 0}, {0.6, 0}}), make_stroke({{0.4, 0}, {1, 0}}),
                                make_stroke({{0.8, 0}, {0.8, 1}})};
  const SymbolLayout layout = layout_symbol(sym, SpatialConfig{});
  CHECK(layout.headline_strokes.size() == 2);
  CHECK(region_row(layout.regions[0]) == 0);
  CHECK(region_row(layout.regions[1]) == 0);
  CHECK(layout.regions[2] == Region::kBottomRight);
}

TEST_CASE("layout without a headline splits at the midline") {
  const std::vector<Stroke> sym{make_stroke({{0, 0}, {0.2, 0.3}}), make_stroke({{0.8, 0.7}, {1, 1}})};
  const SymbolLayout layout = layout_symbol(sym, SpatialConfig{});
  CHECK_FALSE(layout.shirorekha.has_value());
  CHECK(layout.split_y == 0.5);
  CHECK(layout.regions[0] == Region::kTopLeft);
  CHECK(layout.regions[1] == Region::kBottomRight);
  CHECK_THROWS_AS(layout_symbol({}, SpatialConfig{}), Error);
}

TEST_CASE("layout is invariant to translation and uniform scaling") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Stroke> sym{make_stroke({{0, 0.05}, {1, 0.05}})};
    for (int s = 0; s < 3; ++s) sym.push_back(make_stroke({{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}));
    const double scale = 0.5 + 400 * u(rng);
    const Vec2 shift(1000 * u(rng), 1000 * u(rng));
    std::vector<Stroke> moved;
    for (const Stroke& s : sym) {
      Points p = (s.xy * scale).rowwise() + shift.transpose();
      moved.emplace_back(p);
    }
    const SymbolLayout a = layout_symbol(sym, SpatialConfig{});
    const SymbolLayout b = layout_symbol(moved, SpatialConfig{});
    CHECK(a.shirorekha == b.shirorekha);
    CHECK(a.regions == b.regions);
  }
}
