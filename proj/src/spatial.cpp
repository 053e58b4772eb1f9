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


#include "inkmatch/spatial.hpp"

#include <algorithm>
#include <limits>

namespace inkmatch {

namespace {

constexpr std::array<std::string_view, kRegionCount> kRegionNames{"T-L", "T", "T-R", "B-L", "B", "B-R"};

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// p is collinear with [a, b]; is it within the segment's box?
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double u = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + u * ab)).norm();
}

struct Segment {
  Vec2 a;
  Vec2 b;
};

std::vector<Segment> segments(const Stroke& s) {
  std::vector<Segment> out;
  if (s.size() == 1) {
    const Vec2 p = s.xy.row(0).transpose();
    out.push_back({p, p});
    return out;
  }
  for (Index i = 0; i + 1 < s.size(); ++i) out.push_back({s.xy.row(i).transpose(), s.xy.row(i + 1).transpose()});
  return out;
}

enum class Contact { kNone, kTouch, kCross };

// Touches at a stroke end point count as contact; any other shared point of
// the two polylines is an intersection.
Contact segment_contact(const Segment& s, const Segment& t, const std::array<Vec2, 4>& stroke_ends) {
  const int o1 = sign(cross(s.a, s.b, t.a));
  const int o2 = sign(cross(s.a, s.b, t.b));
  const int o3 = sign(cross(t.a, t.b, s.a));
  const int o4 = sign(cross(t.a, t.b, s.b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::kCross;

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: overlap of positive length is an intersection.
    const Vec2 dir = (s.b - s.a).squaredNorm() > 0.0 ? Vec2(s.b - s.a) : Vec2(t.b - t.a);
    if (dir.squaredNorm() > 0.0) {
      const double s0 = s.a.dot(dir), s1 = s.b.dot(dir);
      const double t0 = t.a.dot(dir), t1 = t.b.dot(dir);
      const double lo = std::max(std::min(s0, s1), std::min(t0, t1));
      const double hi = std::min(std::max(s0, s1), std::max(t0, t1));
      if (hi > lo) return Contact::kCross;
    }
  }

  std::array<Vec2, 4> touches;
  std::size_t n = 0;
  if (o1 == 0 && on_segment(s.a, s.b, t.a)) touches[n++] = t.a;
  if (o2 == 0 && on_segment(s.a, s.b, t.b)) touches[n++] = t.b;
  if (o3 == 0 && on_segment(t.a, t.b, s.a)) touches[n++] = s.a;
  if (o4 == 0 && on_segment(t.a, t.b, s.b)) touches[n++] = s.b;
  if (n == 0) return Contact::kNone;
  for (std::size_t i = 0; i < n; ++i) {
    const bool at_end = std::any_of(stroke_ends.begin(), stroke_ends.end(),
                                    [&](const Vec2& e) { return e == touches[i]; });
    if (!at_end) return Contact::kCross;
  }
  return Contact::kTouch;
}

}  // namespace

std::string_view region_name(Region r) { return kRegionNames[static_cast<std::size_t>(r)]; }

std::optional<Region> region_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRegionCount; ++i) {
    if (kRegionNames[i] == name) return static_cast<Region>(i);
  }
  return std::nullopt;
}

std::string_view relation_name(TopoRelation r) {
  switch (r) {
    case TopoRelation::kDC: return "DC";
    case TopoRelation::kEC: return "EC";
    case TopoRelation::kOI: return "OI";
  }
  return "?";
}

Rect mbr(const Stroke& stroke) {
  if (stroke.size() == 0) throw Error("MBR of an empty stroke");
  const auto lo = stroke.xy.colwise().minCoeff();
  const auto hi = stroke.xy.colwise().maxCoeff();
  return {lo(0), lo(1), hi(0), hi(1)};
}

Rect mbr(const std::vector<Stroke>& strokes) {
  if (strokes.empty()) throw Error("MBR of an empty symbol");
  Rect r = mbr(strokes.front());
  for (const Stroke& s : strokes) {
    const Rect q = mbr(s);
    r.xmin = std::min(r.xmin, q.xmin);
    r.ymin = std::min(r.ymin, q.ymin);
    r.xmax = std::max(r.xmax, q.xmax);
    r.ymax = std::max(r.ymax, q.ymax);
  }
  return r;
}

Vec2 centroid(const Stroke& stroke) {
  if (stroke.size() == 0) throw Error("centroid of an empty stroke");
  return stroke.xy.colwise().mean().transpose();
}

TopoRelation topological_relation(const Stroke& a, const Stroke& b, double eps) {
  if (a.size() == 0 || b.size() == 0) throw Error("relation of an empty stroke");
  const std::array<Vec2, 4> ends{a.xy.row(0).transpose(), a.xy.row(a.size() - 1).transpose(),
                                 b.xy.row(0).transpose(), b.xy.row(b.size() - 1).transpose()};
  const auto sa = segments(a);
  const auto sb = segments(b);
  bool touched = false;
  double dist = std::numeric_limits<double>::infinity();
  for (const Segment& s : sa) {
    for (const Segment& t : sb) {
      switch (segment_contact(s, t, ends)) {
        case Contact::kCross: return TopoRelation::kOI;
        case Contact::kTouch: touched = true; break;
        case Contact::kNone: break;
      }
      if (!touched) {
        dist = std::min({dist, point_segment_distance(s.a, t.a, t.b), point_segment_distance(s.b, t.a, t.b),
                         point_segment_distance(t.a, s.a, s.b), point_segment_distance(t.b, s.a, s.b)});
      }
    }
  }
  if (touched || dist <= eps) return TopoRelation::kEC;
  return TopoRelation::kDC;
}

std::optional<VerticalOrder> vertical_order(const Stroke& a, const Stroke& b, double eps) {
  const Rect ra = mbr(a);
  const Rect rb = mbr(b);
  if (topological_relation(a, b, eps) == TopoRelation::kDC) {
    if (ra.ymax <= rb.ymin && ra.ymin < rb.ymin) return VerticalOrder::kAbove;
    if (rb.ymax <= ra.ymin && rb.ymin < ra.ymin) return VerticalOrder::kBelow;
  }
  const Vec2 ca = centroid(a);
  const Vec2 cb = centroid(b);
  const bool a_over = ra.ymax < cb.y();
  const bool b_over = rb.ymax < ca.y();
  if (a_over && !b_over) return VerticalOrder::kAbove;
  if (b_over && !a_over) return VerticalOrder::kBelow;
  if (ca.y() < cb.y()) return VerticalOrder::kAbove;
  if (cb.y() < ca.y()) return VerticalOrder::kBelow;
  return std::nullopt;
}

namespace {

bool is_headline(const Stroke& s, const Rect& frame, const SpatialConfig& config) {
  const Rect r = mbr(s);
  const double w = frame.width();
  const double h = frame.height();
  return r.width() >= config.shiro_min_width_frac * w && r.height() <= config.shiro_max_height_frac * h &&
         centroid(s).y() - frame.ymin <= config.shiro_max_centroid_frac * h;
}

}  // namespace

std::optional<std::size_t> find_shirorekha(const std::vector<Stroke>& strokes, const SpatialConfig& config) {
  if (strokes.empty()) return std::nullopt;
  const Rect frame = mbr(strokes);
  for (std::size_t i = 0; i < strokes.size(); ++i) {
    if (is_headline(strokes[i], frame, config)) return i;
  }
  return std::nullopt;
}

Region region_of(const Stroke& stroke, const Rect& frame, double split_y) {
  const Vec2 c = centroid(stroke);
  int column = 1;
  if (frame.width() > 0.0) {
    const double third = frame.width() / 3.0;
    if (c.x() < frame.xmin + third) {
      column = 0;
    } else if (c.x() < frame.xmin + 2.0 * third) {
      column = 1;
    } else {
      column = 2;
    }
  }
  const int row = c.y() < split_y ? 0 : 1;
  return make_region(row, column);
}

SymbolLayout layout_symbol(const std::vector<Stroke>& strokes, const SpatialConfig& config) {
  if (strokes.empty()) throw Error("layout of an empty symbol");
  SymbolLayout out;
  out.frame = mbr(strokes);
  for (std::size_t i = 0; i < strokes.size(); ++i) {
    if (is_headline(strokes[i], out.frame, config)) out.headline_strokes.push_back(i);
  }
  if (!out.headline_strokes.empty()) out.shirorekha = out.headline_strokes.front();
  out.split_y = out.shirorekha ? mbr(strokes[*out.shirorekha]).ymax : (out.frame.ymin + out.frame.ymax) / 2.0;

  out.regions.reserve(strokes.size());
  out.relation_to_shirorekha.reserve(strokes.size());
  for (std::size_t i = 0; i < strokes.size(); ++i) {
    Region r = region_of(strokes[i], out.frame, out.split_y);
    if (std::find(out.headline_strokes.begin(), out.headline_strokes.end(), i) != out.headline_strokes.end())
      r = make_region(0, region_column(r));
    out.regions.push_back(r);
    if (out.shirorekha && *out.shirorekha != i)
      out.relation_to_shirorekha.push_back(topological_relation(strokes[i], strokes[*out.shirorekha], config.ec_eps));
    else
      out.relation_to_shirorekha.emplace_back();
  }
  return out;
}

}  // namespace inkmatch
