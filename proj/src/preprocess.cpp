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


#include "inkmatch/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace inkmatch {

namespace {

Eigen::VectorXd cumulative_length(const Eigen::Ref<const Points>& xy) {
  Eigen::VectorXd cum(xy.rows());
  cum(0) = 0.0;
  for (Index i = 1; i < xy.rows(); ++i) cum(i) = cum(i - 1) + (xy.row(i) - xy.row(i - 1)).norm();
  return cum;
}

// Samples the polyline (and its timestamps, if any) at ascending arc-length
// positions `targets`.
Stroke sample_at(const Stroke& stroke, const Eigen::VectorXd& cum, const std::vector<double>& targets) {
  Points out(static_cast<Index>(targets.size()), 2);
  std::vector<double> times;
  if (stroke.has_time()) times.reserve(targets.size());
  Index seg = 0;
  const Index last = stroke.size() - 1;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double s = targets[i];
    while (seg < last - 1 && cum(seg + 1) < s) ++seg;
    const double len = cum(seg + 1) - cum(seg);
    const double u = len > 0.0 ? std::clamp((s - cum(seg)) / len, 0.0, 1.0) : 0.0;
    const auto row = static_cast<Index>(i);
    out.row(row) = (1.0 - u) * stroke.xy.row(seg) + u * stroke.xy.row(seg + 1);
    if (stroke.has_time()) {
      const auto k = static_cast<std::size_t>(seg);
      times.push_back((1.0 - u) * stroke.t[k] + u * stroke.t[k + 1]);
    }
  }
  // Exact end points.
  out.row(0) = stroke.xy.row(0);
  out.row(out.rows() - 1) = stroke.xy.row(last);
  if (stroke.has_time()) {
    times.front() = stroke.t.front();
    times.back() = stroke.t.back();
  }
  return Stroke(std::move(out), std::move(times));
}

void require_resamplable(const Stroke& stroke) {
  if (stroke.size() < 2) throw Error("degenerate stroke");
}

}  // namespace

Stroke dedupe_points(const Stroke& stroke, double eps) {
  if (stroke.size() == 0) throw Error("degenerate stroke");
  std::vector<Index> keep{0};
  for (Index i = 1; i < stroke.size(); ++i) {
    if ((stroke.xy.row(i) - stroke.xy.row(keep.back())).norm() > eps) keep.push_back(i);
  }
  if (keep.size() < 2) throw Error("degenerate stroke");
  Points xy(static_cast<Index>(keep.size()), 2);
  std::vector<double> t;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    xy.row(static_cast<Index>(k)) = stroke.xy.row(keep[k]);
    if (stroke.has_time()) t.push_back(stroke.t[static_cast<std::size_t>(keep[k])]);
  }
  return Stroke(std::move(xy), std::move(t));
}

InkSymbol normalize_symbol(const InkSymbol& symbol) {
  if (symbol.strokes.empty()) throw Error("empty symbol");
  Eigen::RowVector2d lo = Eigen::RowVector2d::Constant(std::numeric_limits<double>::infinity());
  Eigen::RowVector2d hi = -lo;
  for (const Stroke& s : symbol.strokes) {
    if (s.size() == 0) throw Error("empty stroke");
    lo = lo.cwiseMin(s.xy.colwise().minCoeff());
    hi = hi.cwiseMax(s.xy.colwise().maxCoeff());
  }
  const Eigen::RowVector2d extent = hi - lo;
  const double side = extent.maxCoeff();
  if (!(side > 0.0)) throw Error("zero-extent symbol");
  const double scale = 1.0 / side;
  const Eigen::RowVector2d offset = (Eigen::RowVector2d::Ones() - extent * scale) / 2.0;

  InkSymbol out = symbol;
  for (Stroke& s : out.strokes) {
    s.xy = ((s.xy.rowwise() - lo) * scale).rowwise() + offset;
  }
  return out;
}

double arc_length(const Stroke& stroke) {
  if (stroke.size() < 2) return 0.0;
  return cumulative_length(stroke.xy)(stroke.size() - 1);
}

Stroke resample_stroke(const Stroke& stroke, double spacing) {
  if (!(spacing > 0.0)) throw Error("resample spacing must be positive");
  require_resamplable(stroke);
  const Eigen::VectorXd cum = cumulative_length(stroke.xy);
  const double total = cum(cum.size() - 1);
  if (!(total > 0.0)) throw Error("degenerate stroke");

  const double tol = 1e-9 * std::max(1.0, total);
  std::vector<double> targets;
  for (std::size_t i = 0;; ++i) {
    const double s = static_cast<double>(i) * spacing;
    if (s >= total - tol) break;
    targets.push_back(s);
  }
  targets.push_back(total);
  return sample_at(stroke, cum, targets);
}

Stroke resample_to_count(const Stroke& stroke, Index count) {
  if (count < 2) throw Error("resample count must be at least 2");
  require_resamplable(stroke);
  const Eigen::VectorXd cum = cumulative_length(stroke.xy);
  const double total = cum(cum.size() - 1);
  if (!(total > 0.0)) throw Error("degenerate stroke");
  std::vector<double> targets(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i)
    targets[static_cast<std::size_t>(i)] = total * static_cast<double>(i) / static_cast<double>(count - 1);
  return sample_at(stroke, cum, targets);
}

FeatureSeq extract_features(const Stroke& stroke) {
  if (stroke.size() < 2) throw Error("feature extraction needs at least two points");
  const Index n = stroke.size() - 1;
  FeatureSeq f;
  f.source_len = static_cast<std::size_t>(stroke.size());
  f.items.resize(n, 3);
  f.items.leftCols<2>() = stroke.xy.topRows(n);
  for (Index i = 0; i < n; ++i) {
    const Eigen::RowVector2d d = stroke.xy.row(i + 1) - stroke.xy.row(i);
    f.items(i, 2) = wrap_angle(std::atan2(d.y(), d.x()));
  }
  return f;
}

FeatureSeq resample_features(const FeatureSeq& seq, Index count) {
  if (seq.empty()) throw Error("cannot resample an empty feature sequence");
  if (count < 1) throw Error("resample count must be positive");
  const Index m = seq.size();
  FeatureSeq out;
  out.items.resize(count, 3);
  out.source_len = static_cast<std::size_t>(count) + 1;
  if (m == 1 || count == 1) {
    out.items = seq.items.row(0).replicate(count, 1);
    return out;
  }

  Eigen::VectorXd cum = cumulative_length(seq.items.leftCols<2>());
  double total = cum(m - 1);
  if (!(total > 0.0)) {
    cum = Eigen::VectorXd::LinSpaced(m, 0.0, static_cast<double>(m - 1));
    total = static_cast<double>(m - 1);
  }
  Index seg = 0;
  for (Index i = 0; i < count; ++i) {
    const double s = total * static_cast<double>(i) / static_cast<double>(count - 1);
    while (seg < m - 2 && cum(seg + 1) < s) ++seg;
    const double len = cum(seg + 1) - cum(seg);
    const double u = len > 0.0 ? std::clamp((s - cum(seg)) / len, 0.0, 1.0) : 0.0;
    out.items.block<1, 2>(i, 0) =
        (1.0 - u) * seq.items.block<1, 2>(seg, 0) + u * seq.items.block<1, 2>(seg + 1, 0);
    const double a0 = seq.items(seg, 2);
    out.items(i, 2) = u == 0.0 ? a0 : wrap_angle(a0 + u * wrap_angle(seq.items(seg + 1, 2) - a0));
  }
  out.items.row(0) = seq.items.row(0);
  out.items.row(count - 1) = seq.items.row(m - 1);
  return out;
}

PreparedSymbol prepare_symbol(const InkSymbol& symbol, const Config& config) {
  const InkSymbol normalized = normalize_symbol(symbol);
  const auto count = static_cast<Index>(config.standard_point_count());
  PreparedSymbol out;
  out.strokes.reserve(normalized.strokes.size());
  out.features.reserve(normalized.strokes.size());
  for (const Stroke& s : normalized.strokes) {
    Stroke r = resample_to_count(dedupe_points(s, config.preprocess.dedupe_eps), count);
    out.features.push_back(extract_features(r));
    out.strokes.push_back(std::move(r));
  }
  return out;
}

}  // namespace inkmatch
