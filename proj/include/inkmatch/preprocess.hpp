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


#ifndef INKMATCH_PREPROCESS_HPP
#define INKMATCH_PREPROCESS_HPP

#include <vector>

#include "inkmatch/config.hpp"
#include "inkmatch/types.hpp"

namespace inkmatch {

/// Drops every point within `eps` of the last kept point. Throws
/// "degenerate stroke" when fewer than two points survive.
Stroke dedupe_points(const Stroke& stroke, double eps = 1e-6);

/// Maps the symbol's joint bounding box into the unit square with uniform
/// scaling, centering the shorter axis. Throws on zero extent.
InkSymbol normalize_symbol(const InkSymbol& symbol);

double arc_length(const Stroke& stroke);

/// Points at arc-length multiples of `spacing`, plus the end point.
Stroke resample_stroke(const Stroke& stroke, double spacing);

/// Exactly `count` (>= 2) points equally spaced in arc length.
Stroke resample_to_count(const Stroke& stroke, Index count);

FeatureSeq extract_features(const Stroke& stroke);

/// Resamples a feature sequence to `count` rows, equally spaced along the
/// polyline through its positions. Angles are interpolated along the shorter
/// arc. Falls back to index spacing when the positions have no extent.
FeatureSeq resample_features(const FeatureSeq& seq, Index count);

struct PreparedSymbol {
  /// Normalized, deduplicated, resampled strokes in input order.
  std::vector<Stroke> strokes;
  std::vector<FeatureSeq> features;
};

/// normalize -> dedupe -> resample to the standard length -> features.
PreparedSymbol prepare_symbol(const InkSymbol& symbol, const Config& config);

}  // namespace inkmatch

#endif  // INKMATCH_PREPROCESS_HPP
