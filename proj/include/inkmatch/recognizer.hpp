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


#ifndef INKMATCH_RECOGNIZER_HPP
#define INKMATCH_RECOGNIZER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "inkmatch/model.hpp"
#include "inkmatch/spatial.hpp"

namespace inkmatch {

struct ClassScore {
  int label = 0;
  double score = 0.0;
  /// Stroke-count group the score came from.
  std::size_t group = 0;
  friend bool operator==(const ClassScore&, const ClassScore&) = default;
};

struct StrokeMatch {
  std::size_t stroke = 0;
  Region region = Region::kTop;
  /// Region of the bucket that supplied the best template.
  Region matched_region = Region::kTop;
  std::size_t template_id = 0;
  double delta = 0.0;
  /// Fallback penalty added to `delta` in the class score.
  double penalty = 0.0;
  friend bool operator==(const StrokeMatch&, const StrokeMatch&) = default;
};

enum class RejectReason { kNone, kScoreAboveThreshold, kNoCompatibleGroup };

struct RecognitionResult {
  /// Ascending by score, then label; at most topk entries.
  std::vector<ClassScore> ranked;
  bool rejected = false;
  RejectReason reason = RejectReason::kNone;
  /// Matches against the top-ranked class.
  std::vector<StrokeMatch> per_stroke;
  std::vector<Region> regions;
  std::optional<std::size_t> shirorekha;
  /// Full DTW evaluations and candidates considered across all stroke searches.
  std::size_t dtw_calls = 0;
  std::size_t candidates = 0;
};

/// Stroke-number and stroke-order free classification. Each test stroke is
/// matched against the templates of its own region within every class's
/// compatible stroke-count group; class score is the mean per-stroke Delta plus
/// fallback penalties.
RecognitionResult recognize(const InkSymbol& symbol, const Model& model, std::size_t topk);

}  // namespace inkmatch

#endif  // INKMATCH_RECOGNIZER_HPP
