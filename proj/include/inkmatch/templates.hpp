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


#ifndef INKMATCH_TEMPLATES_HPP
#define INKMATCH_TEMPLATES_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "inkmatch/matching.hpp"
#include "inkmatch/model.hpp"

namespace inkmatch {

/// Symbol indices keyed by stroke count.
std::map<std::size_t, std::vector<std::size_t>> group_by_stroke_count(const std::vector<InkSymbol>& symbols);

/// Averages two strokes along their optimal warping path: each step (k, l)
/// yields the weighted mean of a_k and b_l (circular mean for angles). The
/// result is resampled to `length` rows (0 keeps a's length).
FeatureSeq merge_strokes(const FeatureSeq& a, const FeatureSeq& b, const FeatureDistance& metric,
                         double weight_a = 1.0, double weight_b = 1.0, Index length = 0);

struct Cluster {
  FeatureSeq features;
  std::size_t member_count = 1;
  /// Input indices absorbed into this cluster, ascending.
  std::vector<std::size_t> members;
};

struct MergeStep {
  std::size_t left = 0;   ///< surviving cluster slot
  std::size_t right = 0;  ///< absorbed cluster slot
  double distance = 0.0;  ///< single-linkage distance at the merge
  std::size_t clusters_after = 0;
};

struct Clustering {
  std::vector<Cluster> clusters;
  std::vector<MergeStep> merges;
};

/// Single-linkage agglomeration over Delta. Repeatedly merges the closest
/// cluster pair (lowest indices on ties) while its distance is <= threshold;
/// representatives are member-count weighted warping-path averages.
Clustering cluster_strokes(const std::vector<FeatureSeq>& strokes, double threshold,
                           const FeatureDistance& metric = {});

/// Groups each class by stroke count, places every stroke in its region and
/// clusters each (class, group, region) bucket. Throws if the dataset has an
/// unlabeled symbol or a class without symbols.
Model build_model(const Dataset& dataset, const Config& config);

}  // namespace inkmatch

#endif  // INKMATCH_TEMPLATES_HPP
