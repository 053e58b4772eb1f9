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


#ifndef INKMATCH_CONFIG_HPP
#define INKMATCH_CONFIG_HPP

#include <cstddef>
#include <numbers>
#include <string>

#include "json.hpp"

namespace inkmatch {

struct PreprocessConfig {
  // Arc-length spacing in normalized units; also fixes the standard stroke
  // length (1 / spacing + 1 points).
  double resample_spacing = 0.02;
  double dedupe_eps = 1e-6;

  friend bool operator==(const PreprocessConfig&, const PreprocessConfig&) = default;
};

struct MatchConfig {
  // Weight of the squared wrapped angle difference; caps the angle term at 0.5.
  double angle_weight = 0.5 / (std::numbers::pi * std::numbers::pi);
  // Warping reach r = ceil(reach_fraction * K).
  double reach_fraction = 0.1;
  // true: band-constrained DTW with LB_Keogh pruning. false: exhaustive
  // unconstrained DTW.
  bool lower_bound = true;

  friend bool operator==(const MatchConfig&, const MatchConfig&) = default;
};

struct SpatialConfig {
  double shiro_min_width_frac = 0.5;
  double shiro_max_height_frac = 0.2;
  double shiro_max_centroid_frac = 0.4;
  double ec_eps = 0.01;

  friend bool operator==(const SpatialConfig&, const SpatialConfig&) = default;
};

struct ClusterConfig {
  double threshold = 0.05;

  friend bool operator==(const ClusterConfig&, const ClusterConfig&) = default;
};

struct RecognizeConfig {
  double reject_threshold = 0.25;
  double group_penalty = 0.1;
  double region_penalty = 0.05;

  friend bool operator==(const RecognizeConfig&, const RecognizeConfig&) = default;
};

struct Config {
  PreprocessConfig preprocess;
  MatchConfig match;
  SpatialConfig spatial;
  ClusterConfig cluster;
  RecognizeConfig recognize;

  /// Number of points every stroke is resampled to.
  std::size_t standard_point_count() const;
  /// LB_Keogh reach for sequences of `length` items.
  std::size_t reach_for(std::size_t length) const;

  friend bool operator==(const Config&, const Config&) = default;
};

// Nested JSON ({"preprocess": {"resample_spacing": ...}, ...}). Missing keys keep
// their defaults; unknown keys are rejected.
nlohmann::json to_json(const Config& config);
Config config_from_json(const nlohmann::json& j);
Config load_config(const std::string& path);

}  // namespace inkmatch

#endif  // INKMATCH_CONFIG_HPP
