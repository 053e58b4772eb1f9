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


#ifndef INKMATCH_MODEL_HPP
#define INKMATCH_MODEL_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "inkmatch/config.hpp"
#include "inkmatch/spatial.hpp"
#include "inkmatch/types.hpp"

namespace inkmatch {

/// A learnt stroke: the DTW average of `member_count` training strokes from
/// one (class, stroke-count group, region) bucket.
struct Template {
  std::size_t id = 0;
  int label = 0;
  std::size_t group = 0;
  Region region = Region::kTop;
  std::size_t member_count = 1;
  FeatureSeq features;

  friend bool operator==(const Template&, const Template&) = default;
};

struct GroupTemplates {
  std::array<std::vector<Template>, kRegionCount> regions;

  const std::vector<Template>& at(Region r) const { return regions[static_cast<std::size_t>(r)]; }
  std::vector<Template>& at(Region r) { return regions[static_cast<std::size_t>(r)]; }
  friend bool operator==(const GroupTemplates&, const GroupTemplates&) = default;
};

struct ClassTemplates {
  int label = 0;
  /// Keyed by stroke count.
  std::map<std::size_t, GroupTemplates> groups;
  friend bool operator==(const ClassTemplates&, const ClassTemplates&) = default;
};

struct Model {
  static constexpr int kFormatVersion = 1;

  Config config;
  std::size_t class_count = 0;
  std::vector<ClassTemplates> classes;

  std::size_t template_count() const;
  /// Renumbers template ids in (class, group, region, position) order and
  /// checks every template's key against its location.
  void reindex();

  friend bool operator==(const Model&, const Model&) = default;
};

/// Versioned JSON document {"version": 1, "config": {...}, "classes": [...]}.
nlohmann::json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);

/// Throws ModelError("empty model") for a model without templates.
void save_model(const Model& model, const std::string& path);
/// Throws ModelError on I/O failure, "corrupt model", version mismatch or
/// "empty model".
Model load_model(const std::string& path);

}  // namespace inkmatch

#endif  // INKMATCH_MODEL_HPP
