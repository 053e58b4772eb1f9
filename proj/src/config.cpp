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


#include "inkmatch/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "inkmatch/types.hpp"

namespace inkmatch {

using nlohmann::json;

std::size_t Config::standard_point_count() const {
  const double n = std::round(1.0 / preprocess.resample_spacing);
  return static_cast<std::size_t>(std::max(1.0, n)) + 1;
}

std::size_t Config::reach_for(std::size_t length) const {
  return static_cast<std::size_t>(std::ceil(match.reach_fraction * static_cast<double>(length)));
}

json to_json(const Config& c) {
  return json{
      {"preprocess",
       {{"resample_spacing", c.preprocess.resample_spacing},
        {"dedupe_eps", c.preprocess.dedupe_eps}}},
      {"match",
       {{"angle_weight", c.match.angle_weight},
        {"reach_fraction", c.match.reach_fraction},
        {"lower_bound", c.match.lower_bound}}},
      {"spatial",
       {{"shiro_min_width_frac", c.spatial.shiro_min_width_frac},
        {"shiro_max_height_frac", c.spatial.shiro_max_height_frac},
        {"shiro_max_centroid_frac", c.spatial.shiro_max_centroid_frac},
        {"ec_eps", c.spatial.ec_eps}}},
      {"cluster",
       {{"threshold", std::isinf(c.cluster.threshold) ? json("inf") : json(c.cluster.threshold)}}},
      {"recognize",
       {{"reject_threshold", c.recognize.reject_threshold},
        {"group_penalty", c.recognize.group_penalty},
        {"region_penalty", c.recognize.region_penalty}}},
  };
}

namespace {

template <typename T>
void read_key(const json& section, const std::string& prefix, const char* key, T& out,
              std::set<std::string>& seen) {
  if (!section.contains(key)) return;
  seen.insert(key);
  try {
    out = section.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error("config: bad value for " + prefix + "." + key);
  }
}

void reject_unknown(const json& section, const std::string& prefix,
                    const std::set<std::string>& seen) {
  for (const auto& [key, value] : section.items()) {
    if (!seen.contains(key)) throw Error("config: unknown key " + prefix + "." + key);
  }
}

}  // namespace

Config config_from_json(const json& j) {
  Config c;
  if (!j.is_object()) throw Error("config: expected a JSON object");
  const std::set<std::string> sections{"preprocess", "match", "spatial", "cluster", "recognize"};
  for (const auto& [key, value] : j.items()) {
    if (!sections.contains(key)) throw Error("config: unknown section " + key);
    if (!value.is_object()) throw Error("config: section " + key + " must be an object");
  }
  std::set<std::string> seen;
  if (j.contains("preprocess")) {
    const json& s = j["preprocess"];
    seen.clear();
    read_key(s, "preprocess", "resample_spacing", c.preprocess.resample_spacing, seen);
    read_key(s, "preprocess", "dedupe_eps", c.preprocess.dedupe_eps, seen);
    reject_unknown(s, "preprocess", seen);
  }
  if (j.contains("match")) {
    const json& s = j["match"];
    seen.clear();
    read_key(s, "match", "angle_weight", c.match.angle_weight, seen);
    read_key(s, "match", "reach_fraction", c.match.reach_fraction, seen);
    read_key(s, "match", "lower_bound", c.match.lower_bound, seen);
    reject_unknown(s, "match", seen);
  }
  if (j.contains("spatial")) {
    const json& s = j["spatial"];
    seen.clear();
    read_key(s, "spatial", "shiro_min_width_frac", c.spatial.shiro_min_width_frac, seen);
    read_key(s, "spatial", "shiro_max_height_frac", c.spatial.shiro_max_height_frac, seen);
    read_key(s, "spatial", "shiro_max_centroid_frac", c.spatial.shiro_max_centroid_frac, seen);
    read_key(s, "spatial", "ec_eps", c.spatial.ec_eps, seen);
    reject_unknown(s, "spatial", seen);
  }
  if (j.contains("cluster")) {
    const json& s = j["cluster"];
    seen.clear();
    if (s.contains("threshold") && s["threshold"] == "inf") {
      seen.insert("threshold");
      c.cluster.threshold = std::numeric_limits<double>::infinity();
    } else {
      read_key(s, "cluster", "threshold", c.cluster.threshold, seen);
    }
    reject_unknown(s, "cluster", seen);
  }
  if (j.contains("recognize")) {
    const json& s = j["recognize"];
    seen.clear();
    read_key(s, "recognize", "reject_threshold", c.recognize.reject_threshold, seen);
    read_key(s, "recognize", "group_penalty", c.recognize.group_penalty, seen);
    read_key(s, "recognize", "region_penalty", c.recognize.region_penalty, seen);
    reject_unknown(s, "recognize", seen);
  }

  if (!(c.preprocess.resample_spacing > 0.0)) throw Error("config: resample_spacing must be > 0");
  if (!(c.preprocess.dedupe_eps >= 0.0)) throw Error("config: dedupe_eps must be >= 0");
  if (!(c.match.angle_weight >= 0.0)) throw Error("config: angle_weight must be >= 0");
  if (!(c.match.reach_fraction >= 0.0)) throw Error("config: reach_fraction must be >= 0");
  if (!(c.cluster.threshold >= 0.0)) throw Error("config: cluster threshold must be >= 0");
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace inkmatch
