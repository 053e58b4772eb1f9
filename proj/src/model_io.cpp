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


#include <fstream>
#include <sstream>

#include "inkmatch/model.hpp"

namespace inkmatch {

using nlohmann::json;

std::size_t Model::template_count() const {
  std::size_t n = 0;
  for (const ClassTemplates& c : classes) {
    for (const auto& [count, group] : c.groups) {
      for (const auto& bucket : group.regions) n += bucket.size();
    }
  }
  return n;
}

void Model::reindex() {
  std::size_t next = 0;
  for (const ClassTemplates& c : classes) {
    if (c.label < 0 || static_cast<std::size_t>(c.label) >= class_count)
      throw ModelError("class label " + std::to_string(c.label) + " outside model class range");
  }
  for (ClassTemplates& c : classes) {
    for (auto& [count, group] : c.groups) {
      for (Region r : kAllRegions) {
        for (Template& t : group.at(r)) {
          if (t.label != c.label || t.group != count || t.region != r)
            throw ModelError("template key does not match its location in the model");
          if (t.member_count < 1) throw ModelError("template with zero members");
          if (t.features.empty()) throw ModelError("template with empty features");
          t.id = next++;
        }
      }
    }
  }
}

json model_to_json(const Model& model) {
  json classes = json::array();
  for (const ClassTemplates& c : model.classes) {
    json groups = json::array();
    for (const auto& [count, group] : c.groups) {
      json regions = json::object();
      for (Region r : kAllRegions) {
        const auto& bucket = group.at(r);
        if (bucket.empty()) continue;
        json list = json::array();
        for (const Template& t : bucket) {
          json rows = json::array();
          for (Index i = 0; i < t.features.size(); ++i)
            rows.push_back({t.features.items(i, 0), t.features.items(i, 1), t.features.items(i, 2)});
          list.push_back({{"id", t.id},
                          {"member_count", t.member_count},
                          {"source_len", t.features.source_len},
                          {"features", std::move(rows)}});
        }
        regions[std::string(region_name(r))] = std::move(list);
      }
      groups.push_back({{"strokes", count}, {"regions", std::move(regions)}});
    }
    classes.push_back({{"label", c.label}, {"groups", std::move(groups)}});
  }
  return json{{"version", Model::kFormatVersion},
              {"config", to_json(model.config)},
              {"class_count", model.class_count},
              {"classes", std::move(classes)}};
}

Model model_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("version")) throw ModelError("corrupt model: missing version");
    const int version = j.at("version").get<int>();
    if (version != Model::kFormatVersion)
      throw ModelError("model version mismatch: file has " + std::to_string(version) + ", expected " +
                       std::to_string(Model::kFormatVersion));
    Model m;
    m.config = config_from_json(j.at("config"));
    m.class_count = j.at("class_count").get<std::size_t>();
    for (const json& jc : j.at("classes")) {
      ClassTemplates c;
      c.label = jc.at("label").get<int>();
      for (const json& jg : jc.at("groups")) {
        const auto count = jg.at("strokes").get<std::size_t>();
        GroupTemplates g;
        for (const auto& [name, list] : jg.at("regions").items()) {
          const auto region = region_from_name(name);
          if (!region) throw ModelError("corrupt model: unknown region " + name);
          for (const json& jt : list) {
            Template t;
            t.id = jt.at("id").get<std::size_t>();
            t.label = c.label;
            t.group = count;
            t.region = *region;
            t.member_count = jt.at("member_count").get<std::size_t>();
            t.features.source_len = jt.at("source_len").get<std::size_t>();
            const json& rows = jt.at("features");
            t.features.items.resize(static_cast<Index>(rows.size()), 3);
            for (std::size_t i = 0; i < rows.size(); ++i) {
              if (rows[i].size() != 3) throw ModelError("corrupt model: feature row must have 3 values");
              for (Index c3 = 0; c3 < 3; ++c3)
                t.features.items(static_cast<Index>(i), c3) = rows[i].at(static_cast<std::size_t>(c3)).get<double>();
            }
            g.at(*region).push_back(std::move(t));
          }
        }
        if (!c.groups.emplace(count, std::move(g)).second)
          throw ModelError("corrupt model: duplicate stroke-count group");
      }
      m.classes.push_back(std::move(c));
    }
    if (m.template_count() == 0) throw ModelError("empty model");
    // Stored ids must be the canonical numbering.
    Model check = m;
    check.reindex();
    if (!(check == m)) throw ModelError("corrupt model: template ids out of order");
    return m;
  } catch (const json::exception& e) {
    throw ModelError(std::string("corrupt model: ") + e.what());
  } catch (const ModelError&) {
    throw;
  } catch (const Error& e) {
    throw ModelError(std::string("corrupt model: ") + e.what());
  }
}

void save_model(const Model& model, const std::string& path) {
  if (model.template_count() == 0) throw ModelError("empty model");
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write model " + path);
  out << model_to_json(model).dump() << '\n';
  if (!out) throw ModelError("write failed: " + path);
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("corrupt model: ") + e.what());
  }
  return model_from_json(j);
}

}  // namespace inkmatch
