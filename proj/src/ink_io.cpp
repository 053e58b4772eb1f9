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


#include "inkmatch/ink_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

namespace inkmatch {

using nlohmann::json;

namespace {

std::optional<int> optional_int(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer()) throw Error(std::string("\"") + key + "\" must be an integer or null");
  return j[key].get<int>();
}

Stroke stroke_from_json(const json& j, std::size_t index) {
  const std::string where = "stroke " + std::to_string(index) + ": ";
  if (!j.is_array()) throw Error(where + "expected an array of points");
  if (j.empty()) throw Error(where + "no points");
  Points xy(static_cast<Index>(j.size()), 2);
  std::vector<double> t;
  const bool timed = j[0].is_array() && j[0].size() == 3;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& p = j[i];
    if (!p.is_array() || (p.size() != 2 && p.size() != 3))
      throw Error(where + "point " + std::to_string(i) + " must be [x, y] or [x, y, t]");
    if ((p.size() == 3) != timed)
      throw Error(where + "mixed timed and untimed points");
    for (const json& v : p) {
      if (!v.is_number()) throw Error(where + "point " + std::to_string(i) + " has a non-numeric value");
    }
    xy(static_cast<Index>(i), 0) = p[0].get<double>();
    xy(static_cast<Index>(i), 1) = p[1].get<double>();
    if (timed) t.push_back(p[2].get<double>());
  }
  Stroke s(std::move(xy), std::move(t));
  try {
    validate_stroke(s);
  } catch (const Error& e) {
    throw Error(where + e.what());
  }
  return s;
}

}  // namespace

InkSymbol symbol_from_json(const json& j) {
  if (!j.is_object()) throw Error("symbol must be a JSON object");
  if (!j.contains("strokes")) throw Error("missing \"strokes\"");
  const json& strokes = j["strokes"];
  if (!strokes.is_array()) throw Error("\"strokes\" must be an array");
  if (strokes.empty()) throw Error("symbol has no strokes");
  InkSymbol s;
  s.label = optional_int(j, "label");
  s.writer = optional_int(j, "writer");
  s.strokes.reserve(strokes.size());
  for (std::size_t i = 0; i < strokes.size(); ++i) s.strokes.push_back(stroke_from_json(strokes[i], i));
  return s;
}

json symbol_to_json(const InkSymbol& symbol) {
  json strokes = json::array();
  for (const Stroke& stroke : symbol.strokes) {
    json points = json::array();
    for (Index i = 0; i < stroke.size(); ++i) {
      if (stroke.has_time())
        points.push_back({stroke.xy(i, 0), stroke.xy(i, 1), stroke.t[static_cast<std::size_t>(i)]});
      else
        points.push_back({stroke.xy(i, 0), stroke.xy(i, 1)});
    }
    strokes.push_back(std::move(points));
  }
  return json{{"label", symbol.label ? json(*symbol.label) : json(nullptr)},
              {"writer", symbol.writer ? json(*symbol.writer) : json(nullptr)},
              {"strokes", std::move(strokes)}};
}

Dataset parse_dataset(std::istream& in, std::size_t class_count) {
  std::vector<InkSymbol> symbols;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    try {
      symbols.push_back(symbol_from_json(j));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (symbols.empty()) throw Error("empty dataset");
  return make_dataset(std::move(symbols), class_count);
}

Dataset load_dataset(const std::string& path, std::size_t class_count) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_dataset(in, class_count);
}

void write_dataset(std::ostream& out, const Dataset& dataset) {
  for (const InkSymbol& s : dataset.symbols) out << symbol_to_json(s).dump() << '\n';
}

void save_dataset(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_dataset(out, dataset);
  if (!out) throw Error("write failed: " + path);
}

}  // namespace inkmatch
