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

#include "inkmatch/types.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace inkmatch {

Stroke::Stroke(Points points, std::vector<double> times)
    : xy(std::move(points)), t(std::move(times)) {}

Point Stroke::point(Index i) const {
  Point p{xy(i, 0), xy(i, 1), std::nullopt};
  if (has_time()) p.t = t[static_cast<std::size_t>(i)];
  return p;
}

void validate_stroke(const Stroke& stroke) {
  if (stroke.size() == 0) throw Error("stroke has no points");
  if (!stroke.xy.allFinite()) throw Error("non-finite coordinate");
  if (stroke.has_time()) {
    if (static_cast<Index>(stroke.t.size()) != stroke.size())
      throw Error("timestamp count does not match point count");
    for (double v : stroke.t) {
      if (!std::isfinite(v) || v < 0.0) throw Error("negative or non-finite timestamp");
    }
  }
}

void validate_dataset(const Dataset& dataset) {
  if (dataset.symbols.empty()) throw Error("empty dataset");
  if (dataset.class_count == 0) throw Error("class count must be positive");
  for (std::size_t i = 0; i < dataset.symbols.size(); ++i) {
    const InkSymbol& s = dataset.symbols[i];
    const std::string where = "symbol " + std::to_string(i) + ": ";
    if (s.strokes.empty()) throw Error(where + "no strokes");
    for (const Stroke& stroke : s.strokes) {
      try {
        validate_stroke(stroke);
      } catch (const Error& e) {
        throw Error(where + e.what());
      }
    }
    if (s.label && (*s.label < 0 || static_cast<std::size_t>(*s.label) >= dataset.class_count))
      throw Error(where + "label " + std::to_string(*s.label) + " outside class range [0, " +
                  std::to_string(dataset.class_count) + ")");
    if (!s.writer) throw Error(where + "missing writer id");
    if (!dataset.writer_ids.contains(*s.writer))
      throw Error(where + "writer id not registered");
  }
}

Dataset make_dataset(std::vector<InkSymbol> symbols, std::size_t class_count) {
  Dataset d;
  d.symbols = std::move(symbols);
  if (class_count == 0) {
    int max_label = -1;
    for (const InkSymbol& s : d.symbols) {
      if (s.label) max_label = std::max(max_label, *s.label);
    }
    class_count = static_cast<std::size_t>(max_label + 1);
    if (class_count == 0) class_count = 1;
  }
  d.class_count = class_count;
  for (const InkSymbol& s : d.symbols) {
    if (s.writer) d.writer_ids.insert(*s.writer);
  }
  validate_dataset(d);
  return d;
}

}  // namespace inkmatch
