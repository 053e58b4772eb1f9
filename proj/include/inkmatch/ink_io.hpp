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


#ifndef INKMATCH_INK_IO_HPP
#define INKMATCH_INK_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "inkmatch/types.hpp"
#include "json.hpp"

namespace inkmatch {

// Ink file format: UTF-8, one symbol per line,
//   {"label": int|null, "writer": int|null, "strokes": [[[x,y],[x,y],...], ...]}
// A point may carry a third element, its timestamp in seconds. Blank lines are
// skipped.

/// Decodes one symbol object. Throws Error describing the malformed field.
InkSymbol symbol_from_json(const nlohmann::json& j);
nlohmann::json symbol_to_json(const InkSymbol& symbol);

/// `class_count` of 0 infers the class inventory from the labels present.
Dataset parse_dataset(std::istream& in, std::size_t class_count = 0);
Dataset load_dataset(const std::string& path, std::size_t class_count = 0);

void write_dataset(std::ostream& out, const Dataset& dataset);
void save_dataset(const Dataset& dataset, const std::string& path);

}  // namespace inkmatch

#endif  // INKMATCH_INK_IO_HPP
