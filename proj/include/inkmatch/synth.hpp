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


#ifndef INKMATCH_SYNTH_HPP
#define INKMATCH_SYNTH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "inkmatch/types.hpp"

namespace inkmatch {

/// Synthetic Devanagari-like ink: per class a seed of polylines in the unit
/// square (usually a headline plus hanging body strokes), perturbed per
/// sample and rendered as tablet-unit pen samples.
struct SynthOptions {
  std::size_t classes = 10;
  std::size_t writers = 20;
  std::size_t repeats = 2;
  /// Gaussian perturbation of seed vertices, unit-square units.
  double noise = 0.02;
  /// Randomly permute stroke order for every sample.
  bool shuffle_order = true;
  /// Probability a sample lifts the pen mid-way through its first body stroke.
  double split_probability = 0.2;
  std::uint64_t seed = 7;
};

struct SeedShape {
  std::vector<Points> strokes;
  bool has_headline = false;
};

std::vector<SeedShape> class_seeds(std::size_t classes, std::uint64_t seed);

Dataset make_synthetic_dataset(const SynthOptions& options);

}  // namespace inkmatch

#endif  // INKMATCH_SYNTH_HPP
