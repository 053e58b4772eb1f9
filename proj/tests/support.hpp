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


#ifndef INKMATCH_TESTS_SUPPORT_HPP
#define INKMATCH_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "inkmatch/types.hpp"

namespace inkmatch::test {

inline Stroke make_stroke(std::initializer_list<std::pair<double, double>> pts) {
  Points xy(static_cast<Index>(pts.size()), 2);
  Index i = 0;
  for (const auto& [x, y] : pts) {
    xy(i, 0) = x;
    xy(i, 1) = y;
    ++i;
  }
  return Stroke(std::move(xy));
}

inline InkSymbol make_symbol(std::vector<Stroke> strokes, std::optional<int> label = std::nullopt,
                             std::optional<int> writer = std::nullopt) {
  InkSymbol s;
  s.strokes = std::move(strokes);
  s.label = label;
  s.writer = writer;
  return s;
}

inline Eigen::VectorXd scalar_seq(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

inline Eigen::VectorXd random_seq(std::mt19937_64& rng, Index n, bool integral) {
  Eigen::VectorXd v(n);
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  std::uniform_int_distribution<int> small(0, 3);
  for (Index i = 0; i < n; ++i) v(i) = integral ? small(rng) : real(rng);
  return v;
}

/// Random-walk feature sequence of n rows in roughly the unit square.
inline FeatureSeq random_features(std::mt19937_64& rng, Index n) {
  std::normal_distribution<double> step(0.0, 0.05);
  std::uniform_real_distribution<double> start(0.2, 0.8);
  Points p(n + 1, 2);
  p(0, 0) = start(rng);
  p(0, 1) = start(rng);
  for (Index i = 1; i <= n; ++i) {
    p(i, 0) = p(i - 1, 0) + step(rng) + 0.02;
    p(i, 1) = p(i - 1, 1) + step(rng);
  }
  FeatureSeq f;
  f.items.resize(n, 3);
  for (Index i = 0; i < n; ++i) {
    f.items(i, 0) = p(i, 0);
    f.items(i, 1) = p(i, 1);
    f.items(i, 2) = std::atan2(p(i + 1, 1) - p(i, 1), p(i + 1, 0) - p(i, 0));
  }
  f.source_len = static_cast<std::size_t>(n + 1);
  return f;
}

}  // namespace inkmatch::test

#endif  // INKMATCH_TESTS_SUPPORT_HPP
