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

#ifndef INKMATCH_TYPES_HPP
#define INKMATCH_TYPES_HPP

#include <Eigen/Core>

#include <cmath>
#include <concepts>
#include <cstddef>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace inkmatch {

// Dense storage. Strokes are (l x 2) point matrices, feature sequences are
// (l-1 x 3) matrices of (px, py, alpha) rows. Both are row-major so a row is
// one sample.
template <typename Scalar>
using PointsT = Eigen::Matrix<Scalar, Eigen::Dynamic, 2, Eigen::RowMajor>;
template <typename Scalar>
using FeatureMatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, 3, Eigen::RowMajor>;

using Points = PointsT<double>;
using FeatureMatrix = FeatureMatrixT<double>;
using Vec2 = Eigen::Vector2d;
using Index = Eigen::Index;

/// Per-stroke feature sequence: row i is (p_i.x, p_i.y, angle from p_i to
/// p_{i+1}), angle in (-pi, pi]. `source_len` is the stroke's point count.
template <typename Scalar>
struct FeatureSeqT {
  FeatureMatrixT<Scalar> items;
  std::size_t source_len = 0;

  Index size() const { return items.rows(); }
  bool empty() const { return items.rows() == 0; }

  friend bool operator==(const FeatureSeqT& a, const FeatureSeqT& b) {
    return a.source_len == b.source_len && a.items.rows() == b.items.rows() && a.items == b.items;
  }
};

using FeatureSeq = FeatureSeqT<double>;

/// Wraps an angle (difference) into (-pi, pi].
template <std::floating_point Scalar>
Scalar wrap_angle(Scalar a) {
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  Scalar r = std::remainder(a, two_pi);
  if (r <= -std::numbers::pi_v<Scalar>) r += two_pi;
  return r;
}

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ink file parse failure; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

/// One pen-tip sample. `t` is seconds since symbol start, when recorded.
struct Point {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> t;
};

/// Pen-down to pen-up trajectory. Timestamps are either absent (empty) or one
/// per point.
struct Stroke {
  Points xy;
  std::vector<double> t;

  Stroke() = default;
  explicit Stroke(Points points, std::vector<double> times = {});

  Index size() const { return xy.rows(); }
  bool has_time() const { return !t.empty(); }
  Point point(Index i) const;

  friend bool operator==(const Stroke& a, const Stroke& b) {
    return a.xy == b.xy && a.t == b.t;
  }
};

/// One handwritten character instance, strokes in writing order.
struct InkSymbol {
  std::vector<Stroke> strokes;
  std::optional<int> label;
  std::optional<int> writer;

  std::size_t stroke_count() const { return strokes.size(); }
  friend bool operator==(const InkSymbol&, const InkSymbol&) = default;
};

struct Dataset {
  std::vector<InkSymbol> symbols;
  std::size_t class_count = 0;
  std::set<int> writer_ids;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Throws Error when the stroke has no points, non-finite coordinates, or
/// negative / mis-sized timestamps.
void validate_stroke(const Stroke& stroke);

/// Checks symbol and dataset invariants, naming the offending symbol index.
void validate_dataset(const Dataset& dataset);

/// Builds `writer_ids` and validates. `class_count` of 0 means infer it as
/// max label + 1.
Dataset make_dataset(std::vector<InkSymbol> symbols, std::size_t class_count = 0);

}  // namespace inkmatch

#endif  // INKMATCH_TYPES_HPP
