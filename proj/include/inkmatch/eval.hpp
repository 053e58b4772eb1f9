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


#ifndef INKMATCH_EVAL_HPP
#define INKMATCH_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "inkmatch/config.hpp"
#include "inkmatch/types.hpp"

namespace inkmatch {

struct EvalOptions {
  Config config;
  std::uint64_t seed = 42;
  /// Dichotomous protocol: training writers, and test writers (0 = all the rest).
  std::size_t train_writers = 15;
  std::size_t test_writers = 10;
  /// K-fold protocol.
  std::size_t folds = 5;
  /// Run folds on separate threads.
  bool parallel = true;
};

struct Report {
  std::string protocol;
  /// Symbols used for training; `total` counts test symbols.
  std::size_t train_symbols = 0;
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t misrecognized = 0;
  std::size_t rejected = 0;
  /// (misrecognized + rejected) / total * 100.
  double error_rate = 0.0;
  /// Wall-clock seconds per recognized character.
  double mean_time_per_char = 0.0;
  /// class_count x (class_count + 1): rows are true labels, columns predicted
  /// labels, the last column counts rejections.
  Eigen::MatrixXi confusion;
  std::size_t dtw_calls = 0;
  std::size_t candidates = 0;
  std::vector<int> train_writers;
  std::vector<int> test_writers;

  /// K-fold only: per-fold reports and their unweighted mean error rate.
  std::vector<Report> folds;
  double mean_fold_error_rate = 0.0;
};

/// Shuffles the writer ids with `seed` and deals them into `k` near-equal
/// folds (sizes differ by at most one).
std::vector<std::vector<int>> partition_writers(const std::vector<int>& writers, std::size_t k, std::uint64_t seed);

/// Trains on `train` writers' symbols and tests on `test` writers' symbols.
/// Throws std::logic_error if the writer sets overlap.
Report evaluate_split(const Dataset& dataset, const std::vector<int>& train, const std::vector<int>& test,
                      const Config& config);

/// Writer-disjoint train/test split of the writers.
Report dichotomous_eval(const Dataset& dataset, const EvalOptions& options);

/// Writer-level K-fold cross-validation; each fold is tested exactly once.
Report kfold_cv(const Dataset& dataset, const EvalOptions& options);

nlohmann::json report_to_json(const Report& report);

}  // namespace inkmatch

#endif  // INKMATCH_EVAL_HPP
