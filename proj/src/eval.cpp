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


#include "inkmatch/eval.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <set>
#include <stdexcept>

#include "inkmatch/recognizer.hpp"
#include "inkmatch/templates.hpp"

namespace inkmatch {

namespace {

std::vector<int> shuffled(std::vector<int> v, std::uint64_t seed) {
  std::sort(v.begin(), v.end());
  // Explicit Fisher-Yates: std::shuffle's sequence is implementation-defined.
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
  return v;
}

Dataset subset(const Dataset& dataset, const std::set<int>& writers) {
  Dataset d;
  d.class_count = dataset.class_count;
  for (const InkSymbol& s : dataset.symbols) {
    if (s.writer && writers.contains(*s.writer)) d.symbols.push_back(s);
  }
  d.writer_ids = writers;
  return d;
}

void finalize(Report& r) {
  r.error_rate = r.total == 0 ? 0.0 : 100.0 * static_cast<double>(r.misrecognized + r.rejected) / static_cast<double>(r.total);
}

}  // namespace

std::vector<std::vector<int>> partition_writers(const std::vector<int>& writers, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error("fold count must be positive");
  if (writers.size() < k) throw Error("fewer writers than folds");
  const std::vector<int> order = shuffled(writers, seed);
  std::vector<std::vector<int>> folds(k);
  for (std::size_t i = 0; i < order.size(); ++i) folds[i % k].push_back(order[i]);
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

Report evaluate_split(const Dataset& dataset, const std::vector<int>& train, const std::vector<int>& test,
                      const Config& config) {
  const std::set<int> train_set(train.begin(), train.end());
  const std::set<int> test_set(test.begin(), test.end());
  for (int w : test_set) {
    if (train_set.contains(w)) throw std::logic_error("writer " + std::to_string(w) + " in both partitions");
  }
  const Dataset train_data = subset(dataset, train_set);
  const Dataset test_data = subset(dataset, test_set);
  if (train_data.symbols.empty()) throw Error("training partition is empty");
  if (test_data.symbols.empty()) throw Error("test partition is empty");

  const Model model = build_model(train_data, config);
  const auto classes = static_cast<Index>(dataset.class_count);

  Report r;
  r.train_symbols = train_data.symbols.size();
  r.train_writers.assign(train_set.begin(), train_set.end());
  r.test_writers.assign(test_set.begin(), test_set.end());
  r.confusion = Eigen::MatrixXi::Zero(classes, classes + 1);
  double seconds = 0.0;
  for (const InkSymbol& s : test_data.symbols) {
    if (!s.label) throw Error("test symbol without label");
    const auto start = std::chrono::steady_clock::now();
    const RecognitionResult res = recognize(s, model, 1);
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.dtw_calls += res.dtw_calls;
    r.candidates += res.candidates;
    ++r.total;
    if (res.rejected) {
      ++r.rejected;
      ++r.confusion(*s.label, classes);
    } else {
      const int predicted = res.ranked.front().label;
      ++r.confusion(*s.label, predicted);
      if (predicted == *s.label) {
        ++r.correct;
      } else {
        ++r.misrecognized;
      }
    }
  }
  r.mean_time_per_char = seconds / static_cast<double>(r.total);
  finalize(r);
  return r;
}

Report dichotomous_eval(const Dataset& dataset, const EvalOptions& options) {
  const std::vector<int> writers(dataset.writer_ids.begin(), dataset.writer_ids.end());
  const std::size_t need = options.train_writers + std::max<std::size_t>(options.test_writers, 1);
  if (options.train_writers == 0 || writers.size() < need)
    throw Error("insufficient writers: have " + std::to_string(writers.size()) + ", need " + std::to_string(need));
  const std::vector<int> order = shuffled(writers, options.seed);
  const std::size_t test_end = options.test_writers == 0 ? order.size() : need;
  const std::vector<int> train(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(options.train_writers));
  const std::vector<int> test(order.begin() + static_cast<std::ptrdiff_t>(options.train_writers),
                              order.begin() + static_cast<std::ptrdiff_t>(test_end));
  Report r = evaluate_split(dataset, train, test, options.config);
  r.protocol = "dichotomous";
  return r;
}

Report kfold_cv(const Dataset& dataset, const EvalOptions& options) {
  if (options.folds < 2) throw Error("k-fold cross-validation needs K >= 2");
  const std::vector<int> writers(dataset.writer_ids.begin(), dataset.writer_ids.end());
  if (writers.size() < options.folds)
    throw Error("insufficient writers: " + std::to_string(writers.size()) + " for " + std::to_string(options.folds) + " folds");
  const auto folds = partition_writers(writers, options.folds, options.seed);

  auto run_fold = [&](std::size_t f) {
    std::vector<int> train;
    for (std::size_t g = 0; g < folds.size(); ++g) {
      if (g != f) train.insert(train.end(), folds[g].begin(), folds[g].end());
    }
    return evaluate_split(dataset, train, folds[f], options.config);
  };

  std::vector<Report> fold_reports(folds.size());
  if (options.parallel) {
    std::vector<std::future<Report>> pending;
    for (std::size_t f = 0; f < folds.size(); ++f) pending.push_back(std::async(std::launch::async, run_fold, f));
    for (std::size_t f = 0; f < folds.size(); ++f) fold_reports[f] = pending[f].get();
  } else {
    for (std::size_t f = 0; f < folds.size(); ++f) fold_reports[f] = run_fold(f);
  }

  Report r;
  r.protocol = "kfold";
  const auto classes = static_cast<Index>(dataset.class_count);
  r.confusion = Eigen::MatrixXi::Zero(classes, classes + 1);
  double time_sum = 0.0;
  double error_sum = 0.0;
  for (const Report& f : fold_reports) {
    r.total += f.total;
    r.correct += f.correct;
    r.misrecognized += f.misrecognized;
    r.rejected += f.rejected;
    r.confusion += f.confusion;
    r.dtw_calls += f.dtw_calls;
    r.candidates += f.candidates;
    time_sum += f.mean_time_per_char * static_cast<double>(f.total);
    error_sum += f.error_rate;
    r.test_writers.insert(r.test_writers.end(), f.test_writers.begin(), f.test_writers.end());
  }
  std::sort(r.test_writers.begin(), r.test_writers.end());
  r.mean_time_per_char = time_sum / static_cast<double>(r.total);
  r.mean_fold_error_rate = error_sum / static_cast<double>(fold_reports.size());
  r.folds = std::move(fold_reports);
  finalize(r);
  return r;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json confusion = nlohmann::json::array();
  for (Index i = 0; i < r.confusion.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < r.confusion.cols(); ++j) row.push_back(r.confusion(i, j));
    confusion.push_back(std::move(row));
  }
  nlohmann::json j{{"protocol", r.protocol},
                   {"train_symbols", r.train_symbols},
                   {"total", r.total},
                   {"correct", r.correct},
                   {"misrecognized", r.misrecognized},
                   {"rejected", r.rejected},
                   {"error_rate", r.error_rate},
                   {"mean_time_per_char", r.mean_time_per_char},
                   {"dtw_calls", r.dtw_calls},
                   {"candidates", r.candidates},
                   {"train_writers", r.train_writers},
                   {"test_writers", r.test_writers},
                   {"confusion", std::move(confusion)}};
  if (!r.folds.empty()) {
    j["mean_fold_error_rate"] = r.mean_fold_error_rate;
    nlohmann::json folds = nlohmann::json::array();
    for (const Report& f : r.folds) folds.push_back(report_to_json(f));
    j["folds"] = std::move(folds);
  }
  return j;
}

}  // namespace inkmatch
