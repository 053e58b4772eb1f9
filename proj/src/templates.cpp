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


#include "inkmatch/templates.hpp"

#include <cmath>
#include <limits>

#include "inkmatch/preprocess.hpp"
#include "inkmatch/spatial.hpp"

namespace inkmatch {

std::map<std::size_t, std::vector<std::size_t>> group_by_stroke_count(const std::vector<InkSymbol>& symbols) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < symbols.size(); ++i) groups[symbols[i].stroke_count()].push_back(i);
  return groups;
}

FeatureSeq merge_strokes(const FeatureSeq& a, const FeatureSeq& b, const FeatureDistance& metric,
                         double weight_a, double weight_b, Index length) {
  if (a.empty() || b.empty()) throw Error("merge of an empty stroke");
  if (!(weight_a > 0.0) || !(weight_b > 0.0)) throw Error("merge weights must be positive");
  const auto alignment = dtw(a.items, b.items, metric);
  const double total = weight_a + weight_b;
  const double wa = weight_a / total;
  const double wb = weight_b / total;

  FeatureSeq averaged;
  averaged.items.resize(static_cast<Index>(alignment.path.size()), 3);
  for (std::size_t t = 0; t < alignment.path.size(); ++t) {
    const auto [k, l] = alignment.path[t];
    const auto row = static_cast<Index>(t);
    averaged.items.block<1, 2>(row, 0) = wa * a.items.block<1, 2>(k, 0) + wb * b.items.block<1, 2>(l, 0);
    const double alpha = a.items(k, 2);
    const double beta = b.items(l, 2);
    const double sx = wa * std::cos(alpha) + wb * std::cos(beta);
    const double sy = wa * std::sin(alpha) + wb * std::sin(beta);
    if (alpha == beta) {
      averaged.items(row, 2) = alpha;
    } else if (std::hypot(sx, sy) < 1e-12) {
      // Diametrically opposed: keep the heavier side's angle.
      averaged.items(row, 2) = wb > wa ? beta : alpha;
    } else {
      averaged.items(row, 2) = wrap_angle(std::atan2(sy, sx));
    }
  }
  averaged.source_len = alignment.path.size() + 1;
  const Index target = length > 0 ? length : a.size();
  if (averaged.size() == target) return averaged;
  return resample_features(averaged, target);
}

Clustering cluster_strokes(const std::vector<FeatureSeq>& strokes, double threshold,
                           const FeatureDistance& metric) {
  if (strokes.empty()) throw Error("clustering needs at least one stroke");
  if (!(threshold >= 0.0)) throw Error("cluster threshold must be non-negative");
  const std::size_t n = strokes.size();

  Eigen::MatrixXd linkage = Eigen::MatrixXd::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dtw_cost(strokes[i].items, strokes[j].items, metric).delta;
      linkage(static_cast<Index>(i), static_cast<Index>(j)) = d;
      linkage(static_cast<Index>(j), static_cast<Index>(i)) = d;
    }
  }

  Clustering out;
  std::vector<Cluster> slots(n);
  std::vector<bool> active(n, true);
  for (std::size_t i = 0; i < n; ++i) slots[i] = {strokes[i], 1, {i}};
  std::size_t remaining = n;

  while (remaining > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        const double d = linkage(static_cast<Index>(i), static_cast<Index>(j));
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (!(best <= threshold)) break;

    Cluster& keep = slots[bi];
    Cluster& gone = slots[bj];
    keep.features = merge_strokes(keep.features, gone.features, metric, static_cast<double>(keep.member_count),
                                  static_cast<double>(gone.member_count), keep.features.size());
    keep.member_count += gone.member_count;
    keep.members.insert(keep.members.end(), gone.members.begin(), gone.members.end());
    std::sort(keep.members.begin(), keep.members.end());
    active[bj] = false;
    --remaining;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = std::min(linkage(static_cast<Index>(bi), static_cast<Index>(k)),
                                linkage(static_cast<Index>(bj), static_cast<Index>(k)));
      linkage(static_cast<Index>(bi), static_cast<Index>(k)) = d;
      linkage(static_cast<Index>(k), static_cast<Index>(bi)) = d;
    }
    out.merges.push_back({bi, bj, best, remaining});
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (active[i]) out.clusters.push_back(std::move(slots[i]));
  }
  return out;
}

Model build_model(const Dataset& dataset, const Config& config) {
  if (dataset.symbols.empty()) throw Error("empty dataset");
  if (dataset.class_count == 0) throw Error("dataset has no classes");
  std::vector<std::vector<std::size_t>> by_class(dataset.class_count);
  for (std::size_t i = 0; i < dataset.symbols.size(); ++i) {
    const auto& label = dataset.symbols[i].label;
    if (!label) throw Error("symbol " + std::to_string(i) + " is unlabeled");
    if (*label < 0 || static_cast<std::size_t>(*label) >= dataset.class_count)
      throw Error("symbol " + std::to_string(i) + " has an out-of-range label");
    by_class[static_cast<std::size_t>(*label)].push_back(i);
  }

  const FeatureDistance metric{config.match.angle_weight};
  Model model;
  model.config = config;
  model.class_count = dataset.class_count;

  for (std::size_t c = 0; c < dataset.class_count; ++c) {
    if (by_class[c].empty()) throw Error("class " + std::to_string(c) + " has no training symbols");
    std::vector<InkSymbol> members;
    members.reserve(by_class[c].size());
    for (std::size_t i : by_class[c]) members.push_back(dataset.symbols[i]);

    ClassTemplates entry;
    entry.label = static_cast<int>(c);
    for (const auto& [count, indices] : group_by_stroke_count(members)) {
      std::array<std::vector<FeatureSeq>, kRegionCount> buckets;
      for (std::size_t i : indices) {
        PreparedSymbol prepared;
        try {
          prepared = prepare_symbol(members[i], config);
        } catch (const Error& e) {
          throw Error("class " + std::to_string(c) + ", symbol " + std::to_string(by_class[c][i]) + ": " + e.what());
        }
        const SymbolLayout layout = layout_symbol(prepared.strokes, config.spatial);
        for (std::size_t s = 0; s < prepared.features.size(); ++s)
          buckets[static_cast<std::size_t>(layout.regions[s])].push_back(std::move(prepared.features[s]));
      }
      GroupTemplates group;
      for (Region r : kAllRegions) {
        const auto& bucket = buckets[static_cast<std::size_t>(r)];
        if (bucket.empty()) continue;
        for (Cluster& cl : cluster_strokes(bucket, config.cluster.threshold, metric).clusters) {
          Template t;
          t.label = entry.label;
          t.group = count;
          t.region = r;
          t.member_count = cl.member_count;
          t.features = std::move(cl.features);
          group.at(r).push_back(std::move(t));
        }
      }
      entry.groups.emplace(count, std::move(group));
    }
    model.classes.push_back(std::move(entry));
  }
  model.reindex();
  return model;
}

}  // namespace inkmatch
