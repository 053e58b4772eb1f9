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


#include "inkmatch/recognizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inkmatch/matching.hpp"
#include "inkmatch/preprocess.hpp"

namespace inkmatch {

namespace {

// Buckets tried for a stroke in region r: its own, then the rest of its row,
// then the other row.
std::array<std::vector<Region>, 3> fallback_tiers(Region r) {
  std::array<std::vector<Region>, 3> tiers;
  tiers[0].push_back(r);
  for (int col = 0; col < 3; ++col) {
    if (col != region_column(r)) tiers[1].push_back(make_region(region_row(r), col));
  }
  for (int col = 0; col < 3; ++col) tiers[2].push_back(make_region(1 - region_row(r), col));
  return tiers;
}

struct GroupScore {
  double score = std::numeric_limits<double>::infinity();
  std::vector<StrokeMatch> matches;
};

class Matcher {
 public:
  Matcher(const Model& model, const PreparedSymbol& prepared, const SymbolLayout& layout)
      : model_(model), prepared_(prepared), layout_(layout), metric_{model.config.match.angle_weight} {
    options_.prune = model.config.match.lower_bound;
    if (options_.prune && !prepared.features.empty())
      options_.band = static_cast<Index>(model.config.reach_for(static_cast<std::size_t>(prepared.features[0].size())));
  }

  GroupScore score_group(const GroupTemplates& group, double group_penalty) {
    GroupScore out;
    std::vector<double> costs;
    costs.reserve(prepared_.features.size());
    for (std::size_t s = 0; s < prepared_.features.size(); ++s) {
      const Region region = layout_.regions[s];
      const auto tiers = fallback_tiers(region);
      for (std::size_t tier = 0; tier < tiers.size(); ++tier) {
        candidates_.clear();
        lookup_.clear();
        for (Region r : tiers[tier]) {
          for (const Template& t : group.at(r)) {
            candidates_.push_back({t.id, &t.features});
            lookup_.push_back(&t);
          }
        }
        if (candidates_.empty()) continue;
        const NnResult nn = nn_search(prepared_.features[s], candidates_, metric_, options_);
        dtw_calls += nn.dtw_calls;
        candidate_count += nn.candidates;
        const NnHit& hit = nn.best();
        const Template* best = nullptr;
        for (const Template* t : lookup_) {
          if (t->id == hit.id) best = t;
        }
        const double penalty = tier == 0 ? 0.0 : model_.config.recognize.region_penalty;
        out.matches.push_back({s, region, best->region, hit.id, hit.delta, penalty});
        costs.push_back(hit.delta + penalty);
        break;
      }
    }
    if (costs.size() != prepared_.features.size()) return {};
    // Summing in sorted order keeps the score independent of stroke order.
    std::sort(costs.begin(), costs.end());
    double sum = 0.0;
    for (double c : costs) sum += c;
    out.score = sum / static_cast<double>(costs.size()) + group_penalty;
    return out;
  }

  std::size_t dtw_calls = 0;
  std::size_t candidate_count = 0;

 private:
  const Model& model_;
  const PreparedSymbol& prepared_;
  const SymbolLayout& layout_;
  FeatureDistance metric_;
  NnOptions options_;
  std::vector<Candidate> candidates_;
  std::vector<const Template*> lookup_;
};

}  // namespace

RecognitionResult recognize(const InkSymbol& symbol, const Model& model, std::size_t topk) {
  if (symbol.strokes.empty()) throw Error("empty symbol");
  if (model.template_count() == 0) throw ModelError("empty model");
  const PreparedSymbol prepared = prepare_symbol(symbol, model.config);
  const SymbolLayout layout = layout_symbol(prepared.strokes, model.config.spatial);
  const std::size_t n = prepared.strokes.size();

  RecognitionResult result;
  result.regions = layout.regions;
  result.shirorekha = layout.shirorekha;

  Matcher matcher(model, prepared, layout);
  struct Scored {
    ClassScore score;
    std::vector<StrokeMatch> matches;
  };
  std::vector<Scored> scored;
  for (const ClassTemplates& c : model.classes) {
    std::vector<std::pair<std::size_t, double>> groups;
    if (c.groups.contains(n)) {
      groups.emplace_back(n, 0.0);
    } else {
      if (n > 1 && c.groups.contains(n - 1)) groups.emplace_back(n - 1, model.config.recognize.group_penalty);
      if (c.groups.contains(n + 1)) groups.emplace_back(n + 1, model.config.recognize.group_penalty);
    }
    std::optional<Scored> best;
    for (const auto& [count, penalty] : groups) {
      GroupScore g = matcher.score_group(c.groups.at(count), penalty);
      if (!best || g.score < best->score.score) best = Scored{{c.label, g.score, count}, std::move(g.matches)};
    }
    if (best && std::isfinite(best->score.score)) scored.push_back(std::move(*best));
  }

  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.score.score != b.score.score) return a.score.score < b.score.score;
    return a.score.label < b.score.label;
  });
  result.dtw_calls = matcher.dtw_calls;
  result.candidates = matcher.candidate_count;

  if (scored.empty()) {
    result.rejected = true;
    result.reason = RejectReason::kNoCompatibleGroup;
    return result;
  }
  result.per_stroke = scored.front().matches;
  if (scored.front().score.score > model.config.recognize.reject_threshold) {
    result.rejected = true;
    result.reason = RejectReason::kScoreAboveThreshold;
  }
  const std::size_t keep = topk == 0 ? scored.size() : std::min(topk, scored.size());
  result.ranked.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) result.ranked.push_back(scored[i].score);
  return result;
}

}  // namespace inkmatch
