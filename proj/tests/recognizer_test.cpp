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


#include <algorithm>
#include <random>

#include "doctest.h"
#include "inkmatch/recognizer.hpp"
#include "inkmatch/synth.hpp"
#include "inkmatch/templates.hpp"
#include "support.hpp"

using namespace inkmatch;
using inkmatch::test::make_stroke;
using inkmatch::test::make_symbol;

namespace {

Dataset training_set() {
  SynthOptions o;
  o.classes = 6;
  o.writers = 4;
  o.repeats = 1;
  o.seed = 31;
  return make_synthetic_dataset(o);
}

const Dataset& data() {
  static const Dataset d = training_set();
  return d;
}

const Model& model_at(double threshold) {
  static std::map<double, Model> cache;
  auto it = cache.find(threshold);
  if (it == cache.end()) {
    Config c;
    c.cluster.threshold = threshold;
    it = cache.emplace(threshold, build_model(data(), c)).first;
  }
  return it->second;
}

InkSymbol unlabeled(InkSymbol s) {
  s.label.reset();
  s.writer.reset();
  return s;
}

}  // namespace

TEST_CASE("a training symbol is recognized as itself") {
  const Model& exact = model_at(0.0);
  for (const InkSymbol& s : data().symbols) {
    const RecognitionResult r = recognize(unlabeled(s), exact, 3);
    REQUIRE_FALSE(r.ranked.empty());
    CHECK(r.ranked.front().label == *s.label);
    CHECK(r.ranked.front().score == 0.0);
    CHECK(r.ranked.size() <= 3);
    CHECK_FALSE(r.rejected);
    CHECK(r.per_stroke.size() == s.stroke_count());
    CHECK(r.regions.size() == s.stroke_count());
  }
  const Model& clustered = model_at(0.05);
  std::size_t hits = 0;
  for (const InkSymbol& s : data().symbols) hits += recognize(s, clustered, 1).ranked.front().label == *s.label;
  CHECK(hits == data().symbols.size());
}

TEST_CASE("ranked list is sorted and respects topk") {
  const RecognitionResult all = recognize(data().symbols[0], model_at(0.05), 0);
  CHECK(all.ranked.size() >= 2);
  CHECK(std::is_sorted(all.ranked.begin(), all.ranked.end(),
                       [](const ClassScore& a, const ClassScore& b) { return a.score < b.score; }));
  const RecognitionResult two = recognize(data().symbols[0], model_at(0.05), 2);
  REQUIRE(two.ranked.size() == 2);
  CHECK(two.ranked[0] == all.ranked[0]);
  CHECK(two.ranked[1] == all.ranked[1]);
  CHECK(two.candidates >= two.dtw_calls);
  CHECK(two.dtw_calls > 0);
}

TEST_CASE("stroke order does not change the ranking") {
  std::mt19937_64 rng(77);
  const Model& m = model_at(0.05);
  for (const InkSymbol& s : data().symbols) {
    const RecognitionResult base = recognize(s, m, 0);
    InkSymbol reversed = s;
    std::reverse(reversed.strokes.begin(), reversed.strokes.end());
    CHECK(recognize(reversed, m, 0).ranked == base.ranked);
    for (int p = 0; p < 3; ++p) {
      InkSymbol shuffled = s;
      std::shuffle(shuffled.strokes.begin(), shuffled.strokes.end(), rng);
      CHECK(recognize(shuffled, m, 0).ranked == base.ranked);
    }
  }
}

TEST_CASE("stroke count without a compatible group is rejected") {
  std::vector<Stroke> many;
  for (int i = 0; i < 9; ++i) many.push_back(make_stroke({{0.1 * i, 0}, {0.1 * i, 1}}));
  const RecognitionResult r = recognize(make_symbol(many), model_at(0.05), 5);
  CHECK(r.rejected);
  CHECK(r.reason == RejectReason::kNoCompatibleGroup);
  CHECK(r.ranked.empty());
}

TEST_CASE("neighbouring stroke-count groups are tried with a penalty") {
  const Model& m = model_at(0.05);
  std::size_t fallbacks = 0;
  for (const InkSymbol& s : data().symbols) {
    // One stroke more than the class was ever written with.
    const auto& groups = m.classes[static_cast<std::size_t>(*s.label)].groups;
    const std::size_t n = groups.rbegin()->first + 1;
    InkSymbol extra = s;
    while (extra.stroke_count() < n) extra.strokes.push_back(extra.strokes.back());
    for (const ClassScore& c : recognize(extra, m, 0).ranked) {
      if (c.label != *s.label) continue;
      ++fallbacks;
      CHECK(c.group == n - 1);
      CHECK(c.score >= m.config.recognize.group_penalty);
    }
  }
  CHECK(fallbacks == data().symbols.size());
}

TEST_CASE("score above the threshold is rejected but still ranked") {
  Model m = model_at(0.05);
  m.config.recognize.reject_threshold = -1.0;
  const RecognitionResult r = recognize(data().symbols[1], m, 3);
  CHECK(r.rejected);
  CHECK(r.reason == RejectReason::kScoreAboveThreshold);
  CHECK_FALSE(r.ranked.empty());
}

TEST_CASE("region fallback is penalized") {
  const Model& m = model_at(0.05);
  const InkSymbol& s = data().symbols[0];
  const RecognitionResult r = recognize(s, m, 0);
  for (const StrokeMatch& sm : r.per_stroke) {
    if (sm.matched_region == sm.region) {
      CHECK(sm.penalty == 0.0);
    } else {
      CHECK(sm.penalty == m.config.recognize.region_penalty);
    }
  }
}

TEST_CASE("recognize errors") {
  CHECK_THROWS_WITH_AS(recognize(InkSymbol{}, model_at(0.05), 1), "empty symbol", Error);
  Model empty;
  empty.class_count = 1;
  empty.classes.push_back({});
  CHECK_THROWS_AS(recognize(data().symbols[0], empty, 1), ModelError);
}
