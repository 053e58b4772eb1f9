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


#include <limits>
#include <random>

#include "doctest.h"
#include "inkmatch/preprocess.hpp"
#include "inkmatch/synth.hpp"
#include "inkmatch/templates.hpp"
#include "support.hpp"

using namespace inkmatch;
using inkmatch::test::make_stroke;
using inkmatch::test::make_symbol;
using inkmatch::test::random_features;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

FeatureSeq line_features(double y) {
  return extract_features(resample_to_count(make_stroke({{0, y}, {1, y}}), 11));
}

std::vector<std::size_t> bucket_sizes(const Model& m) {
  std::vector<std::size_t> out;
  for (const auto& c : m.classes)
    for (const auto& [count, g] : c.groups)
      for (Region r : kAllRegions) out.push_back(g.at(r).size());
  return out;
}

Dataset synth(std::size_t classes, std::size_t writers, std::size_t repeats, std::uint64_t seed = 7) {
  SynthOptions o;
  o.classes = classes;
  o.writers = writers;
  o.repeats = repeats;
  o.seed = seed;
  return make_synthetic_dataset(o);
}

}  // namespace

TEST_CASE("group_by_stroke_count") {
  std::vector<InkSymbol> ka;
  for (std::size_t n : {2, 2, 3, 3, 3, 4}) {
    std::vector<Stroke> strokes;
    for (std::size_t i = 0; i < n; ++i) strokes.push_back(make_stroke({{0, double(i)}, {1, double(i)}}));
    ka.push_back(make_symbol(strokes, 0, 1));
  }
  const auto groups = group_by_stroke_count(ka);
  REQUIRE(groups.size() == 3);
  CHECK(groups.at(2) == std::vector<std::size_t>{0, 1});
  CHECK(groups.at(3) == std::vector<std::size_t>{2, 3, 4});
  CHECK(groups.at(4) == std::vector<std::size_t>{5});

  const std::vector<InkSymbol> same(3, ka[0]);
  CHECK(group_by_stroke_count(same).size() == 1);
  CHECK(group_by_stroke_count({}).empty());
}

TEST_CASE("merge_strokes") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const FeatureSeq x = random_features(rng, 30);
    const FeatureSeq m = merge_strokes(x, x, FeatureDistance{});
    REQUIRE(m.size() == x.size());
    CHECK(m.items.isApprox(x.items, 1e-12));
  }
  const FeatureSeq mid = merge_strokes(line_features(0), line_features(2), FeatureDistance{});
  REQUIRE(mid.size() == 10);
  for (Index k = 0; k < mid.size(); ++k) {
    CHECK(mid.items(k, 0) == doctest::Approx(0.1 * double(k)));
    CHECK(mid.items(k, 1) == doctest::Approx(1.0));
    CHECK(mid.items(k, 2) == doctest::Approx(0.0));
  }
  const FeatureSeq weighted = merge_strokes(line_features(0), line_features(2), FeatureDistance{}, 3.0, 1.0);
  CHECK(weighted.items(4, 1) == doctest::Approx(0.5));
  CHECK(merge_strokes(line_features(0), line_features(2), FeatureDistance{}, 1, 1, 4).size() == 4);
  CHECK_THROWS_AS(merge_strokes(line_features(0), line_features(1), FeatureDistance{}, 0.0, 1.0), Error);
}

TEST_CASE("merged stroke lies between its parents") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const FeatureSeq a = random_features(rng, 20);
    const FeatureSeq b = random_features(rng, 20);
    const FeatureSeq m = merge_strokes(a, b, FeatureDistance{});
    const double ab = dtw_distance(a, b).delta;
    CHECK(dtw_distance(a, m).delta <= ab + 1e-9);
    CHECK(dtw_distance(b, m).delta <= ab + 1e-9);
  }
}

TEST_CASE("cluster_strokes extremes") {
  std::vector<FeatureSeq> lines;
  for (int i = 0; i < 6; ++i) lines.push_back(line_features(0.1 * i));
  const Clustering none = cluster_strokes(lines, 0.0);
  CHECK(none.clusters.size() == 6);
  CHECK(none.merges.empty());
  const Clustering all = cluster_strokes(lines, kInf);
  REQUIRE(all.clusters.size() == 1);
  CHECK(all.clusters[0].member_count == 6);
  CHECK(all.clusters[0].members == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  CHECK(all.clusters[0].features.size() == 10);
  CHECK_THROWS_AS(cluster_strokes({}, 1.0), Error);
  CHECK_THROWS_AS(cluster_strokes(lines, -1.0), Error);
}

TEST_CASE("single linkage over a chain") {
  // Neighbouring lines are 0.01 apart in Delta, the two groups 0.25 apart.
  std::vector<FeatureSeq> lines{line_features(0.0), line_features(0.1), line_features(0.2), line_features(0.7),
                                line_features(0.8)};
  const Clustering c = cluster_strokes(lines, 0.012);
  REQUIRE(c.clusters.size() == 2);
  CHECK(c.clusters[0].members == std::vector<std::size_t>{0, 1, 2});
  CHECK(c.clusters[1].members == std::vector<std::size_t>{3, 4});
  CHECK(c.clusters[0].features.items(3, 1) == doctest::Approx(0.1).epsilon(1e-6));
}

TEST_CASE("every merge removes exactly one cluster") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<FeatureSeq> strokes;
    for (int i = 0; i < 12; ++i) strokes.push_back(random_features(rng, 15));
    for (double threshold : {0.0, 0.005, 0.02, 0.1, kInf}) {
      const Clustering c = cluster_strokes(strokes, threshold);
      std::size_t expected = strokes.size();
      double last = 0.0;
      for (const MergeStep& m : c.merges) {
        CHECK(m.clusters_after == --expected);
        CHECK(m.distance <= threshold);
        CHECK(m.distance >= last);
        last = m.distance;
      }
      CHECK(c.clusters.size() == expected);
      std::size_t members = 0;
      for (const Cluster& cl : c.clusters) members += cl.member_count;
      CHECK(members == strokes.size());
    }
  }
}

TEST_CASE("build_model separates stroke-count groups") {
  const Stroke bar = make_stroke({{0, 0}, {1, 0}});
  const Stroke stem = make_stroke({{0.8, 0}, {0.8, 1}});
  const Stroke loop = make_stroke({{0.2, 0.3}, {0.5, 0.5}, {0.2, 0.7}});
  const Stroke tail = make_stroke({{0.2, 0.7}, {0.4, 1.0}});
  std::vector<InkSymbol> a{make_symbol({bar, stem}, 0, 1), make_symbol({bar, stem, loop}, 0, 2),
                           make_symbol({stem, bar, loop}, 0, 3), make_symbol({loop, tail}, 1, 1)};
  const Model m = build_model(make_dataset(a), Config{});
  REQUIRE(m.classes.size() == 2);
  const auto& groups = m.classes[0].groups;
  REQUIRE(groups.size() == 2);
  CHECK(groups.contains(2));
  CHECK(groups.contains(3));
  const auto& two = groups.at(2);
  for (Region r : kAllRegions)
    for (const Template& t : two.at(r)) {
      CHECK(t.group == 2);
      CHECK(t.region == r);
      CHECK(t.member_count == 1);
      CHECK(t.features.size() == 50);
    }
  std::size_t three_members = 0;
  for (Region r : kAllRegions)
    for (const Template& t : groups.at(3).at(r)) three_members += t.member_count;
  CHECK(three_members == 6);
}

TEST_CASE("build_model errors") {
  std::vector<InkSymbol> v{make_symbol({make_stroke({{0, 0}, {1, 1}})}, 0, 1)};
  CHECK_THROWS_AS(build_model(make_dataset(v, 2), Config{}), Error);
  v.push_back(make_symbol({make_stroke({{0, 0}, {1, 0}})}, std::nullopt, 1));
  CHECK_THROWS_AS(build_model(make_dataset(v, 1), Config{}), Error);
}

TEST_CASE("one symbol per class gives single-member templates") {
  const Dataset d = synth(6, 1, 1);
  const Model m = build_model(d, Config{});
  std::size_t strokes = 0;
  for (const InkSymbol& s : d.symbols) strokes += s.stroke_count();
  CHECK(m.template_count() == strokes);
  for (const auto& c : m.classes)
    for (const auto& [count, g] : c.groups)
      for (Region r : kAllRegions)
        for (const Template& t : g.at(r)) CHECK(t.member_count == 1);
}

TEST_CASE("duplicated training data doubles member counts only") {
  const Dataset d = synth(4, 3, 1, 21);
  std::vector<InkSymbol> doubled;
  for (const InkSymbol& s : d.symbols) {
    doubled.push_back(s);
    doubled.push_back(s);
  }
  for (double threshold : {0.0, 0.05, kInf}) {
    Config c;
    c.cluster.threshold = threshold;
    const Model once = build_model(d, c);
    const Model twice = build_model(make_dataset(doubled, d.class_count), c);
    REQUIRE(once.template_count() == twice.template_count());
    for (std::size_t ci = 0; ci < once.classes.size(); ++ci) {
      for (const auto& [count, g] : once.classes[ci].groups) {
        const GroupTemplates& h = twice.classes[ci].groups.at(count);
        for (Region r : kAllRegions) {
          REQUIRE(g.at(r).size() == h.at(r).size());
          for (std::size_t i = 0; i < g.at(r).size(); ++i) {
            CHECK(h.at(r)[i].member_count == 2 * g.at(r)[i].member_count);
            CHECK(h.at(r)[i].features.items.isApprox(g.at(r)[i].features.items, 1e-9));
          }
        }
      }
    }
  }
}

TEST_CASE("template counts are non-increasing in the threshold") {
  const Dataset d = synth(5, 6, 1, 3);
  std::vector<std::size_t> previous;
  for (double threshold : {0.0, 0.02, 0.05, 0.1, kInf}) {
    Config c;
    c.cluster.threshold = threshold;
    const std::vector<std::size_t> sizes = bucket_sizes(build_model(d, c));
    if (!previous.empty()) {
      REQUIRE(sizes.size() == previous.size());
      for (std::size_t i = 0; i < sizes.size(); ++i) CHECK(sizes[i] <= previous[i]);
    }
    previous = sizes;
  }
  for (std::size_t s : previous) CHECK(s <= 1);
}
