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


#include "inkmatch/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace inkmatch {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Points headline(Rng& rng) {
  const double x0 = uniform(rng, 0.05, 0.35);
  const double x1 = uniform(rng, 0.65, 0.95);
  const double y = uniform(rng, 0.08, 0.14);
  Points p(3, 2);
  p << x0, y, (x0 + x1) / 2.0, y + uniform(rng, -0.01, 0.01), x1, y;
  return p;
}

Points body_stroke(Rng& rng) {
  const auto vertices = static_cast<Index>(std::uniform_int_distribution<int>(4, 6)(rng));
  Points p(vertices, 2);
  Vec2 at(uniform(rng, 0.2, 0.8), uniform(rng, 0.25, 0.55));
  double heading = uniform(rng, -std::numbers::pi, std::numbers::pi);
  for (Index i = 0; i < vertices; ++i) {
    p.row(i) = at.transpose();
    heading += uniform(rng, -2.0, 2.0);
    const double step = uniform(rng, 0.15, 0.3);
    at += step * Vec2(std::cos(heading), std::sin(heading));
    at = at.cwiseMax(Vec2(0.05, 0.22)).cwiseMin(Vec2(0.95, 0.95));
  }
  return p;
}

bool looks_like_headline(const Points& p) {
  const auto lo = p.colwise().minCoeff();
  const auto hi = p.colwise().maxCoeff();
  return hi(0) - lo(0) >= 0.4 && hi(1) - lo(1) <= 0.25;
}

// Pen samples along the polyline at a randomly varying pace.
Points render(const Points& poly, Rng& rng) {
  std::vector<Vec2> out;
  std::uniform_real_distribution<double> pace(0.008, 0.02);
  std::normal_distribution<double> jitter(0.0, 0.0005);
  std::bernoulli_distribution pause(0.04);
  out.emplace_back(poly.row(0).transpose());
  for (Index i = 0; i + 1 < poly.rows(); ++i) {
    const Vec2 a = poly.row(i).transpose();
    const Vec2 b = poly.row(i + 1).transpose();
    const double len = (b - a).norm();
    double s = pace(rng);
    while (s < len) {
      out.push_back(a + (b - a) * (s / len) + Vec2(jitter(rng), jitter(rng)));
      if (pause(rng)) out.push_back(out.back());
      s += pace(rng);
    }
    out.push_back(b);
  }
  Points p(static_cast<Index>(out.size()), 2);
  for (std::size_t i = 0; i < out.size(); ++i) p.row(static_cast<Index>(i)) = out[i].transpose();
  return p;
}

}  // namespace

std::vector<SeedShape> class_seeds(std::size_t classes, std::uint64_t seed) {
  Rng rng(seed ^ 0x5eedULL);
  std::vector<SeedShape> seeds(classes);
  for (SeedShape& shape : seeds) {
    shape.has_headline = std::bernoulli_distribution(0.8)(rng);
    if (shape.has_headline) shape.strokes.push_back(headline(rng));
    const int bodies = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int b = 0; b < bodies; ++b) {
      Points p = body_stroke(rng);
      while (looks_like_headline(p)) p = body_stroke(rng);
      shape.strokes.push_back(std::move(p));
    }
  }
  return seeds;
}

Dataset make_synthetic_dataset(const SynthOptions& options) {
  if (options.classes == 0 || options.writers == 0 || options.repeats == 0)
    throw Error("synthetic dataset needs classes, writers and repeats");
  const auto seeds = class_seeds(options.classes, options.seed);
  Rng rng(options.seed);
  std::normal_distribution<double> noise(0.0, options.noise);
  std::bernoulli_distribution split(options.split_probability);

  std::vector<InkSymbol> symbols;
  for (std::size_t w = 0; w < options.writers; ++w) {
    const double shear = uniform(rng, -0.12, 0.12);
    const double sx = uniform(rng, 0.9, 1.1);
    const double sy = uniform(rng, 0.9, 1.1);
    for (std::size_t c = 0; c < options.classes; ++c) {
      for (std::size_t rep = 0; rep < options.repeats; ++rep) {
        std::vector<Points> polys;
        for (std::size_t s = 0; s < seeds[c].strokes.size(); ++s) {
          Points p = seeds[c].strokes[s];
          for (Index i = 0; i < p.rows(); ++i) p.row(i) += Eigen::RowVector2d(noise(rng), noise(rng));
          const bool first_body = s == (seeds[c].has_headline ? 1u : 0u);
          if (first_body && p.rows() >= 4 && split(rng)) {
            const Index mid = p.rows() / 2;
            polys.push_back(p.topRows(mid + 1));
            polys.push_back(p.bottomRows(p.rows() - mid));
          } else {
            polys.push_back(std::move(p));
          }
        }
        if (options.shuffle_order) std::shuffle(polys.begin(), polys.end(), rng);

        const double scale = uniform(rng, 200.0, 500.0);
        const Eigen::RowVector2d offset(uniform(rng, 0.0, 1000.0), uniform(rng, 0.0, 1000.0));
        InkSymbol sym;
        sym.label = static_cast<int>(c);
        sym.writer = static_cast<int>(w);
        double clock = 0.0;
        for (const Points& poly : polys) {
          Points pts = render(poly, rng);
          for (Index i = 0; i < pts.rows(); ++i) {
            const double x = pts(i, 0), y = pts(i, 1);
            pts(i, 0) = (sx * (x + shear * (y - 0.5))) * scale + offset(0);
            pts(i, 1) = (sy * y) * scale + offset(1);
          }
          std::vector<double> t(static_cast<std::size_t>(pts.rows()));
          for (double& v : t) {
            v = clock;
            clock += 0.05;
          }
          clock += 0.3;
          sym.strokes.emplace_back(std::move(pts), std::move(t));
        }
        symbols.push_back(std::move(sym));
      }
    }
  }
  return make_dataset(std::move(symbols), options.classes);
}

}  // namespace inkmatch
