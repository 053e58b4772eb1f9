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


#include "inkmatch/matching.hpp"

#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>

namespace inkmatch {

namespace {

std::atomic<std::uint64_t> g_checked_paths{0};
std::atomic<std::uint64_t> g_path_violations{0};

}  // namespace

bool satisfies_path_conditions(const WarpPath& path, Index K, Index L) {
  const auto T = static_cast<Index>(path.size());
  if (K < 1 || L < 1 || T < std::max(K, L) || T > K + L - 1) return false;
  if (path.front() != WarpStep{0, 0} || path.back() != WarpStep{K - 1, L - 1}) return false;
  for (std::size_t t = 1; t < path.size(); ++t) {
    const Index dk = path[t].k - path[t - 1].k;
    const Index dl = path[t].l - path[t - 1].l;
    const bool allowed = (dk == 1 && dl == 1) || (dk == 0 && dl == 1) || (dk == 1 && dl == 0);
    if (!allowed) return false;
  }
  return true;
}

void check_warp_path(const WarpPath& path, Index K, Index L) {
  g_checked_paths.fetch_add(1, std::memory_order_relaxed);
  if (!satisfies_path_conditions(path, K, L)) {
    g_path_violations.fetch_add(1, std::memory_order_relaxed);
    throw std::logic_error("warping path violates boundary/monotonicity/continuity (K=" +
                           std::to_string(K) + ", L=" + std::to_string(L) +
                           ", T=" + std::to_string(path.size()) + ")");
  }
}

std::uint64_t checked_path_count() { return g_checked_paths.load(); }
std::uint64_t path_violation_count() { return g_path_violations.load(); }

NnResult nn_search(const FeatureSeq& query, std::span<const Candidate> candidates,
                   const FeatureDistance& metric, const NnOptions& options) {
  if (candidates.empty()) throw Error("nn_search needs at least one candidate");
  if (query.empty()) throw Error("nn_search of an empty query");
  NnResult out;
  out.candidates = candidates.size();

  const Index K = query.size();
  struct Entry {
    std::size_t index;
    double bound;  // lower bound on Delta
  };
  std::vector<Entry> order;
  order.reserve(candidates.size());

  if (options.prune) {
    // Without a band the full-width envelope is still admissible.
    const Index reach = options.band ? *options.band : std::max<Index>(K - 1, 0);
    const auto env = envelope(query.items, reach);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const FeatureSeq& c = *candidates[i].features;
      double bound = 0.0;
      if (c.size() == K) {
        const double lb = lb_keogh(env, c.items, metric);
        // Delta = D / T with D >= LB^2 and T <= K + L - 1 (T = K on a zero band).
        const double t_max = reach == 0 ? static_cast<double>(K) : static_cast<double>(2 * K - 1);
        bound = lb * lb / t_max;
      }
      order.push_back({i, bound});
    }
    std::stable_sort(order.begin(), order.end(), [&](const Entry& a, const Entry& b) {
      if (a.bound != b.bound) return a.bound < b.bound;
      return candidates[a.index].id < candidates[b.index].id;
    });
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) order.push_back({i, 0.0});
  }

  double best = std::numeric_limits<double>::infinity();
  for (const Entry& e : order) {
    // Relative slack absorbs rounding differences between the bound and DTW sums.
    if (options.prune && e.bound > best * (1.0 + 1e-9) + 1e-15) break;
    const Candidate& c = candidates[e.index];
    const auto r = dtw_cost(query.items, c.features->items, metric, options.band);
    ++out.dtw_calls;
    out.ranked.push_back({c.id, r.delta});
    best = std::min(best, r.delta);
  }
  std::sort(out.ranked.begin(), out.ranked.end(), [](const NnHit& a, const NnHit& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.id < b.id;
  });
  return out;
}

}  // namespace inkmatch
