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


#ifndef INKMATCH_MATCHING_HPP
#define INKMATCH_MATCHING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "inkmatch/types.hpp"

namespace inkmatch {

// ---------------------------------------------------------------------------
// Local distances
// ---------------------------------------------------------------------------

/// delta(a, b) = sum_c (a_c - b_c)^2. Used for scalar-event sequences.
struct SquaredEuclidean {
  template <typename A, typename B>
  auto operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    return (a - b).squaredNorm();
  }

  /// Squared excursion of `y` outside [lower, upper], summed over components.
  template <typename Y, typename U, typename L>
  auto excursion(const Eigen::MatrixBase<Y>& y, const Eigen::MatrixBase<U>& upper,
                 const Eigen::MatrixBase<L>& lower) const {
    using Scalar = typename Y::Scalar;
    Scalar sum{0};
    for (Index c = 0; c < y.size(); ++c) {
      const Scalar v = y(c);
      if (v > upper(c)) {
        sum += (v - upper(c)) * (v - upper(c));
      } else if (v < lower(c)) {
        sum += (v - lower(c)) * (v - lower(c));
      }
    }
    return sum;
  }
};

/// Distance between (px, py, alpha) feature tuples:
///   (ax - bx)^2 + (ay - by)^2 + angle_weight * wrap(a_alpha - b_alpha)^2.
template <std::floating_point Scalar>
struct FeatureDistanceT {
  Scalar angle_weight = Scalar(0.5) / (std::numbers::pi_v<Scalar> * std::numbers::pi_v<Scalar>);

  template <typename A, typename B>
  Scalar operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    const Scalar dx = a(0) - b(0);
    const Scalar dy = a(1) - b(1);
    const Scalar da = wrap_angle<Scalar>(a(2) - b(2));
    return dx * dx + dy * dy + angle_weight * da * da;
  }

  // The window's angles lie on the arc [lower, upper]; a point off that arc is
  // nearest to one of its end points on the circle.
  template <typename Y, typename U, typename L>
  Scalar excursion(const Eigen::MatrixBase<Y>& y, const Eigen::MatrixBase<U>& upper,
                   const Eigen::MatrixBase<L>& lower) const {
    Scalar sum{0};
    for (Index c = 0; c < 2; ++c) {
      const Scalar v = y(c);
      if (v > upper(c)) {
        sum += (v - upper(c)) * (v - upper(c));
      } else if (v < lower(c)) {
        sum += (v - lower(c)) * (v - lower(c));
      }
    }
    const Scalar a = y(2);
    if (a > upper(2) || a < lower(2)) {
      const Scalar du = wrap_angle<Scalar>(a - upper(2));
      const Scalar dl = wrap_angle<Scalar>(a - lower(2));
      sum += angle_weight * std::min(du * du, dl * dl);
    }
    return sum;
  }
};

using FeatureDistance = FeatureDistanceT<double>;

// ---------------------------------------------------------------------------
// Warping paths
// ---------------------------------------------------------------------------

/// One alignment cell, 0-based: x index `k`, y index `l`.
struct WarpStep {
  Index k = 0;
  Index l = 0;
  friend bool operator==(const WarpStep&, const WarpStep&) = default;
};

using WarpPath = std::vector<WarpStep>;

/// Boundary, monotonicity and continuity conditions plus
/// max(K, L) <= T <= K + L - 1.
bool satisfies_path_conditions(const WarpPath& path, Index K, Index L);

/// Checks every path the library returns. Throws std::logic_error on a
/// violation; the counters are process-wide.
void check_warp_path(const WarpPath& path, Index K, Index L);
std::uint64_t checked_path_count();
std::uint64_t path_violation_count();

// ---------------------------------------------------------------------------
// Dynamic time warping
// ---------------------------------------------------------------------------

template <typename Scalar>
struct DtwResult {
  Scalar cost{0};   ///< D(K, L)
  Scalar delta{0};  ///< D(K, L) / T
  WarpPath path;
};

template <typename Scalar>
struct DtwCost {
  Scalar cost{0};
  Index steps = 0;  ///< T of the optimal path
  Scalar delta{0};
};

namespace detail {

enum class Move : std::uint8_t { kStart, kDiagonal, kUp, kLeft };

template <typename Scalar>
struct Cell {
  Scalar cost;
  Index steps;
  Move move;
};

// Predecessor choice: least cost; on a tie the diagonal wins, then (k-1, l)
// vs (k, l-1) by fewer steps, then (k-1, l). The step comparison keeps T (and
// so Delta) symmetric in its arguments.
template <typename Scalar>
Cell<Scalar> best_predecessor(Scalar diag, Index diag_steps, Scalar up, Index up_steps, Scalar left,
                              Index left_steps) {
  Cell<Scalar> best{diag, diag_steps, Move::kDiagonal};
  auto consider = [&best](Scalar c, Index s, Move m) {
    if (c < best.cost) {
      best = {c, s, m};
    } else if (c == best.cost && best.move != Move::kDiagonal && s < best.steps) {
      best = {c, s, m};
    }
  };
  consider(up, up_steps, Move::kUp);
  consider(left, left_steps, Move::kLeft);
  return best;
}

inline Index effective_band(std::optional<Index> band, Index K, Index L) {
  if (!band) return std::max(K, L);
  if (*band < 0) throw Error("warping band must be non-negative");
  return std::max(*band, K > L ? K - L : L - K);
}

template <typename DX, typename DY>
void require_non_empty(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.rows() == 0 || y.rows() == 0) throw Error("DTW of an empty sequence");
  if (x.cols() != y.cols()) throw Error("DTW of sequences with different tuple widths");
}

}  // namespace detail

/// Classical DTW with back-tracked optimal path. `band` restricts cells to
/// |k - l| <= band (widened to |K - L| so the end cell stays reachable).
template <typename DX, typename DY, typename Metric>
DtwResult<typename DX::Scalar> dtw(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                                   const Metric& metric, std::optional<Index> band = std::nullopt) {
  using Scalar = typename DX::Scalar;
  detail::require_non_empty(x, y);
  const Index K = x.rows();
  const Index L = y.rows();
  const Index r = detail::effective_band(band, K, L);
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> D =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Constant(K, L, inf);
  Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic> S =
      Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic>::Zero(K, L);
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> moves(K, L);

  for (Index k = 0; k < K; ++k) {
    const Index l_begin = std::max<Index>(0, k - r);
    const Index l_end = std::min<Index>(L - 1, k + r);
    for (Index l = l_begin; l <= l_end; ++l) {
      const Scalar local = metric(x.row(k), y.row(l));
      if (k == 0 && l == 0) {
        D(0, 0) = local;
        S(0, 0) = 1;
        moves(0, 0) = static_cast<std::uint8_t>(detail::Move::kStart);
        continue;
      }
      const Scalar diag = (k > 0 && l > 0) ? D(k - 1, l - 1) : inf;
      const Scalar up = k > 0 ? D(k - 1, l) : inf;
      const Scalar left = l > 0 ? D(k, l - 1) : inf;
      const auto cell = detail::best_predecessor<Scalar>(
          diag, (k > 0 && l > 0) ? S(k - 1, l - 1) : 0, up, k > 0 ? S(k - 1, l) : 0, left,
          l > 0 ? S(k, l - 1) : 0);
      D(k, l) = cell.cost + local;
      S(k, l) = cell.steps + 1;
      moves(k, l) = static_cast<std::uint8_t>(cell.move);
    }
  }

  DtwResult<Scalar> out;
  out.cost = D(K - 1, L - 1);
  const Index T = S(K - 1, L - 1);
  out.delta = out.cost / static_cast<Scalar>(T);
  out.path.resize(static_cast<std::size_t>(T));
  Index k = K - 1;
  Index l = L - 1;
  for (Index t = T - 1; t >= 0; --t) {
    out.path[static_cast<std::size_t>(t)] = {k, l};
    switch (static_cast<detail::Move>(moves(k, l))) {
      case detail::Move::kDiagonal: --k; --l; break;
      case detail::Move::kUp: --k; break;
      case detail::Move::kLeft: --l; break;
      case detail::Move::kStart: break;
    }
  }
  check_warp_path(out.path, K, L);
  return out;
}

/// Same recurrence and tie rule as dtw() with two rolling rows and no path.
template <typename DX, typename DY, typename Metric>
DtwCost<typename DX::Scalar> dtw_cost(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y,
                                      const Metric& metric, std::optional<Index> band = std::nullopt) {
  using Scalar = typename DX::Scalar;
  detail::require_non_empty(x, y);
  const Index K = x.rows();
  const Index L = y.rows();
  const Index r = detail::effective_band(band, K, L);
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();

  std::vector<Scalar> prev_cost(static_cast<std::size_t>(L), inf), cur_cost(static_cast<std::size_t>(L), inf);
  std::vector<Index> prev_steps(static_cast<std::size_t>(L), 0), cur_steps(static_cast<std::size_t>(L), 0);

  for (Index k = 0; k < K; ++k) {
    std::fill(cur_cost.begin(), cur_cost.end(), inf);
    const Index l_begin = std::max<Index>(0, k - r);
    const Index l_end = std::min<Index>(L - 1, k + r);
    for (Index l = l_begin; l <= l_end; ++l) {
      const auto ul = static_cast<std::size_t>(l);
      const Scalar local = metric(x.row(k), y.row(l));
      if (k == 0 && l == 0) {
        cur_cost[0] = local;
        cur_steps[0] = 1;
        continue;
      }
      const Scalar diag = (k > 0 && l > 0) ? prev_cost[ul - 1] : inf;
      const Scalar up = k > 0 ? prev_cost[ul] : inf;
      const Scalar left = l > 0 ? cur_cost[ul - 1] : inf;
      const auto cell = detail::best_predecessor<Scalar>(
          diag, (k > 0 && l > 0) ? prev_steps[ul - 1] : 0, up, k > 0 ? prev_steps[ul] : 0, left,
          l > 0 ? cur_steps[ul - 1] : 0);
      cur_cost[ul] = cell.cost + local;
      cur_steps[ul] = cell.steps + 1;
    }
    std::swap(prev_cost, cur_cost);
    std::swap(prev_steps, cur_steps);
  }
  DtwCost<Scalar> out;
  out.cost = prev_cost.back();
  out.steps = prev_steps.back();
  out.delta = out.cost / static_cast<Scalar>(out.steps);
  return out;
}

/// DTW between feature sequences under the tuple distance.
inline DtwResult<double> dtw_distance(const FeatureSeq& x, const FeatureSeq& y,
                                      const FeatureDistance& metric = {},
                                      std::optional<Index> band = std::nullopt) {
  return dtw(x.items, y.items, metric, band);
}

// ---------------------------------------------------------------------------
// LB_Keogh
// ---------------------------------------------------------------------------

template <typename Scalar, int Cols>
using SequenceMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Cols, Cols == 1 ? Eigen::ColMajor : Eigen::RowMajor>;

/// Component-wise running max / min of a sequence over [k - reach, k + reach].
template <typename Scalar, int Cols>
struct Envelope {
  SequenceMatrix<Scalar, Cols> upper;
  SequenceMatrix<Scalar, Cols> lower;
  Index reach = 0;

  Index size() const { return upper.rows(); }
};

template <typename Derived>
Envelope<typename Derived::Scalar, Derived::ColsAtCompileTime> envelope(const Eigen::MatrixBase<Derived>& x,
                                                                       Index reach) {
  if (reach < 0) throw Error("envelope reach must be non-negative");
  Envelope<typename Derived::Scalar, Derived::ColsAtCompileTime> env;
  const Index K = x.rows();
  env.reach = reach;
  env.upper.resize(K, x.cols());
  env.lower.resize(K, x.cols());
  for (Index k = 0; k < K; ++k) {
    const Index lo = std::max<Index>(0, k - reach);
    const Index hi = std::min<Index>(K - 1, k + reach);
    env.upper.row(k) = x.middleRows(lo, hi - lo + 1).colwise().maxCoeff();
    env.lower.row(k) = x.middleRows(lo, hi - lo + 1).colwise().minCoeff();
  }
  return env;
}

inline Envelope<double, 3> envelope(const FeatureSeq& x, Index reach) { return envelope(x.items, reach); }

/// sqrt(sum_k excursion(y_k, U_k, L_k)). Its square never exceeds the
/// unnormalized DTW cost under a band of the envelope's reach.
template <typename Scalar, int Cols, typename DY, typename Metric>
Scalar lb_keogh(const Envelope<Scalar, Cols>& env, const Eigen::MatrixBase<DY>& y, const Metric& metric) {
  if (env.size() != y.rows()) throw Error("LB_Keogh length mismatch");
  Scalar sum{0};
  for (Index k = 0; k < y.rows(); ++k) sum += metric.excursion(y.row(k), env.upper.row(k), env.lower.row(k));
  return std::sqrt(sum);
}

inline double lb_keogh(const Envelope<double, 3>& env, const FeatureSeq& y, const FeatureDistance& metric = {}) {
  return lb_keogh(env, y.items, metric);
}

// ---------------------------------------------------------------------------
// Nearest-template search
// ---------------------------------------------------------------------------

struct Candidate {
  std::size_t id = 0;
  const FeatureSeq* features = nullptr;
};

struct NnOptions {
  /// Band of the DTW used for Delta (and the LB reach). nullopt: unconstrained.
  std::optional<Index> band;
  /// Skip candidates whose lower bound proves they cannot beat the best.
  bool prune = true;
};

struct NnHit {
  std::size_t id = 0;
  double delta = 0.0;
};

struct NnResult {
  /// Fully evaluated candidates by (delta, id). Pruned candidates are absent.
  std::vector<NnHit> ranked;
  std::size_t dtw_calls = 0;
  std::size_t candidates = 0;

  const NnHit& best() const { return ranked.front(); }
};

/// Exact 1-NN under Delta. Candidates are visited in ascending lower-bound
/// order and the scan stops once LB^2 / T_max exceeds the best Delta found.
NnResult nn_search(const FeatureSeq& query, std::span<const Candidate> candidates,
                   const FeatureDistance& metric, const NnOptions& options);

}  // namespace inkmatch

#endif  // INKMATCH_MATCHING_HPP
