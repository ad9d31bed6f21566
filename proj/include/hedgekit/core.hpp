// Copyright 2026 The Hedgekit Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEDGEKIT_CORE_HPP
#define HEDGEKIT_CORE_HPP

#include <limits>
#include <span>
#include <vector>

// Exponential-weights core shared by every learner: posterior weights and
// mix loss at a given learning rate, per-round loss accounting (Hedge loss,
// mix loss, mixability gap, loss variance, leader changes) and the trace
// bookkeeping over a full run.
//
// All functions are pure over their inputs and safe to call concurrently.

namespace hedgekit {

// Learning rate of infinity recovers Follow-the-Leader.
inline constexpr double kRateInf = std::numeric_limits<double>::infinity();

// One round of expert losses; K >= 2 finite reals, possibly negative.
using LossVector = std::vector<double>;
using LossStream = std::vector<LossVector>;

// Throws input_error unless the vector has K >= 2 finite entries.
void validate_losses(std::span<const double> losses);

struct MixResult {
  std::vector<double> weights;  // nonnegative, sum to one
  double mix_loss = 0.0;        // cumulative mix loss for (rate, cumulative)
};

// Posterior weights and cumulative mix loss for learning rate `rate` over
// cumulative losses `cumulative`, computed with a min-shift so that large
// rates and large losses cannot overflow or underflow to all-zero.
//
// For finite rate:  w_k = exp(-rate*(L_k - min L)) normalized,
//                   mix loss = min L + ln(sum/K)/(-rate) ... i.e.
//                   -(1/rate) ln((1/K) sum_k exp(-rate L_k)).
// For rate == inf:  weights uniform on the argmin set (exact ties),
//                   mix loss = min L.
//
// Errors: input_error for K < 2 or non-finite entries, param_error for
// rate <= 0 or NaN.
MixResult mix(double rate, std::span<const double> cumulative);

// Allocation-free worker behind mix(); weights.size() must equal
// cumulative.size().
double mix_into(double rate, std::span<const double> cumulative,
                std::span<double> weights);

// Mix loss only (skips the normalize and the weight stores).
double mix_loss(double rate, std::span<const double> cumulative);

enum class Regime { none, flip, flop };

struct RoundRecord {
  long t = 0;           // 1-based round index
  double eta = 0.0;     // learning rate used this round
  double h = 0.0;       // Hedge loss w . loss
  double m = 0.0;       // mix loss increment
  double delta = 0.0;   // mixability gap max(0, h - m)
  double v = 0.0;       // loss variance under the played weights
  double regret = 0.0;  // cumulative regret H_t - L*_t (filled by the runner)
  bool leader_change = false;
  Regime regime = Regime::none;
};

// Plays one round at learning rate `rate`: computes the weights from the
// cumulative losses BEFORE observing `loss`, then folds `loss` into
// `cumulative` (in place, fixed expert-index order) and fills the record.
//
//   h     = w . loss
//   m     = mix_loss(rate, after) - mix_loss(rate, before)
//   delta = max(0, h - m)      (clipped: rounding must not shrink Delta)
//   v     = sum_k w_k (loss_k - h)^2
//   leader_change per the c_t indicator: t == 1, or some expert with
//   minimal cumulative loss before the round is no longer minimal after.
//
// `weights` is resized to K and holds the weights that were played.
RoundRecord account_round(long t, double rate, std::vector<double>& cumulative,
                          std::span<const double> loss,
                          std::vector<double>& weights);

// Total number of leader changes C_T over a stream (c_1 = 1 always).
long leader_changes(const LossStream& stream);

struct Trace {
  std::vector<RoundRecord> rounds;
  double hedge_loss = 0.0;   // H_T
  double mix_loss = 0.0;     // M_T
  double gap = 0.0;          // Delta_T
  double variance = 0.0;     // V_T
  double best_loss = 0.0;    // L*_T, recomputed from the final totals
  long leader_changes = 0;   // C_T

  // Observed loss range statistics, for the unnormalized bounds:
  // sigma = max over rounds of the in-round range max_k - min_k,
  // min_loss_sum = sum_t min_k loss_{t,k} (so N*_T = L*_T - min_loss_sum).
  double sigma = 0.0;
  double min_loss_sum = 0.0;
  bool unit_range = true;  // every observed loss lay in [0,1]

  double regret() const { return hedge_loss - best_loss; }
  double translated_best() const { return best_loss - min_loss_sum; }  // N*_T

  // Per-regime restrictions (FlipFlop); zero elsewhere.
  double flip_gap() const;
  double flop_gap() const;
  double flop_variance() const;
};

}  // namespace hedgekit

#endif  // HEDGEKIT_CORE_HPP
