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

#ifndef HEDGEKIT_LEARNERS_HPP
#define HEDGEKIT_LEARNERS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hedgekit/core.hpp"

// The five strategies as uniform sequential state machines. Each round the
// learner first commits a weight vector, then observes the loss vector and
// updates its state. Instances share no state and may run in parallel.

namespace hedgekit {

struct Ftl {};  // Hedge with learning rate infinity

struct FixedHedge {
  double eta = 1.0;  // finite positive
};

struct SafeHedge {
  long horizon = 1;  // known in advance; rate sqrt(8 ln K / horizon)
};

struct AdaHedge {};  // rate ln K / Delta_{t-1}, Delta_0 = 0 meaning inf

struct FlipFlop {
  double phi = 2.37;    // > 1
  double alpha = 1.243;  // > 0
};

using LearnerKind = std::variant<Ftl, FixedHedge, SafeHedge, AdaHedge, FlipFlop>;

// Throws param_error on out-of-domain parameters.
void validate(const LearnerKind& kind);

// Stable identifier used by the CLI and trace summaries.
std::string kind_name(const LearnerKind& kind);

class Learner {
 public:
  // Throws param_error for experts < 2 or bad parameters (ln K = 0 would
  // degenerate every learning-rate formula).
  Learner(LearnerKind kind, std::size_t experts);

  std::size_t experts() const { return cumulative_.size(); }
  const LearnerKind& kind() const { return kind_; }
  long round() const { return t_; }

  // Learning rate that will be used in the upcoming round.
  double next_rate() const;

  // Weights that will be played in the upcoming round, computed before the
  // loss vector is revealed.
  std::vector<double> next_weights() const;

  // Play one round: commit weights, observe `loss`, update state. The
  // returned record carries the regime that was active during the round;
  // the regime switch rule is applied afterwards, once.
  RoundRecord observe(std::span<const double> loss);

  // Weights played in the most recent round (empty before the first).
  const std::vector<double>& last_weights() const { return weights_; }

  const std::vector<double>& cumulative() const { return cumulative_; }

  // Internal accumulators: Delta for AdaHedge, the per-regime pair for
  // FlipFlop, zero otherwise.
  double gap() const { return gap_; }
  double flip_gap() const { return flip_gap_; }
  double flop_gap() const { return flop_gap_; }
  Regime regime() const { return regime_; }

 private:
  LearnerKind kind_;
  std::vector<double> cumulative_;
  std::vector<double> weights_;
  double hedge_total_ = 0.0;
  double gap_ = 0.0;
  double flip_gap_ = 0.0;
  double flop_gap_ = 0.0;
  Regime regime_ = Regime::none;
  long t_ = 0;
};

// One regime-switch check, applied once per round after accumulation.
// Strict inequalities; no cascading double switch within a round.
Regime flipflop_switch(Regime regime, double flip_gap, double flop_gap,
                       double phi, double alpha);

// Folds the learner over the stream. Throws input_error on an empty stream
// or the first dimension mismatch (message carries the round index).
Trace run(const LearnerKind& kind, const LossStream& stream);

}  // namespace hedgekit

#endif  // HEDGEKIT_LEARNERS_HPP
