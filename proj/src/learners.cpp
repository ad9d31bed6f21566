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

#include "hedgekit/learners.hpp"

#include <algorithm>
#include <cmath>

#include "hedgekit/errors.hpp"
#include "hedgekit/kernels.hpp"

namespace hedgekit {

void validate(const LearnerKind& kind) {
  if (const auto* fixed = std::get_if<FixedHedge>(&kind)) {
    if (!(fixed->eta > 0.0) || !std::isfinite(fixed->eta)) {
      throw param_error("fixed Hedge needs a finite eta > 0");
    }
  } else if (const auto* safe = std::get_if<SafeHedge>(&kind)) {
    if (safe->horizon < 1) throw param_error("safe Hedge needs horizon >= 1");
  } else if (const auto* ff = std::get_if<FlipFlop>(&kind)) {
    if (!(ff->phi > 1.0) || !std::isfinite(ff->phi)) {
      throw param_error("FlipFlop needs phi > 1");
    }
    if (!(ff->alpha > 0.0) || !std::isfinite(ff->alpha)) {
      throw param_error("FlipFlop needs alpha > 0");
    }
  }
}

std::string kind_name(const LearnerKind& kind) {
  struct Namer {
    std::string operator()(const Ftl&) const { return "ftl"; }
    std::string operator()(const FixedHedge&) const { return "hedge"; }
    std::string operator()(const SafeHedge&) const { return "safehedge"; }
    std::string operator()(const AdaHedge&) const { return "adahedge"; }
    std::string operator()(const FlipFlop&) const { return "flipflop"; }
  };
  return std::visit(Namer{}, kind);
}

Learner::Learner(LearnerKind kind, std::size_t experts)
    : kind_(std::move(kind)), cumulative_(experts, 0.0) {
  if (experts < 2) throw param_error("need at least two experts");
  validate(kind_);
  if (std::holds_alternative<FlipFlop>(kind_)) regime_ = Regime::flip;
}

double Learner::next_rate() const {
  const double ln_k = std::log(static_cast<double>(experts()));
  struct Rater {
    const Learner& self;
    double ln_k;
    double operator()(const Ftl&) const { return kRateInf; }
    double operator()(const FixedHedge& f) const { return f.eta; }
    double operator()(const SafeHedge& s) const {
      return std::sqrt(8.0 * ln_k / static_cast<double>(s.horizon));
    }
    double operator()(const AdaHedge&) const {
      return self.gap_ == 0.0 ? kRateInf : ln_k / self.gap_;
    }
    double operator()(const FlipFlop&) const {
      if (self.regime_ == Regime::flip) return kRateInf;
      return self.flop_gap_ == 0.0 ? kRateInf : ln_k / self.flop_gap_;
    }
  };
  return std::visit(Rater{*this, ln_k}, kind_);
}

std::vector<double> Learner::next_weights() const {
  return mix(next_rate(), cumulative_).weights;
}

Regime flipflop_switch(Regime regime, double flip_gap, double flop_gap,
                       double phi, double alpha) {
  if (regime == Regime::flip && flip_gap > (phi / alpha) * flop_gap) {
    return Regime::flop;
  }
  if (regime == Regime::flop && flop_gap > alpha * flip_gap) {
    return Regime::flip;
  }
  return regime;
}

RoundRecord Learner::observe(std::span<const double> loss) {
  const double rate = next_rate();
  RoundRecord rec = account_round(t_ + 1, rate, cumulative_, loss, weights_);
  ++t_;
  hedge_total_ += rec.h;
  rec.regret = hedge_total_ - kernels::min_value(cumulative_);
  rec.regime = regime_;

  if (std::holds_alternative<AdaHedge>(kind_)) {
    gap_ += rec.delta;
  } else if (const auto* ff = std::get_if<FlipFlop>(&kind_)) {
    if (regime_ == Regime::flip) {
      flip_gap_ += rec.delta;
    } else {
      flop_gap_ += rec.delta;
    }
    regime_ = flipflop_switch(regime_, flip_gap_, flop_gap_, ff->phi, ff->alpha);
  }
  return rec;
}

Trace run(const LearnerKind& kind, const LossStream& stream) {
  if (stream.empty()) throw input_error("empty loss stream");
  Learner learner(kind, stream.front().size());

  Trace trace;
  trace.rounds.reserve(stream.size());
  for (const auto& loss : stream) {
    RoundRecord rec = learner.observe(loss);
    trace.hedge_loss += rec.h;
    trace.mix_loss += rec.m;
    trace.gap += rec.delta;
    trace.variance += rec.v;
    if (rec.leader_change) ++trace.leader_changes;

    const auto [mn_it, mx_it] = std::minmax_element(loss.begin(), loss.end());
    trace.sigma = std::max(trace.sigma, *mx_it - *mn_it);
    trace.min_loss_sum += *mn_it;
    if (*mn_it < 0.0 || *mx_it > 1.0) trace.unit_range = false;

    trace.rounds.push_back(rec);
  }
  trace.best_loss = kernels::min_value(learner.cumulative());
  return trace;
}

}  // namespace hedgekit
