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

#include "hedgekit/core.hpp"

#include <cmath>
#include <string>

#include "hedgekit/errors.hpp"
#include "hedgekit/kernels.hpp"

namespace hedgekit {

void validate_losses(std::span<const double> losses) {
  if (losses.size() < 2) {
    throw input_error("need at least two experts, got " +
                      std::to_string(losses.size()));
  }
  for (std::size_t k = 0; k < losses.size(); ++k) {
    if (!std::isfinite(losses[k])) {
      throw input_error("non-finite loss for expert " + std::to_string(k + 1));
    }
  }
}

static void validate_rate(double rate) {
  if (std::isnan(rate) || rate <= 0.0) {
    throw param_error("learning rate must be positive or inf");
  }
}

double mix_into(double rate, std::span<const double> cumulative,
                std::span<double> weights) {
  validate_losses(cumulative);
  validate_rate(rate);
  const double mn = kernels::min_value(cumulative);
  if (rate == kRateInf) {
    // FTL limit: uniform over the exact argmin set.
    const double count = kernels::mark_equal(cumulative, mn, weights);
    kernels::scale(weights, 1.0 / count);
    return mn;
  }
  const double sum = kernels::shifted_exp(cumulative, mn, rate, weights);
  kernels::scale(weights, 1.0 / sum);
  return mn - std::log(sum / static_cast<double>(cumulative.size())) / rate;
}

MixResult mix(double rate, std::span<const double> cumulative) {
  MixResult r;
  r.weights.resize(cumulative.size());
  r.mix_loss = mix_into(rate, cumulative, r.weights);
  return r;
}

double mix_loss(double rate, std::span<const double> cumulative) {
  validate_losses(cumulative);
  validate_rate(rate);
  const double mn = kernels::min_value(cumulative);
  if (rate == kRateInf) return mn;
  const double sum = kernels::shifted_exp_sum(cumulative, mn, rate);
  return mn - std::log(sum / static_cast<double>(cumulative.size())) / rate;
}

RoundRecord account_round(long t, double rate, std::vector<double>& cumulative,
                          std::span<const double> loss,
                          std::vector<double>& weights) {
  if (loss.size() != cumulative.size()) {
    throw input_error("round " + std::to_string(t) + ": expected " +
                      std::to_string(cumulative.size()) + " losses, got " +
                      std::to_string(loss.size()));
  }
  validate_losses(loss);
  weights.resize(cumulative.size());

  RoundRecord rec;
  rec.t = t;
  rec.eta = rate;

  const double m_before = mix_into(rate, cumulative, weights);
  rec.h = kernels::dot(weights, loss);
  rec.v = kernels::weighted_sqdev(weights, loss, rec.h);

  // Leader bookkeeping uses the exact post-update values. cumulative[k] +
  // loss[k] is evaluated twice and rounds identically, so membership
  // decisions match the committed totals.
  const double prev_min = kernels::min_value(cumulative);
  double new_min = cumulative[0] + loss[0];
  for (std::size_t k = 1; k < cumulative.size(); ++k) {
    const double nk = cumulative[k] + loss[k];
    if (nk < new_min) new_min = nk;
  }
  bool leader_left = false;
  for (std::size_t k = 0; k < cumulative.size(); ++k) {
    if (cumulative[k] == prev_min && cumulative[k] + loss[k] != new_min) {
      leader_left = true;
      break;
    }
  }
  rec.leader_change = t == 1 || leader_left;

  kernels::add(cumulative, loss);
  const double m_after = mix_loss(rate, cumulative);
  rec.m = m_after - m_before;
  rec.delta = std::max(0.0, rec.h - rec.m);

  // Two exactly-detectable cases have h = m, delta = 0, v = 0 in exact
  // arithmetic: a round whose losses are all equal (pure translation), and
  // an infinite-rate round in which every leader stays a leader (so all of
  // them incurred identical loss). Pin those values, or rounding noise of
  // order 1e-16 leaks into the gap accumulators and can flip a
  // zero-threshold regime trigger on one side of a rescaled run but not
  // the other.
  bool translation_only = true;
  for (std::size_t k = 1; k < loss.size(); ++k) {
    if (loss[k] != loss[0]) {
      translation_only = false;
      break;
    }
  }
  if (translation_only || (rate == kRateInf && !leader_left)) {
    rec.h = rec.m;
    rec.delta = 0.0;
    rec.v = 0.0;
  }
  return rec;
}

long leader_changes(const LossStream& stream) {
  if (stream.empty()) throw input_error("empty loss stream");
  const std::size_t experts = stream.front().size();
  std::vector<double> cum(experts, 0.0);
  long count = 0;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto& loss = stream[i];
    if (loss.size() != experts) {
      throw input_error("round " + std::to_string(i + 1) + ": expected " +
                        std::to_string(experts) + " losses, got " +
                        std::to_string(loss.size()));
    }
    validate_losses(loss);
    const double prev_min = kernels::min_value(cum);
    double new_min = cum[0] + loss[0];
    for (std::size_t k = 1; k < experts; ++k) {
      const double nk = cum[k] + loss[k];
      if (nk < new_min) new_min = nk;
    }
    bool leader_left = false;
    for (std::size_t k = 0; k < experts; ++k) {
      if (cum[k] == prev_min && cum[k] + loss[k] != new_min) {
        leader_left = true;
        break;
      }
    }
    if (i == 0 || leader_left) ++count;
    kernels::add(cum, loss);
  }
  return count;
}

double Trace::flip_gap() const {
  double sum = 0.0;
  for (const auto& r : rounds) {
    if (r.regime == Regime::flip) sum += r.delta;
  }
  return sum;
}

double Trace::flop_gap() const {
  double sum = 0.0;
  for (const auto& r : rounds) {
    if (r.regime == Regime::flop) sum += r.delta;
  }
  return sum;
}

double Trace::flop_variance() const {
  double sum = 0.0;
  for (const auto& r : rounds) {
    if (r.regime == Regime::flop) sum += r.v;
  }
  return sum;
}

}  // namespace hedgekit
