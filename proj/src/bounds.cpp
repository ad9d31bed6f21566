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

#include "hedgekit/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "hedgekit/errors.hpp"

namespace hedgekit::bounds {

namespace {

double ln_experts(double experts) {
  if (experts < 2.0) throw param_error("need at least two experts");
  return std::log(experts);
}

// Observed quantities sit a few ulps away from the exact values being
// bounded, so comparisons get a hair of slack.
bool leq(double observed, double bound) {
  return observed <= bound + 1e-9 * std::max(1.0, std::fabs(bound));
}

bool close(double a, double b) {
  return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace

double hoeffding_bound(double eta, double rounds, double experts) {
  const double ln_k = ln_experts(experts);
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw param_error("hoeffding bound needs a finite eta > 0");
  }
  if (rounds < 1.0) throw param_error("need rounds >= 1");
  return ln_k / eta + eta * rounds / 8.0;
}

double adahedge_variance_bound(double variance, double experts) {
  const double ln_k = ln_experts(experts);
  if (variance < 0.0) throw param_error("variance must be nonnegative");
  return 2.0 * std::sqrt(variance * ln_k) + 4.0 / 3.0 * ln_k + 2.0;
}

double adahedge_regret_bound(double best_loss, double rounds, double experts) {
  if (best_loss < 0.0 || best_loss > rounds) {
    throw input_error("best loss must lie in [0, rounds] for the [0,1] form");
  }
  return adahedge_regret_bound_scaled(best_loss, rounds, experts, 1.0);
}

double adahedge_regret_bound_scaled(double translated_best, double rounds,
                                    double experts, double sigma) {
  const double ln_k = ln_experts(experts);
  if (sigma < 0.0) throw param_error("sigma must be nonnegative");
  const double lead =
      std::max(0.0, translated_best * (sigma * rounds - translated_best));
  return 2.0 * std::sqrt(lead / rounds * ln_k) +
         sigma * (16.0 / 3.0 * ln_k + 2.0);
}

FlipFlopConstants flipflop_constants(double phi, double alpha) {
  if (!(phi > 1.0) || !std::isfinite(phi)) throw param_error("need phi > 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw param_error("need alpha > 0");
  FlipFlopConstants c;
  c.lucky_factor = phi * alpha / (phi - 1.0) + 2.0 * alpha + 1.0;
  c.lucky_additive = alpha * phi / (phi - 1.0) + 2.0 * alpha;
  c.c1 = phi / (phi - 1.0) + phi / alpha + 2.0;
  c.c2 = phi / alpha;
  return c;
}

FlipFlopBounds flipflop_bounds(double ftl_regret, double best_loss,
                               double rounds, double experts, double phi,
                               double alpha) {
  if (best_loss < 0.0 || best_loss > rounds) {
    throw input_error("best loss must lie in [0, rounds] for the [0,1] form");
  }
  return flipflop_bounds_scaled(ftl_regret, best_loss, rounds, experts, 1.0,
                                phi, alpha);
}

FlipFlopBounds flipflop_bounds_scaled(double ftl_regret,
                                      double translated_best, double rounds,
                                      double experts, double sigma, double phi,
                                      double alpha) {
  const double ln_k = ln_experts(experts);
  if (sigma < 0.0) throw param_error("sigma must be nonnegative");
  const FlipFlopConstants c = flipflop_constants(phi, alpha);
  FlipFlopBounds b;
  b.vs_ftl = c.lucky_factor * ftl_regret + sigma * c.lucky_additive;
  const double lead =
      std::max(0.0, translated_best * (sigma * rounds - translated_best));
  b.worst_case = c.c1 * std::sqrt(lead / rounds * ln_k) +
                 sigma * (c.c1 * (c.c1 + 2.0 / 3.0) * ln_k +
                          c.c1 * std::sqrt(c.c2 * ln_k) + c.c1 + c.c2);
  return b;
}

double equalizing_alpha(double phi) {
  if (!(phi > 1.0)) throw param_error("need phi > 1");
  return (2.0 * phi - 1.0 +
          std::sqrt(12.0 * phi * phi * phi - 16.0 * phi * phi + 4.0 * phi + 1.0)) /
         (6.0 * phi - 4.0);
}

FlipFlopParams optimal_flipflop_params() {
  const auto objective = [](double phi) {
    const double a = equalizing_alpha(phi);
    return phi * a / (phi - 1.0) + 2.0 * a + 1.0;
  };
  // Golden-section search; the equalized factor is unimodal on (1, 10].
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1.0 + 1e-6, hi = 10.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-9) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double phi = (lo + hi) / 2.0;
  return {phi, equalizing_alpha(phi)};
}

namespace {

struct CheckBuilder {
  const Trace& trace;
  std::size_t experts;
  std::vector<BoundCheck> out;

  double sigma_eff() const { return trace.unit_range ? 1.0 : trace.sigma; }
  double nstar_eff() const {
    return trace.unit_range ? trace.best_loss : trace.translated_best();
  }
  bool degenerate() const { return !trace.unit_range && trace.sigma == 0.0; }

  void push(std::string name, double observed, double value, bool satisfied,
            std::vector<std::pair<std::string, double>> inputs) {
    out.push_back({std::move(name), value, observed, satisfied, degenerate(),
                   std::move(inputs)});
  }

  void upper(std::string name, double observed, double value,
             std::vector<std::pair<std::string, double>> inputs) {
    push(std::move(name), observed, value, leq(observed, value),
         std::move(inputs));
  }
};

}  // namespace

std::vector<BoundCheck> check_trace(const Trace& trace, const LearnerKind& kind,
                                    std::size_t experts,
                                    std::optional<double> ftl_regret) {
  CheckBuilder b{trace, experts, {}};
  const double ln_k = ln_experts(static_cast<double>(experts));
  const double t = static_cast<double>(trace.rounds.size());
  const double k = static_cast<double>(experts);
  const double sig = b.sigma_eff();
  const double regret = trace.regret();

  if (std::holds_alternative<Ftl>(kind)) {
    // FTL regret equals its cumulative mixability gap, and leader changes
    // bound it (scaled by the loss range off the unit interval).
    b.push("ftl_regret_equals_gap", regret, trace.gap,
           close(regret, trace.gap), {{"Delta", trace.gap}});
    b.upper("ftl_leader_changes", regret,
            sig * static_cast<double>(trace.leader_changes),
            {{"C", static_cast<double>(trace.leader_changes)}, {"sigma", sig}});
  }

  if (std::holds_alternative<FixedHedge>(kind) ||
      std::holds_alternative<SafeHedge>(kind)) {
    const double eta = trace.rounds.front().eta;
    b.upper("hoeffding", regret, ln_k / eta + eta * sig * sig * t / 8.0,
            {{"eta", eta}, {"T", t}, {"K", k}, {"sigma", sig}});
  }

  if (std::holds_alternative<AdaHedge>(kind)) {
    b.upper("adahedge_two_gaps", regret, 2.0 * trace.gap,
            {{"Delta", trace.gap}});
    b.upper("adahedge_gap_square", trace.gap * trace.gap,
            trace.variance * ln_k +
                sig * (1.0 + 2.0 / 3.0 * ln_k) * trace.gap,
            {{"Delta", trace.gap}, {"V", trace.variance}, {"sigma", sig}});
    b.upper("adahedge_variance_bound", regret,
            2.0 * std::sqrt(trace.variance * ln_k) +
                sig * (4.0 / 3.0 * ln_k + 2.0),
            {{"V", trace.variance}, {"K", k}, {"sigma", sig}});
    b.upper("adahedge_regret_bound", regret,
            adahedge_regret_bound_scaled(b.nstar_eff(), t, k, sig),
            {{"Nstar", b.nstar_eff()}, {"T", t}, {"K", k}, {"sigma", sig}});
  }

  if (const auto* ff = std::get_if<FlipFlop>(&kind)) {
    const FlipFlopConstants c = flipflop_constants(ff->phi, ff->alpha);
    const double flip_gap = trace.flip_gap();
    const double flop_gap = trace.flop_gap();
    const double flop_var = trace.flop_variance();
    b.upper("flipflop_flip_gap", regret,
            c.lucky_factor * flip_gap + sig * c.lucky_additive,
            {{"flip_Delta", flip_gap}, {"phi", ff->phi}, {"alpha", ff->alpha}});
    if (ftl_regret) {
      b.upper("flipflop_vs_ftl", regret,
              c.lucky_factor * *ftl_regret + sig * c.lucky_additive,
              {{"ftl_regret", *ftl_regret},
               {"phi", ff->phi},
               {"alpha", ff->alpha},
               {"sigma", sig}});
    }
    b.upper("flipflop_flop_gap_square", flop_gap * flop_gap,
            flop_var * ln_k + sig * (1.0 + 2.0 / 3.0 * ln_k) * flop_gap,
            {{"flop_Delta", flop_gap}, {"flop_V", flop_var}, {"sigma", sig}});
    const FlipFlopBounds wc = flipflop_bounds_scaled(
        0.0, b.nstar_eff(), t, k, sig, ff->phi, ff->alpha);
    b.upper("flipflop_worst_case", regret, wc.worst_case,
            {{"Nstar", b.nstar_eff()},
             {"T", t},
             {"K", k},
             {"sigma", sig},
             {"phi", ff->phi},
             {"alpha", ff->alpha}});
  }

  return std::move(b.out);
}

}  // namespace hedgekit::bounds
