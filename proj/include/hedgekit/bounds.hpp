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

#ifndef HEDGEKIT_BOUNDS_HPP
#define HEDGEKIT_BOUNDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hedgekit/core.hpp"
#include "hedgekit/learners.hpp"

// Closed-form regret guarantees, evaluated so that live traces can be
// checked against them. The [0,1] forms apply to streams certified to lie
// in the unit interval; the *_scaled forms take the observed scale
// sigma = max_t max_k (loss_{t,k} - min_j loss_{t,j}) and the optimally
// translated best loss N* = L* - sum_t min_k loss_{t,k}, and reduce to the
// [0,1] forms at sigma = 1 with zero per-round minima.

namespace hedgekit::bounds {

// ln K / eta + eta * rounds / 8, the worst-case guarantee for a fixed rate
// on unit-range losses. Throws param_error for eta <= 0 / non-finite,
// experts < 2 or rounds < 1.
double hoeffding_bound(double eta, double rounds, double experts);

// 2 sqrt(V ln K) + (4/3) ln K + 2.
double adahedge_variance_bound(double variance, double experts);

// 2 sqrt(L*(T - L*)/T ln K) + (16/3) ln K + 2. Requires 0 <= L* <= T
// (input_error otherwise).
double adahedge_regret_bound(double best_loss, double rounds, double experts);

// 2 sqrt(N*(sigma T - N*)/T ln K) + sigma ((16/3) ln K + 2).
double adahedge_regret_bound_scaled(double translated_best, double rounds,
                                    double experts, double sigma);

// The two FlipFlop leading constants and additive constants.
//   lucky_factor   = phi alpha/(phi-1) + 2 alpha + 1
//   lucky_additive = alpha phi/(phi-1) + 2 alpha
//   c1             = phi/(phi-1) + phi/alpha + 2
//   c2             = phi/alpha
struct FlipFlopConstants {
  double lucky_factor;
  double lucky_additive;
  double c1;
  double c2;
};
FlipFlopConstants flipflop_constants(double phi, double alpha);

struct FlipFlopBounds {
  double vs_ftl;      // lucky_factor * R_ftl + lucky_additive (scaled)
  double worst_case;  // c1 sqrt(L*(T-L*)/T ln K) + c1(c1+2/3) ln K
                      //   + c1 sqrt(c2 ln K) + c1 + c2 (scaled)
};
FlipFlopBounds flipflop_bounds(double ftl_regret, double best_loss,
                               double rounds, double experts, double phi,
                               double alpha);
FlipFlopBounds flipflop_bounds_scaled(double ftl_regret,
                                      double translated_best, double rounds,
                                      double experts, double sigma, double phi,
                                      double alpha);

// The alpha that equalizes the two leading factors at a given phi:
// (2 phi - 1 + sqrt(12 phi^3 - 16 phi^2 + 4 phi + 1)) / (6 phi - 4).
double equalizing_alpha(double phi);

struct FlipFlopParams {
  double phi;
  double alpha;
};

// Minimizes the equalized leading factor over phi in (1, 10] by bracketed
// scalar search (tolerance 1e-9 on phi). Lands near (2.37, 1.243).
FlipFlopParams optimal_flipflop_params();

struct BoundCheck {
  std::string name;
  double value;     // the bound
  double observed;  // the quantity it bounds
  bool satisfied;
  bool degenerate_scale = false;  // sigma == 0: bound collapses to constants
  std::vector<std::pair<std::string, double>> inputs;
};

// Evaluates every guarantee applicable to the learner that produced the
// trace and flags violations (violations are data, not errors). The [0,1]
// forms are used only when the stream was observed to lie in [0,1];
// otherwise the sigma-scaled forms apply. The FlipFlop-versus-FTL bound
// needs the FTL regret on the same stream; it is skipped when absent.
std::vector<BoundCheck> check_trace(const Trace& trace, const LearnerKind& kind,
                                    std::size_t experts,
                                    std::optional<double> ftl_regret = {});

}  // namespace hedgekit::bounds

#endif  // HEDGEKIT_BOUNDS_HPP
