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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hedgekit/bounds.hpp"
#include "hedgekit/datagen.hpp"
#include "hedgekit/errors.hpp"
#include "hedgekit/learners.hpp"

using namespace hedgekit;

namespace {

double round2(double x) { return std::round(x * 100.0) / 100.0; }

}  // namespace

TEST_CASE("hoeffding bound equalizes at the tuned rate") {
  const double ln2 = std::log(2.0);
  const double tuned = std::sqrt(8.0 * ln2 / 1000.0);
  // Both terms equal, so the bound collapses to sqrt(T ln K / 2).
  CHECK(bounds::hoeffding_bound(tuned, 1000.0, 2.0) ==
        doctest::Approx(std::sqrt(1000.0 * ln2 / 2.0)).epsilon(1e-12));
  CHECK(bounds::hoeffding_bound(ln2, 8.0, 2.0) ==
        doctest::Approx(1.0 + ln2).epsilon(1e-12));
  CHECK_THROWS_AS(bounds::hoeffding_bound(0.1, 0.0, 2.0), param_error);
  CHECK_THROWS_AS(bounds::hoeffding_bound(0.0, 10.0, 2.0), param_error);
  CHECK_THROWS_AS(bounds::hoeffding_bound(kRateInf, 10.0, 2.0), param_error);
}

TEST_CASE("adahedge variance bound values") {
  const double ln2 = std::log(2.0);
  CHECK(bounds::adahedge_variance_bound(0.0, 2.0) ==
        doctest::Approx(4.0 / 3.0 * ln2 + 2.0).epsilon(1e-14));
  CHECK(bounds::adahedge_variance_bound(1.0, 2.0) ==
        doctest::Approx(4.589305463061989).epsilon(1e-12));
}

TEST_CASE("adahedge regret bound values and symmetry") {
  const double ln2 = std::log(2.0);
  const double floor = 16.0 / 3.0 * ln2 + 2.0;
  // Maximized at L* = T/2 where the dominant term is sqrt(T ln K).
  CHECK(bounds::adahedge_regret_bound(500.0, 1000.0, 2.0) ==
        doctest::Approx(std::sqrt(1000.0 * ln2) + floor).epsilon(1e-12));
  CHECK(bounds::adahedge_regret_bound(0.0, 1000.0, 2.0) ==
        doctest::Approx(floor).epsilon(1e-14));
  CHECK(bounds::adahedge_regret_bound(1000.0, 1000.0, 2.0) ==
        doctest::Approx(floor).epsilon(1e-14));
  CHECK_THROWS_AS(bounds::adahedge_regret_bound(-1.0, 1000.0, 2.0), input_error);
  CHECK_THROWS_AS(bounds::adahedge_regret_bound(1001.0, 1000.0, 2.0),
                  input_error);
}

TEST_CASE("adahedge regret bound is monotone in K and peaks at T/2") {
  const double peak = bounds::adahedge_regret_bound(500.0, 1000.0, 2.0);
  for (const double lstar : {0.0, 100.0, 250.0, 400.0, 600.0, 900.0, 1000.0}) {
    CHECK(bounds::adahedge_regret_bound(lstar, 1000.0, 2.0) <= peak + 1e-12);
  }
  double prev = 0.0;
  for (double experts = 2.0; experts <= 64.0; experts *= 2.0) {
    const double b = bounds::adahedge_regret_bound(300.0, 1000.0, experts);
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("flipflop constants match the frozen two-decimal values") {
  const auto c = bounds::flipflop_constants(2.37, 1.243);
  CHECK(round2(c.lucky_factor) == 5.64);
  CHECK(round2(c.c1) == 5.64);
  CHECK(round2(c.lucky_additive) == 4.64);
  const double ln_k_coeff = c.c1 * (c.c1 + 2.0 / 3.0);
  const double sqrt_ln_k_coeff = c.c1 * std::sqrt(c.c2);
  CHECK(round2(ln_k_coeff) == 35.53);
  CHECK(round2(sqrt_ln_k_coeff) == 7.78);
  CHECK(round2(c.c1 + c.c2) == 7.54);
}

TEST_CASE("flipflop bounds: zero FTL regret leaves only the additive term") {
  const auto b = bounds::flipflop_bounds(0.0, 0.0, 10.0, 2.0, 2.37, 1.243);
  const auto c = bounds::flipflop_constants(2.37, 1.243);
  CHECK(b.vs_ftl == doctest::Approx(c.lucky_additive).epsilon(1e-14));
}

TEST_CASE("equalizing alpha closed form") {
  // alpha(2) = (3 + sqrt(41)) / 8
  CHECK(bounds::equalizing_alpha(2.0) ==
        doctest::Approx((3.0 + std::sqrt(41.0)) / 8.0).epsilon(1e-14));
  CHECK_THROWS_AS(bounds::equalizing_alpha(1.0), param_error);
}

TEST_CASE("optimal flipflop parameters land on the equalized optimum") {
  const auto p = bounds::optimal_flipflop_params();
  CHECK(p.phi >= 2.36);
  CHECK(p.phi <= 2.38);
  CHECK(p.alpha >= 1.24);
  CHECK(p.alpha <= 1.25);
  // The two leading factors are equalized at the optimum.
  const auto c = bounds::flipflop_constants(p.phi, p.alpha);
  CHECK(std::fabs(c.lucky_factor - c.c1) <= 1e-6);
}

TEST_CASE("unnormalized forms reduce to the unit forms at sigma=1") {
  CHECK(bounds::adahedge_regret_bound_scaled(300.0, 1000.0, 2.0, 1.0) ==
        bounds::adahedge_regret_bound(300.0, 1000.0, 2.0));
  const auto a = bounds::flipflop_bounds(2.0, 300.0, 1000.0, 2.0, 2.37, 1.243);
  const auto b =
      bounds::flipflop_bounds_scaled(2.0, 300.0, 1000.0, 2.0, 1.0, 2.37, 1.243);
  CHECK(a.vs_ftl == b.vs_ftl);
  CHECK(a.worst_case == b.worst_case);
}

TEST_CASE("unnormalized bounds scale with the stream") {
  // Affine image l' = 3 l + tau of a [0,1] stream with full range: sigma
  // triples and so do the bounds.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  auto stream = datagen::generate({1, 200});
  stream[5] = {0.0, 1.0};  // pin a round with full [0,1] range
  LossStream scaled;
  for (const auto& row : stream) {
    const double tau = shift(rng);
    scaled.push_back({3.0 * row[0] + tau, 3.0 * row[1] + tau});
  }
  const auto t0 = run(AdaHedge{}, stream);
  const auto t1 = run(AdaHedge{}, scaled);
  CHECK(t0.sigma == 1.0);
  CHECK(t1.sigma == doctest::Approx(3.0).epsilon(1e-12));
  const double b0 = bounds::adahedge_regret_bound_scaled(
      t0.translated_best(), 200.0, 2.0, t0.sigma);
  const double b1 = bounds::adahedge_regret_bound_scaled(
      t1.translated_best(), 200.0, 2.0, t1.sigma);
  CHECK(b1 == doctest::Approx(3.0 * b0).epsilon(1e-9));
}

TEST_CASE("degenerate scale: equal losses give a zero bound and zero regret") {
  const LossStream flat(25, LossVector{4.0, 4.0, 4.0});
  const auto trace = run(AdaHedge{}, flat);
  CHECK(trace.sigma == 0.0);
  CHECK_FALSE(trace.unit_range);
  const auto checks = bounds::check_trace(trace, AdaHedge{}, 3);
  for (const auto& c : checks) {
    CHECK(c.degenerate_scale);
    CHECK(c.satisfied);
  }
}

TEST_CASE("check_trace: AdaHedge on experiment 1 satisfies everything") {
  const auto stream = datagen::generate({1, 1000});
  const auto trace = run(AdaHedge{}, stream);
  const auto checks = bounds::check_trace(trace, AdaHedge{}, 2);
  CHECK(checks.size() == 4);
  for (const auto& c : checks) CHECK(c.satisfied);
}

TEST_CASE("check_trace: FTL regret matches its gap and leader-change bound") {
  const auto stream = datagen::generate({1, 1000});
  const auto trace = run(Ftl{}, stream);
  const auto checks = bounds::check_trace(trace, Ftl{}, 2);
  REQUIRE(checks.size() == 2);
  for (const auto& c : checks) CHECK(c.satisfied);
}

TEST_CASE("check_trace: FlipFlop satisfies both published bounds everywhere") {
  for (int xi = 1; xi <= 4; ++xi) {
    const auto stream = datagen::generate({xi, 1000});
    const double ftl_regret = run(Ftl{}, stream).regret();
    const auto trace = run(FlipFlop{}, stream);
    const auto checks = bounds::check_trace(trace, FlipFlop{}, 2, ftl_regret);
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) CHECK(c.satisfied);
  }
}

TEST_CASE("check_trace: hoeffding holds for the tuned fixed rate") {
  const auto stream = datagen::generate({1, 1000});
  const auto trace = run(SafeHedge{1000}, stream);
  const auto checks = bounds::check_trace(trace, SafeHedge{1000}, 2);
  REQUIRE(checks.size() == 1);
  CHECK(checks.front().name == "hoeffding");
  CHECK(checks.front().satisfied);
}
