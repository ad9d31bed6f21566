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
#include <vector>

#include "hedgekit/kernels.hpp"

using namespace hedgekit;

namespace {

// Odd sizes cover the SIMD remainder loops.
const std::vector<std::size_t> kSizes = {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 40};

struct BackendGuard {
  kernels::Backend saved;
  BackendGuard() : saved(kernels::active_backend()) {}
  ~BackendGuard() { kernels::force_backend(saved); }
};

bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace

TEST_CASE("scalar backend always available") {
  CHECK(kernels::backend_supported(kernels::Backend::scalar));
  CHECK(std::string(kernels::backend_name(kernels::active_backend())) !=
        std::string());
}

TEST_CASE("shifted_exp matches std::exp on the scalar backend") {
  BackendGuard guard;
  kernels::force_backend(kernels::Backend::scalar);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> loss(0.0, 60.0);
  std::vector<double> x(8), out(8);
  for (int iter = 0; iter < 200; ++iter) {
    for (auto& v : x) v = loss(rng);
    const double rate = std::uniform_real_distribution<double>(0.01, 10.0)(rng);
    const double mn = kernels::min_value(x);
    const double sum = kernels::shifted_exp(x, mn, rate, out);
    double expect_sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double expect = std::exp(-rate * (x[i] - mn));
      CHECK(out[i] == expect);
      expect_sum += expect;
    }
    CHECK(sum == expect_sum);
  }
}

TEST_CASE("avx2 backend agrees with scalar" *
          doctest::skip(!kernels::backend_supported(kernels::Backend::avx2))) {
  BackendGuard guard;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (const std::size_t n : kSizes) {
    std::vector<double> x(n), w(n), out_s(n), out_v(n);
    for (int iter = 0; iter < 50; ++iter) {
      for (auto& v : x) v = 200.0 * unit(rng) - 40.0;
      for (auto& v : w) v = unit(rng);
      const double rate = std::pow(10.0, 3.0 * unit(rng) - 2.0);
      const double center = unit(rng);

      kernels::force_backend(kernels::Backend::scalar);
      const double mn_s = kernels::min_value(x);
      const double sum_s = kernels::shifted_exp(x, mn_s, rate, out_s);
      const double sum_only_s = kernels::shifted_exp_sum(x, mn_s, rate);
      const double dot_s = kernels::dot(w, x);
      const double var_s = kernels::weighted_sqdev(w, x, center);

      kernels::force_backend(kernels::Backend::avx2);
      const double mn_v = kernels::min_value(x);
      const double sum_v = kernels::shifted_exp(x, mn_v, rate, out_v);
      const double sum_only_v = kernels::shifted_exp_sum(x, mn_v, rate);
      const double dot_v = kernels::dot(w, x);
      const double var_v = kernels::weighted_sqdev(w, x, center);

      CHECK(mn_s == mn_v);  // min is order-independent and exact
      CHECK(rel_close(sum_s, sum_v, 1e-13));
      // the sum-only path repeats the same reduction within each backend
      CHECK(sum_only_s == sum_s);
      CHECK(sum_only_v == sum_v);
      CHECK(rel_close(sum_only_s, sum_only_v, 1e-13));
      CHECK(rel_close(dot_s, dot_v, 1e-13));
      CHECK(rel_close(var_s, var_v, 1e-13));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(rel_close(out_s[i], out_v[i], 1e-13));
      }
    }
  }
}

TEST_CASE("avx2 exp stays within 2e-14 of libm over the full range" *
          doctest::skip(!kernels::backend_supported(kernels::Backend::avx2))) {
  BackendGuard guard;
  kernels::force_backend(kernels::Backend::avx2);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> arg(0.0, 708.0);
  std::vector<double> x(4), out(4);
  for (int iter = 0; iter < 5000; ++iter) {
    for (auto& v : x) v = arg(rng);
    kernels::shifted_exp(x, 0.0, 1.0, out);  // out[i] = exp(-x[i])
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double expect = std::exp(-x[i]);
      CHECK(std::fabs(out[i] - expect) <= 2e-14 * expect);
    }
  }
}

TEST_CASE("the minimum entry maps to exactly one in every backend") {
  // The min-shift guarantees an argument of exactly zero at the argmin, so
  // the unnormalized weight there is exactly e^0 = 1 regardless of backend.
  BackendGuard guard;
  std::vector<double> x = {4.25, -1.5, 7.0, -1.5, 3.0};
  std::vector<double> out(x.size());
  for (const auto backend :
       {kernels::Backend::scalar, kernels::Backend::avx2}) {
    if (!kernels::backend_supported(backend)) continue;
    kernels::force_backend(backend);
    kernels::shifted_exp(x, -1.5, 3.7, out);
    CHECK(out[1] == 1.0);
    CHECK(out[3] == 1.0);
  }
}

TEST_CASE("exp cutoff flushes to exact zero in every backend") {
  BackendGuard guard;
  std::vector<double> x = {0.0, 1.0, 800.0, 5000.0};
  std::vector<double> out(x.size());
  for (const auto backend :
       {kernels::Backend::scalar, kernels::Backend::avx2}) {
    if (!kernels::backend_supported(backend)) continue;
    kernels::force_backend(backend);
    kernels::shifted_exp(x, 0.0, 1.0, out);
    CHECK(out[0] == 1.0);
    CHECK(out[2] == 0.0);
    CHECK(out[3] == 0.0);
  }
}

TEST_CASE("mark_equal counts exact ties") {
  BackendGuard guard;
  std::vector<double> x = {2.0, 1.0, 1.0, 3.0, 1.0, 2.0, 1.0};
  std::vector<double> out(x.size());
  for (const auto backend :
       {kernels::Backend::scalar, kernels::Backend::avx2}) {
    if (!kernels::backend_supported(backend)) continue;
    kernels::force_backend(backend);
    CHECK(kernels::mark_equal(x, 1.0, out) == 4.0);
    CHECK(out[1] == 1.0);
    CHECK(out[0] == 0.0);
  }
}

TEST_CASE("add and scale are elementwise-identical across backends") {
  BackendGuard guard;
  if (!kernels::backend_supported(kernels::Backend::avx2)) return;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  for (const std::size_t n : kSizes) {
    std::vector<double> a(n), b(n), a2;
    for (auto& v : a) v = unit(rng);
    for (auto& v : b) v = unit(rng);
    a2 = a;

    kernels::force_backend(kernels::Backend::scalar);
    kernels::add(a, b);
    kernels::scale(a, 1.0 / 3.0);
    kernels::force_backend(kernels::Backend::avx2);
    kernels::add(a2, b);
    kernels::scale(a2, 1.0 / 3.0);
    for (std::size_t i = 0; i < n; ++i) CHECK(a[i] == a2[i]);
  }
}
