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

#include "hedgekit/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "hedgekit/errors.hpp"
#include "kernels_impl.hpp"

namespace hedgekit::kernels {

namespace detail {

// ---- scalar reference kernels ----------------------------------------------

static double s_min_value(const double* x, std::size_t n) {
  double mn = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] < mn) mn = x[i];
  }
  return mn;
}

static double s_shifted_exp(const double* x, std::size_t n, double shift,
                            double rate, double* out) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double arg = -rate * (x[i] - shift);
    const double e = arg < kExpCutoff ? 0.0 : std::exp(arg);
    out[i] = e;
    sum += e;
  }
  return sum;
}

static double s_shifted_exp_sum(const double* x, std::size_t n, double shift,
                                double rate) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double arg = -rate * (x[i] - shift);
    sum += arg < kExpCutoff ? 0.0 : std::exp(arg);
  }
  return sum;
}

static double s_dot(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

static double s_weighted_sqdev(const double* w, const double* x, std::size_t n,
                               double center) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - center;
    sum += w[i] * d * d;
  }
  return sum;
}

static double s_mark_equal(const double* x, std::size_t n, double value,
                           double* out) {
  double count = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double hit = x[i] == value ? 1.0 : 0.0;
    out[i] = hit;
    count += hit;
  }
  return count;
}

static void s_scale(double* x, std::size_t n, double factor) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= factor;
}

static void s_add(double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] += y[i];
}

const KernelTable scalar_table = {
    s_min_value, s_shifted_exp, s_shifted_exp_sum, s_dot,
    s_weighted_sqdev, s_mark_equal, s_scale, s_add,
};

}  // namespace detail

// ---- backend selection ------------------------------------------------------

namespace {

struct Dispatch {
  const detail::KernelTable* table;
  Backend backend;
};

Dispatch pick_default() {
#if defined(HEDGEKIT_HAVE_AVX2_KERNELS)
  if (const char* env = std::getenv("HEDGEKIT_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) {
      return {&detail::scalar_table, Backend::scalar};
    }
    if (std::strcmp(env, "avx2") == 0 && detail::cpu_has_avx2()) {
      return {&detail::avx2_table, Backend::avx2};
    }
  }
  if (detail::cpu_has_avx2()) return {&detail::avx2_table, Backend::avx2};
#endif
  return {&detail::scalar_table, Backend::scalar};
}

Dispatch& dispatch() {
  static Dispatch d = pick_default();
  return d;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

Backend active_backend() { return dispatch().backend; }

bool backend_supported(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(HEDGEKIT_HAVE_AVX2_KERNELS)
  return detail::cpu_has_avx2();
#else
  return false;
#endif
}

void force_backend(Backend b) {
  if (!backend_supported(b)) {
    throw param_error(std::string("kernel backend not supported here: ") +
                      backend_name(b));
  }
#if defined(HEDGEKIT_HAVE_AVX2_KERNELS)
  dispatch() = b == Backend::avx2
                   ? Dispatch{&detail::avx2_table, Backend::avx2}
                   : Dispatch{&detail::scalar_table, Backend::scalar};
#else
  dispatch() = {&detail::scalar_table, Backend::scalar};
#endif
}

// ---- public entry points ----------------------------------------------------

double min_value(std::span<const double> x) {
  return dispatch().table->min_value(x.data(), x.size());
}

double shifted_exp(std::span<const double> x, double shift, double rate,
                   std::span<double> out) {
  return dispatch().table->shifted_exp(x.data(), x.size(), shift, rate,
                                       out.data());
}

double shifted_exp_sum(std::span<const double> x, double shift, double rate) {
  return dispatch().table->shifted_exp_sum(x.data(), x.size(), shift, rate);
}

double dot(std::span<const double> a, std::span<const double> b) {
  return dispatch().table->dot(a.data(), b.data(), a.size());
}

double weighted_sqdev(std::span<const double> w, std::span<const double> x,
                      double center) {
  return dispatch().table->weighted_sqdev(w.data(), x.data(), w.size(), center);
}

double mark_equal(std::span<const double> x, double value,
                  std::span<double> out) {
  return dispatch().table->mark_equal(x.data(), x.size(), value, out.data());
}

void scale(std::span<double> x, double factor) {
  dispatch().table->scale(x.data(), x.size(), factor);
}

void add(std::span<double> x, std::span<const double> y) {
  dispatch().table->add(x.data(), y.data(), x.size());
}

}  // namespace hedgekit::kernels
