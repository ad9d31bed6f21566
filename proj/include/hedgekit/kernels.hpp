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

#ifndef HEDGEKIT_KERNELS_HPP
#define HEDGEKIT_KERNELS_HPP

#include <span>
#include <string>

// Data-parallel inner loops shared by all learners: exponential weights,
// dot products, weighted variances and argmin scans over the K experts.
//
// Every kernel exists in a scalar reference version and (on x86-64) an
// AVX2+FMA version. The backend is selected once at startup: AVX2 when the
// CPU supports it, overridable with the HEDGEKIT_KERNELS environment
// variable ("scalar" or "avx2") or force_backend(). The two versions are
// equivalence-tested against each other; they may differ in the last few
// ulps because SIMD reductions reorder sums.

namespace hedgekit::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
Backend active_backend();
bool backend_supported(Backend b);
// Throws param_error if the backend is not supported on this machine.
void force_backend(Backend b);

// Minimum entry. Input must be nonempty and free of NaN.
double min_value(std::span<const double> x);

// out[i] = exp(-rate * (x[i] - shift)) and returns the sum of out.
// Arguments below -708 map to exactly 0 in both backends so that results
// do not depend on subnormal handling.
double shifted_exp(std::span<const double> x, double shift, double rate,
                   std::span<double> out);

// Sum-only variant of shifted_exp (no stores).
double shifted_exp_sum(std::span<const double> x, double shift, double rate);

// Inner product a . b.
double dot(std::span<const double> a, std::span<const double> b);

// sum_i w[i] * (x[i] - center)^2. Nonnegative for nonnegative weights.
double weighted_sqdev(std::span<const double> w, std::span<const double> x,
                      double center);

// out[i] = 1 where x[i] == value, else 0; returns the match count.
double mark_equal(std::span<const double> x, double value,
                  std::span<double> out);

// x[i] *= factor.
void scale(std::span<double> x, double factor);

// x[i] += y[i]. Elementwise, so bit-identical across backends.
void add(std::span<double> x, std::span<const double> y);

}  // namespace hedgekit::kernels

#endif  // HEDGEKIT_KERNELS_HPP
