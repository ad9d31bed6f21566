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

#ifndef HEDGEKIT_KERNELS_IMPL_HPP
#define HEDGEKIT_KERNELS_IMPL_HPP

#include <cstddef>

// Internal: raw kernel entry points per backend, plus the dispatch table.

namespace hedgekit::kernels::detail {

// exp arguments below this are flushed to exactly zero in every backend.
inline constexpr double kExpCutoff = -708.0;

struct KernelTable {
  double (*min_value)(const double*, std::size_t);
  double (*shifted_exp)(const double*, std::size_t, double, double, double*);
  double (*shifted_exp_sum)(const double*, std::size_t, double, double);
  double (*dot)(const double*, const double*, std::size_t);
  double (*weighted_sqdev)(const double*, const double*, std::size_t, double);
  double (*mark_equal)(const double*, std::size_t, double, double*);
  void (*scale)(double*, std::size_t, double);
  void (*add)(double*, const double*, std::size_t);
};

extern const KernelTable scalar_table;

#if defined(__x86_64__) || defined(__i386__)
#define HEDGEKIT_HAVE_AVX2_KERNELS 1
extern const KernelTable avx2_table;
bool cpu_has_avx2();
#endif

}  // namespace hedgekit::kernels::detail

#endif  // HEDGEKIT_KERNELS_IMPL_HPP
