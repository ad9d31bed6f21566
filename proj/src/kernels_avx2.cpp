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

#include "kernels_impl.hpp"

#if defined(HEDGEKIT_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#define HK_AVX2 __attribute__((target("avx2,fma")))

namespace hedgekit::kernels::detail {

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace {

HK_AVX2 inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swap = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}

HK_AVX2 inline double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_min_pd(lo, hi);
  __m128d swap = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_min_sd(lo, swap));
}

// exp(x) for x in [kExpCutoff, 0]; lanes below the cutoff return exactly 0.
// Cephes-style: reduce x = n ln2 + r with |r| <= ln2/2, evaluate a Pade
// approximant of e^r, then scale by 2^n through the exponent bits. Accurate
// to about 2 ulp, which the kernel equivalence tests pin down.
HK_AVX2 inline __m256d exp_nonpos(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);

  const __m256d live =
      _mm256_cmp_pd(x, _mm256_set1_pd(kExpCutoff), _CMP_GE_OQ);
  // Clamp dead lanes so their junk cannot produce NaN before masking.
  x = _mm256_blendv_pd(_mm256_set1_pd(kExpCutoff), x, live);

  const __m256d n = _mm256_round_pd(
      _mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);

  const __m256d rr = _mm256_mul_pd(r, r);
  __m256d px = _mm256_fmadd_pd(p0, rr, p1);
  px = _mm256_fmadd_pd(px, rr, p2);
  px = _mm256_mul_pd(px, r);
  __m256d qx = _mm256_fmadd_pd(q0, rr, q1);
  qx = _mm256_fmadd_pd(qx, rr, q2);
  qx = _mm256_fmadd_pd(qx, rr, q3);
  const __m256d e =
      _mm256_fmadd_pd(two, _mm256_div_pd(px, _mm256_sub_pd(qx, px)), one);

  // 2^n via exponent bits: n is integral in [-1022, 0] here.
  const __m256d biased = _mm256_add_pd(n, _mm256_set1_pd(1023.0));
  const __m256d magic = _mm256_add_pd(biased, _mm256_set1_pd(4503599627370496.0));
  const __m256i pow2_bits = _mm256_slli_epi64(_mm256_castpd_si256(magic), 52);
  const __m256d scaled = _mm256_mul_pd(e, _mm256_castsi256_pd(pow2_bits));
  return _mm256_and_pd(scaled, live);
}

inline double tail_exp(double arg) {
  return arg < kExpCutoff ? 0.0 : std::exp(arg);
}

HK_AVX2 double v_min_value(const double* x, std::size_t n) {
  std::size_t i = 0;
  double mn = x[0];
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) {
      acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + i));
    }
    mn = hmin(acc);
  }
  for (; i < n; ++i) {
    if (x[i] < mn) mn = x[i];
  }
  return mn;
}

HK_AVX2 double v_shifted_exp(const double* x, std::size_t n, double shift,
                             double rate, double* out) {
  const __m256d vshift = _mm256_set1_pd(shift);
  const __m256d vrate = _mm256_set1_pd(rate);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d arg =
        _mm256_mul_pd(_mm256_sub_pd(vshift, _mm256_loadu_pd(x + i)), vrate);
    const __m256d e = exp_nonpos(arg);
    _mm256_storeu_pd(out + i, e);
    acc = _mm256_add_pd(acc, e);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    const double e = tail_exp(-rate * (x[i] - shift));
    out[i] = e;
    sum += e;
  }
  return sum;
}

HK_AVX2 double v_shifted_exp_sum(const double* x, std::size_t n, double shift,
                                 double rate) {
  const __m256d vshift = _mm256_set1_pd(shift);
  const __m256d vrate = _mm256_set1_pd(rate);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d arg =
        _mm256_mul_pd(_mm256_sub_pd(vshift, _mm256_loadu_pd(x + i)), vrate);
    acc = _mm256_add_pd(acc, exp_nonpos(arg));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += tail_exp(-rate * (x[i] - shift));
  return sum;
}

HK_AVX2 double v_dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

HK_AVX2 double v_weighted_sqdev(const double* w, const double* x,
                                std::size_t n, double center) {
  const __m256d vc = _mm256_set1_pd(center);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_mul_pd(d, d), acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    const double d = x[i] - center;
    sum += w[i] * d * d;
  }
  return sum;
}

HK_AVX2 double v_mark_equal(const double* x, std::size_t n, double value,
                            double* out) {
  const __m256d vv = _mm256_set1_pd(value);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d hit =
        _mm256_and_pd(_mm256_cmp_pd(_mm256_loadu_pd(x + i), vv, _CMP_EQ_OQ), one);
    _mm256_storeu_pd(out + i, hit);
    acc = _mm256_add_pd(acc, hit);
  }
  double count = hsum(acc);
  for (; i < n; ++i) {
    const double hit = x[i] == value ? 1.0 : 0.0;
    out[i] = hit;
    count += hit;
  }
  return count;
}

HK_AVX2 void v_scale(double* x, std::size_t n, double factor) {
  const __m256d vf = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), vf));
  }
  for (; i < n; ++i) x[i] *= factor;
}

HK_AVX2 void v_add(double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i,
                     _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) x[i] += y[i];
}

}  // namespace

const KernelTable avx2_table = {
    v_min_value, v_shifted_exp, v_shifted_exp_sum, v_dot,
    v_weighted_sqdev, v_mark_equal, v_scale, v_add,
};

}  // namespace hedgekit::kernels::detail

#endif  // HEDGEKIT_HAVE_AVX2_KERNELS
