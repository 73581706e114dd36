// Compiled with -mavx2. Nothing in here may run unless the dispatcher has
// confirmed AVX2 support on the executing CPU.

#include <immintrin.h>

#include <algorithm>
#include <cassert>

#include "locc/kernels.hpp"

namespace locc::kernels {
namespace {

// Inclusive prefix sum across the four lanes of v.
inline __m256d lane_prefix_sum(__m256d v) {
  const __m256d zero = _mm256_setzero_pd();
  // [0, v0, v1, v2]
  __m256d shifted = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(2, 1, 0, 0)), zero, 0b0001);
  v = _mm256_add_pd(v, shifted);
  // [0, 0, v0, v1]
  shifted = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 0, 0, 0)), zero, 0b0011);
  return _mm256_add_pd(v, shifted);
}

double max_prefix_excess_avx2(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size() && !x.empty());
  const std::size_t n = x.size();
  std::size_t i = 0;
  __m256d carry = _mm256_setzero_pd();
  __m256d worst = _mm256_set1_pd(x[0] - y[0]);
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i));
    const __m256d prefix = _mm256_add_pd(lane_prefix_sum(d), carry);
    worst = _mm256_max_pd(worst, prefix);
    carry = _mm256_permute4x64_pd(prefix, _MM_SHUFFLE(3, 3, 3, 3));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, worst);
  double result = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  double running = _mm256_cvtsd_f64(carry);
  for (; i < n; ++i) {
    running += x[i] - y[i];
    result = std::max(result, running);
  }
  return result;
}

void outer_product_avx2(std::span<const double> x, std::span<const double> y,
                        std::span<double> out) {
  assert(out.size() == x.size() * y.size());
  const std::size_t ny = y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const __m256d xi = _mm256_set1_pd(x[i]);
    double* row = out.data() + i * ny;
    std::size_t j = 0;
    for (; j + 4 <= ny; j += 4) {
      _mm256_storeu_pd(row + j, _mm256_mul_pd(xi, _mm256_loadu_pd(y.data() + j)));
    }
    for (; j < ny; ++j) row[j] = x[i] * y[j];
  }
}

void axpy_avx2(double alpha, std::span<const double> x, std::span<double> out) {
  assert(out.size() == x.size());
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= x.size(); i += 4) {
    const __m256d prod = _mm256_mul_pd(a, _mm256_loadu_pd(x.data() + i));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_loadu_pd(out.data() + i), prod));
  }
  for (; i < x.size(); ++i) out[i] += alpha * x[i];
}

}  // namespace

namespace detail {
const KernelSet& avx2_unchecked() {
  static constexpr KernelSet set{"avx2", &max_prefix_excess_avx2, &outer_product_avx2, &axpy_avx2};
  return set;
}
}  // namespace detail

}  // namespace locc::kernels
