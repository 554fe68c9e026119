#include <immintrin.h>

#include "folia/kernels.hpp"
#include "kernel_common.hpp"

namespace folia::kernels {

// Same operation order as eval_scalar, four points per lane group, so the
// results are bitwise identical. Built without FMA contraction.
void eval_avx2(const DensePoly2& p, const double* x, const double* y, std::size_t n, double* value, double* bound) {
  const int dy1 = p.dy + 1;
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d gamma = _mm256_set1_pd(p.gamma);
  const __m256d widen = _mm256_set1_pd(1.0 + 2.0 * p.gamma);
  const __m256d tiny = _mm256_set1_pd(0x1p-1000);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xv = _mm256_loadu_pd(x + k), yv = _mm256_loadu_pd(y + k);
    const __m256d ax = _mm256_andnot_pd(sign, xv), ay = _mm256_andnot_pd(sign, yv);
    __m256d acc = _mm256_setzero_pd(), acc_abs = _mm256_setzero_pd();
    for (int i = p.dx; i >= 0; --i) {
      const double* row = &p.c[i * dy1];
      const double* arow = &p.abs_c[i * dy1];
      __m256d inner = _mm256_setzero_pd(), inner_abs = _mm256_setzero_pd();
      for (int j = p.dy; j >= 0; --j) {
        inner = _mm256_add_pd(_mm256_mul_pd(inner, yv), _mm256_set1_pd(row[j]));
        inner_abs = _mm256_add_pd(_mm256_mul_pd(inner_abs, ay), _mm256_set1_pd(arow[j]));
      }
      acc = _mm256_add_pd(_mm256_mul_pd(acc, xv), inner);
      acc_abs = _mm256_add_pd(_mm256_mul_pd(acc_abs, ax), inner_abs);
    }
    _mm256_storeu_pd(value + k, acc);
    _mm256_storeu_pd(bound + k, _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(gamma, acc_abs), widen), tiny));
  }
  if (k < n) eval_scalar(p, x + k, y + k, n - k, value + k, bound + k);
}

}  // namespace folia::kernels
