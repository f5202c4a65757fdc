// AVX2 lane of the proximity scan. Same arithmetic order as the scalar
// reference; block-wise compare with an exact first-lane resolution, so the
// returned index is always identical to the scalar path.
#if defined(PMPC_HAVE_AVX2)

#include <immintrin.h>

#include "pmpc/kernels/collision_scan.hpp"

namespace pmpc::kernels::detail {

std::ptrdiff_t first_proximity_index_avx2(const double* x1, const double* y1,
                                          const double* z1, const double* x2,
                                          const double* y2, const double* z2,
                                          std::size_t n, double ex, double ey, double ez,
                                          double tol_sq) {
  const __m256d vex = _mm256_set1_pd(ex);
  const __m256d vey = _mm256_set1_pd(ey);
  const __m256d vez = _mm256_set1_pd(ez);
  const __m256d vtol = _mm256_set1_pd(tol_sq);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx =
        _mm256_mul_pd(vex, _mm256_sub_pd(_mm256_loadu_pd(x1 + i), _mm256_loadu_pd(x2 + i)));
    const __m256d dy =
        _mm256_mul_pd(vey, _mm256_sub_pd(_mm256_loadu_pd(y1 + i), _mm256_loadu_pd(y2 + i)));
    const __m256d dz =
        _mm256_mul_pd(vez, _mm256_sub_pd(_mm256_loadu_pd(z1 + i), _mm256_loadu_pd(z2 + i)));
    const __m256d dsq = _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), _mm256_mul_pd(dz, dz));
    const int hit = _mm256_movemask_pd(_mm256_cmp_pd(dsq, vtol, _CMP_LT_OQ));
    if (hit != 0)
      return static_cast<std::ptrdiff_t>(i) + __builtin_ctz(static_cast<unsigned>(hit));
  }
  for (; i < n; ++i) {
    const double dx = ex * (x1[i] - x2[i]);
    const double dy = ey * (y1[i] - y2[i]);
    const double dz = ez * (z1[i] - z2[i]);
    if ((dx * dx + dy * dy) + dz * dz < tol_sq) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace pmpc::kernels::detail

#endif  // PMPC_HAVE_AVX2
