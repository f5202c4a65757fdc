// AVX2 lane of the axis minimum-time kernel. Mirrors axis_min_time_scalar
// operation for operation (mul/add/div/sqrt, no FMA) so results are
// bit-identical to the scalar reference.
#if defined(PMPC_HAVE_AVX2)

#include <immintrin.h>

#include "pmpc/kernels/axis_min_time.hpp"

namespace pmpc::kernels::detail {

void axis_min_time_batch_avx2(double d, const double* v0, const double* vf, double a,
                              double* out, std::size_t n) {
  const __m256d vd = _mm256_set1_pd(d);
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vad = _mm256_mul_pd(va, vd);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d slack = _mm256_set1_pd(-kArcTimeSlack);
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = _mm256_loadu_pd(v0 + i);
    const __m256d f = _mm256_loadu_pd(vf + i);
    const __m256d vv = _mm256_mul_pd(
        half, _mm256_add_pd(_mm256_mul_pd(s, s), _mm256_mul_pd(f, f)));

    // accelerate first
    const __m256d hp = _mm256_add_pd(vad, vv);
    const __m256d v1p = _mm256_sqrt_pd(_mm256_max_pd(hp, zero));
    const __m256d t1p = _mm256_div_pd(_mm256_sub_pd(v1p, s), va);
    const __m256d t2p = _mm256_div_pd(_mm256_sub_pd(v1p, f), va);
    __m256d okp = _mm256_cmp_pd(hp, zero, _CMP_GE_OQ);
    okp = _mm256_and_pd(okp, _mm256_cmp_pd(t1p, slack, _CMP_GE_OQ));
    okp = _mm256_and_pd(okp, _mm256_cmp_pd(t2p, slack, _CMP_GE_OQ));
    const __m256d tp =
        _mm256_add_pd(_mm256_max_pd(t1p, zero), _mm256_max_pd(t2p, zero));
    const __m256d best_p = _mm256_blendv_pd(inf, tp, okp);

    // decelerate first
    const __m256d hm = _mm256_sub_pd(vv, vad);
    const __m256d v1m =
        _mm256_sub_pd(zero, _mm256_sqrt_pd(_mm256_max_pd(hm, zero)));
    const __m256d t1m = _mm256_div_pd(_mm256_sub_pd(s, v1m), va);
    const __m256d t2m = _mm256_div_pd(_mm256_sub_pd(f, v1m), va);
    __m256d okm = _mm256_cmp_pd(hm, zero, _CMP_GE_OQ);
    okm = _mm256_and_pd(okm, _mm256_cmp_pd(t1m, slack, _CMP_GE_OQ));
    okm = _mm256_and_pd(okm, _mm256_cmp_pd(t2m, slack, _CMP_GE_OQ));
    const __m256d tm =
        _mm256_add_pd(_mm256_max_pd(t1m, zero), _mm256_max_pd(t2m, zero));
    const __m256d best_m = _mm256_blendv_pd(inf, tm, okm);

    _mm256_storeu_pd(out + i, _mm256_min_pd(best_p, best_m));
  }
  for (; i < n; ++i) out[i] = axis_min_time_scalar(d, v0[i], vf[i], a);
}

}  // namespace pmpc::kernels::detail

#endif  // PMPC_HAVE_AVX2
