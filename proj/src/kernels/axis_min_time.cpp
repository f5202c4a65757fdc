#include "pmpc/kernels/axis_min_time.hpp"

#include "pmpc/kernels/dispatch.hpp"

namespace pmpc::kernels {

namespace detail {

void axis_min_time_batch_scalar(double d, const double* v0, const double* vf, double a,
                                double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = axis_min_time_scalar(d, v0[i], vf[i], a);
}

}  // namespace detail

void axis_min_time_batch(double d, const double* v0, const double* vf, double a,
                         double* out, std::size_t n) {
#if defined(PMPC_HAVE_AVX2)
  if (active_simd_level() == SimdLevel::avx2) {
    detail::axis_min_time_batch_avx2(d, v0, vf, a, out, n);
    return;
  }
#endif
  detail::axis_min_time_batch_scalar(d, v0, vf, a, out, n);
}

}  // namespace pmpc::kernels
