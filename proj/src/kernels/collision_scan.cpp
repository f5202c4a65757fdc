#include "pmpc/kernels/collision_scan.hpp"

#include "pmpc/kernels/dispatch.hpp"

namespace pmpc::kernels {

namespace detail {

std::ptrdiff_t first_proximity_index_scalar(const double* x1, const double* y1,
                                            const double* z1, const double* x2,
                                            const double* y2, const double* z2,
                                            std::size_t n, double ex, double ey, double ez,
                                            double tol_sq) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = ex * (x1[i] - x2[i]);
    const double dy = ey * (y1[i] - y2[i]);
    const double dz = ez * (z1[i] - z2[i]);
    const double dsq = (dx * dx + dy * dy) + dz * dz;
    if (dsq < tol_sq) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace detail

std::ptrdiff_t first_proximity_index(const double* x1, const double* y1, const double* z1,
                                     const double* x2, const double* y2, const double* z2,
                                     std::size_t n, double ex, double ey, double ez,
                                     double tol_sq) {
#if defined(PMPC_HAVE_AVX2)
  if (active_simd_level() == SimdLevel::avx2)
    return detail::first_proximity_index_avx2(x1, y1, z1, x2, y2, z2, n, ex, ey, ez,
                                              tol_sq);
#endif
  return detail::first_proximity_index_scalar(x1, y1, z1, x2, y2, z2, n, ex, ey, ez,
                                              tol_sq);
}

}  // namespace pmpc::kernels
