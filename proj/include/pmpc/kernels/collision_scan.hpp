#pragma once

#include <cstddef>

namespace pmpc::kernels {

/// First index k in [0, n) with
///   (ex·(x1-x2))² + (ey·(y1-y2))² + (ez·(z1-z2))² < tol_sq,
/// or -1 if no sample is that close. Arrays are SoA positions of the two
/// trajectories at a common sample grid. Dispatches to the active SIMD level.
std::ptrdiff_t first_proximity_index(const double* x1, const double* y1, const double* z1,
                                     const double* x2, const double* y2, const double* z2,
                                     std::size_t n, double ex, double ey, double ez,
                                     double tol_sq);

namespace detail {
std::ptrdiff_t first_proximity_index_scalar(const double* x1, const double* y1,
                                            const double* z1, const double* x2,
                                            const double* y2, const double* z2,
                                            std::size_t n, double ex, double ey, double ez,
                                            double tol_sq);
#if defined(PMPC_HAVE_AVX2)
std::ptrdiff_t first_proximity_index_avx2(const double* x1, const double* y1,
                                          const double* z1, const double* x2,
                                          const double* y2, const double* z2,
                                          std::size_t n, double ex, double ey, double ez,
                                          double tol_sq);
#endif
}  // namespace detail

}  // namespace pmpc::kernels
