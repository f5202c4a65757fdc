#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

namespace pmpc::kernels {

/// Slack for accepting arc durations that round to a hair below zero.
inline constexpr double kArcTimeSlack = 1e-9;

/// Minimum time for a 1-D double integrator from (0, v0) to (d, vf) with
/// |accel| = a on both arcs (accelerate-then-decelerate or the sign-flipped
/// pattern, whichever is feasible and faster). Reference scalar kernel; the
/// batch variants below reproduce it bit for bit.
inline double axis_min_time_scalar(double d, double v0, double vf, double a) noexcept {
  const double vv = 0.5 * (v0 * v0 + vf * vf);
  double best = std::numeric_limits<double>::infinity();
  {
    const double h = a * d + vv;  // accelerate first: switch speed v1 = +sqrt(h)
    if (h >= 0.0) {
      const double v1 = std::sqrt(h);
      const double t1 = (v1 - v0) / a;
      const double t2 = (v1 - vf) / a;
      if (t1 >= -kArcTimeSlack && t2 >= -kArcTimeSlack)
        best = std::fmax(t1, 0.0) + std::fmax(t2, 0.0);
    }
  }
  {
    const double h = vv - a * d;  // decelerate first: v1 = -sqrt(h)
    if (h >= 0.0) {
      const double v1 = -std::sqrt(h);
      const double t1 = (v0 - v1) / a;
      const double t2 = (vf - v1) / a;
      if (t1 >= -kArcTimeSlack && t2 >= -kArcTimeSlack)
        best = std::fmin(best, std::fmax(t1, 0.0) + std::fmax(t2, 0.0));
    }
  }
  return best;
}

/// Batched axis_min_time over a fixed displacement d and per-pair start/end
/// velocities (the velocity-graph edge pattern: every pair of samples between
/// two fixed waypoints). Dispatches to the active SIMD level.
void axis_min_time_batch(double d, const double* v0, const double* vf, double a,
                         double* out, std::size_t n);

namespace detail {
void axis_min_time_batch_scalar(double d, const double* v0, const double* vf, double a,
                                double* out, std::size_t n);
#if defined(PMPC_HAVE_AVX2)
void axis_min_time_batch_avx2(double d, const double* v0, const double* vf, double a,
                              double* out, std::size_t n);
#endif
}  // namespace detail

}  // namespace pmpc::kernels
