#include "pmpc/pointmass/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "pmpc/core/errors.hpp"
#include "pmpc/kernels/axis_min_time.hpp"

namespace pmpc::pointmass {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

AxisProfile make_profile(double pos0, double vel0, double pos1, double vel1,
                         double accel, double t1, double t2, double beta) {
  AxisProfile p;
  p.start_pos = pos0;
  p.start_vel = vel0;
  p.end_pos = pos1;
  p.end_vel = vel1;
  p.accel_first = accel;
  p.t1 = std::max(t1, 0.0);
  p.t2 = std::max(t2, 0.0);
  p.beta = beta;
  p.switch_vel = vel0 + accel * p.t1;
  p.switch_pos = pos0 + vel0 * p.t1 + 0.5 * accel * p.t1 * p.t1;
  return p;
}

}  // namespace

double AxisProfile::position_at(double t) const {
  t = std::clamp(t, 0.0, t1 + t2);
  if (t <= t1) return start_pos + start_vel * t + 0.5 * accel_first * t * t;
  const double tau = t - t1;
  return switch_pos + switch_vel * tau - 0.5 * accel_first * tau * tau;
}

double AxisProfile::velocity_at(double t) const {
  t = std::clamp(t, 0.0, t1 + t2);
  if (t <= t1) return start_vel + accel_first * t;
  return switch_vel - accel_first * (t - t1);
}

AxisProfile solve_axis_min_time(double pos0, double vel0, double pos1, double vel1,
                                double a_max) {
  const double d = pos1 - pos0;
  const double vv = 0.5 * (vel0 * vel0 + vel1 * vel1);

  double best_t = kInf;
  double best_accel = 0.0, best_t1 = 0.0, best_t2 = 0.0;

  const double hp = a_max * d + vv;
  if (hp >= 0.0) {
    const double v1 = std::sqrt(hp);
    const double t1 = (v1 - vel0) / a_max;
    const double t2 = (v1 - vel1) / a_max;
    if (t1 >= -kernels::kArcTimeSlack && t2 >= -kernels::kArcTimeSlack) {
      best_t = std::fmax(t1, 0.0) + std::fmax(t2, 0.0);
      best_accel = a_max;
      best_t1 = t1;
      best_t2 = t2;
    }
  }
  const double hm = vv - a_max * d;
  if (hm >= 0.0) {
    const double v1 = -std::sqrt(hm);
    const double t1 = (vel0 - v1) / a_max;
    const double t2 = (vel1 - v1) / a_max;
    if (t1 >= -kernels::kArcTimeSlack && t2 >= -kernels::kArcTimeSlack &&
        std::fmax(t1, 0.0) + std::fmax(t2, 0.0) < best_t) {
      best_t = std::fmax(t1, 0.0) + std::fmax(t2, 0.0);
      best_accel = -a_max;
      best_t1 = t1;
      best_t2 = t2;
    }
  }
  return make_profile(pos0, vel0, pos1, vel1, best_accel, best_t1, best_t2, 1.0);
}

namespace {

/// Candidate root of the time-synchronization quadratic, turned into a
/// profile when admissible.
std::optional<AxisProfile> profile_from_accel(double pos0, double vel0, double pos1,
                                              double vel1, double a_max, double tt,
                                              double accel) {
  if (accel == 0.0 || !std::isfinite(accel)) return std::nullopt;
  const double beta = std::abs(accel) / a_max;
  if (beta <= 0.0 || beta > 1.0 + 1e-12) return std::nullopt;
  const double dv = vel1 - vel0;
  double t2 = 0.5 * (tt - dv / accel);
  double t1 = tt - t2;
  const double slack = 1e-9 * (1.0 + tt);
  if (t1 < -slack || t2 < -slack) return std::nullopt;
  if (t1 < 0.0) {
    t1 = 0.0;
    t2 = tt;
  } else if (t2 < 0.0) {
    t2 = 0.0;
    t1 = tt;
  }
  return make_profile(pos0, vel0, pos1, vel1, accel, t1, t2, std::min(beta, 1.0));
}

double endpoint_residual(const AxisProfile& p) {
  const double tau = p.t2;
  const double end = p.switch_pos + p.switch_vel * tau - 0.5 * p.accel_first * tau * tau;
  return std::abs(end - p.end_pos) + std::abs(p.switch_vel - p.accel_first * tau - p.end_vel);
}

}  // namespace

AxisProfile sync_axis_to_time(double pos0, double vel0, double pos1, double vel1,
                              double a_max, double time_target) {
  const double d = pos1 - pos0;
  const double dv = vel1 - vel0;
  const double tt = time_target;

  if (tt <= 0.0) {
    if (std::abs(d) > 1e-9 || std::abs(dv) > 1e-9)
      throw NoRootError("cannot reach a distinct endpoint in zero time");
    return make_profile(pos0, vel0, pos1, vel1, 0.0, 0.0, 0.0, 1.0);
  }

  const double coast_gap = d - vel0 * tt;
  const double scale = 1.0 + std::abs(d) + std::abs(vel0) * tt;
  if (std::abs(dv) <= 1e-12 * (1.0 + std::abs(vel0) + std::abs(vel1)) &&
      std::abs(coast_gap) <= 1e-12 * scale) {
    // constant-velocity axis (includes zero-length axes): no acceleration
    // applied, switch placed mid-leg by convention
    return make_profile(pos0, vel0, pos1, vel1, 0.0, 0.5 * tt, 0.5 * tt, 1.0);
  }

  // First-arc acceleration alpha solves  tt² α² − 2(2D − tt·dv) α − dv² = 0
  // with D = d − v0·tt; the two roots carry opposite signs and correspond to
  // the two bang-bang sign patterns.
  const double big_d = coast_gap;
  const double b_half = 2.0 * big_d - tt * dv;
  const double disc = b_half * b_half + tt * tt * dv * dv;
  const double sq = std::sqrt(disc);
  const double tt_sq = tt * tt;

  std::optional<AxisProfile> best;
  for (const double accel : {(b_half + sq) / tt_sq, (b_half - sq) / tt_sq}) {
    auto cand = profile_from_accel(pos0, vel0, pos1, vel1, a_max, tt, accel);
    if (cand && (!best || cand->beta < best->beta)) best = cand;
  }
  if (best && endpoint_residual(*best) <= 1e-9 * scale) return *best;

  // Numeric fallback: bisect beta on the monotone map beta → minimum time.
  const double t_full = kernels::axis_min_time_scalar(d, vel0, vel1, a_max);
  if (!(t_full <= tt * (1.0 + 1e-9) + 1e-12))
    throw NoRootError("time target below the axis minimum time");
  double lo = 1e-12, hi = 1.0;
  if (kernels::axis_min_time_scalar(d, vel0, vel1, lo * a_max) < tt)
    throw NoRootError("no admissible acceleration reduction for this axis");
  for (int it = 0; it < 200 && (hi - lo) > 1e-10 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kernels::axis_min_time_scalar(d, vel0, vel1, mid * a_max) > tt)
      lo = mid;
    else
      hi = mid;
  }
  AxisProfile p = solve_axis_min_time(pos0, vel0, pos1, vel1, hi * a_max);
  p.beta = hi;
  return p;
}

Vec3 MassPointTrajectory::position_at(double t) const {
  return Vec3{axes[0].position_at(t), axes[1].position_at(t), axes[2].position_at(t)};
}

Vec3 MassPointTrajectory::velocity_at(double t) const {
  return Vec3{axes[0].velocity_at(t), axes[1].velocity_at(t), axes[2].velocity_at(t)};
}

Vec3 MassPointTrajectory::start_position() const {
  return Vec3{axes[0].start_pos, axes[1].start_pos, axes[2].start_pos};
}

Vec3 MassPointTrajectory::end_position() const {
  return Vec3{axes[0].end_pos, axes[1].end_pos, axes[2].end_pos};
}

Vec3 MassPointTrajectory::end_velocity() const {
  return Vec3{axes[0].end_vel, axes[1].end_vel, axes[2].end_vel};
}

MassPointTrajectory solve_3d_min_time(const Vec3& pos0, const Vec3& vel0,
                                      const Vec3& pos1, const Vec3& vel1,
                                      const Vec3& a_max) {
  std::array<AxisProfile, 3> mins;
  double total = 0.0;
  int slowest = 0;
  for (int i = 0; i < 3; ++i) {
    mins[i] = solve_axis_min_time(pos0(i), vel0(i), pos1(i), vel1(i), a_max(i));
    if (mins[i].total_time() > total) {
      total = mins[i].total_time();
      slowest = i;
    }
  }

  MassPointTrajectory traj;
  traj.total_time = total;
  for (int i = 0; i < 3; ++i) {
    if (i == slowest || mins[i].total_time() >= total)
      traj.axes[i] = mins[i];
    else
      traj.axes[i] = sync_axis_to_time(pos0(i), vel0(i), pos1(i), vel1(i), a_max(i), total);
  }
  return traj;
}

std::vector<TrajectorySample> sample_trajectory(const MassPointTrajectory& traj,
                                                double dt) {
  std::vector<TrajectorySample> samples;
  const double total = traj.total_time;
  const auto count = static_cast<std::size_t>(std::floor(total / dt));
  samples.reserve(count + 2);
  for (std::size_t k = 0; k <= count; ++k) {
    const double t = static_cast<double>(k) * dt;
    samples.push_back({t, traj.position_at(t), traj.velocity_at(t)});
  }
  if (samples.back().t < total - 1e-12)
    samples.push_back({total, traj.position_at(total), traj.velocity_at(total)});
  return samples;
}

}  // namespace pmpc::pointmass
