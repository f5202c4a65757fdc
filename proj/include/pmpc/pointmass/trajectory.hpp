#pragma once

#include <array>
#include <vector>

#include "pmpc/core/types.hpp"

namespace pmpc::pointmass {

/// One axis of a two-arc constant-acceleration trajectory: accelerate at
/// `accel_first` for t1 seconds, then at -accel_first for t2 seconds.
struct AxisProfile {
  double start_pos{0.0};
  double start_vel{0.0};
  double end_pos{0.0};
  double end_vel{0.0};
  double accel_first{0.0};  ///< signed; second arc applies the opposite sign
  double switch_pos{0.0};
  double switch_vel{0.0};
  double t1{0.0};
  double t2{0.0};
  double beta{1.0};  ///< acceleration reduction factor in (0, 1]

  double total_time() const { return t1 + t2; }
  double position_at(double t) const;
  double velocity_at(double t) const;
};

/// Minimum-time profile between (pos0, vel0) and (pos1, vel1) under
/// |accel| = a_max. Always solvable; identical endpoints give total time 0.
AxisProfile solve_axis_min_time(double pos0, double vel0, double pos1, double vel1,
                                double a_max);

/// Stretch one axis to a prescribed total time by reducing the applied
/// acceleration to beta * a_max (beta in (0,1]). `time_target` must be at
/// least the unreduced minimum time for the axis; throws NoRootError when no
/// admissible beta exists.
AxisProfile sync_axis_to_time(double pos0, double vel0, double pos1, double vel1,
                              double a_max, double time_target);

/// Piecewise-constant-acceleration trajectory on three axes with equalized
/// per-axis travel times.
struct MassPointTrajectory {
  std::array<AxisProfile, 3> axes;
  double total_time{0.0};
  double start_time{0.0};  ///< offset used when legs are chained

  /// t is relative to start_time and clamped to [0, total_time].
  Vec3 position_at(double t) const;
  Vec3 velocity_at(double t) const;
  Vec3 start_position() const;
  Vec3 end_position() const;
  Vec3 end_velocity() const;
};

/// Time-equalized minimum-time trajectory between two (position, velocity)
/// endpoints: the slowest axis sets T, faster axes are stretched via
/// sync_axis_to_time.
MassPointTrajectory solve_3d_min_time(const Vec3& pos0, const Vec3& vel0,
                                      const Vec3& pos1, const Vec3& vel1,
                                      const Vec3& a_max);

struct TrajectorySample {
  double t{0.0};  ///< relative to the trajectory start
  Vec3 position;
  Vec3 velocity;
};

/// Samples at 0, dt, 2dt, ... plus a final sample clamped to total_time.
std::vector<TrajectorySample> sample_trajectory(const MassPointTrajectory& traj,
                                                double dt);

}  // namespace pmpc::pointmass
