#pragma once

#include <optional>
#include <vector>

#include "pmpc/core/types.hpp"
#include "pmpc/pointmass/trajectory.hpp"

namespace pmpc::search {

/// A waypoint as seen by the velocity search: a position (already evaluated
/// at the planning instant for moving gates) and an optional prescribed
/// arrival velocity. Prescribed velocities collapse that layer to one node.
struct TargetPoint {
  Vec3 position;
  std::optional<Vec3> fixed_velocity;
};

struct SearchConfig {
  int magnitude_count{20};          ///< speed samples 1..count * magnitude_step
  double magnitude_step{1.0};       ///< [m/s]
  std::vector<double> cone_angles_deg{10.0, 20.0};
  int cone_azimuths{8};
  int max_waypoints{0};             ///< 0 = plan over all remaining waypoints
};

/// Layered graph over velocity samples. Layer 0 is the single current-state
/// node; layer i>0 holds the candidate velocities at waypoint i. Edge weights
/// are minimum travel times between consecutive layers, stored row-major:
/// leg_times[l][i * |layer l+1| + j].
struct VelocityGraph {
  struct Layer {
    Vec3 position;
    std::vector<Vec3> velocities;
  };
  std::vector<Layer> layers;
  std::vector<std::vector<double>> leg_times;
};

struct GraphPath {
  std::vector<int> choice;  ///< chosen node per layer (choice[0] == 0)
  double total_time{0.0};
};

/// Unit vector from one waypoint toward the next. Throws DegenerateTrackError
/// for coincident points.
Vec3 heading_direction(const Vec3& from, const Vec3& to);

/// {1*dir, 2*dir, ..., count*dir} scaled by step.
std::vector<Vec3> magnitude_samples(const Vec3& unit_dir, int count = 20,
                                    double step = 1.0);

/// v_ref plus rings of equal-magnitude samples tilted off-axis. Zero input or
/// zero azimuth count returns {v_ref} alone.
std::vector<Vec3> cone_resample(const Vec3& v_ref,
                                const std::vector<double>& angles_deg, int azimuths);

/// Builds travel-time edges for every consecutive layer pair (batched kernel).
VelocityGraph build_graph(const Vec3& start_pos, const Vec3& start_vel,
                          const std::vector<TargetPoint>& waypoints,
                          const std::vector<std::vector<Vec3>>& samples,
                          const Vec3& a_max);

/// Shortest path through the layered graph (summed edge travel time).
GraphPath dijkstra_min_time(const VelocityGraph& graph);

/// Chained per-leg optimal trajectories with the searched waypoint velocities.
struct VelocityPlan {
  std::vector<Vec3> waypoint_velocities;             ///< v* per waypoint
  std::vector<pointmass::MassPointTrajectory> legs;  ///< leg i ends at waypoint i
  std::vector<double> arrival_times;                 ///< cumulative [s]
  double total_time{0.0};
  double stage1_total_time{0.0};  ///< travel time after the magnitude pass

  /// Position/velocity at time t from the plan start; clamped to the end.
  Vec3 position_at(double t) const;
  Vec3 velocity_at(double t) const;
};

/// Two-pass velocity search: magnitude sampling along waypoint headings, then
/// cone re-sampling around the first-pass optimum. Requires at least one
/// waypoint.
VelocityPlan plan_velocities(const Vec3& current_pos, const Vec3& current_vel,
                             const std::vector<TargetPoint>& waypoints,
                             const Vec3& a_max, const SearchConfig& config = {});

/// Single-node plan that stays at `pos` for `duration` seconds. Used as the
/// reference for a vehicle with no remaining waypoints.
VelocityPlan make_hold_plan(const Vec3& pos, double duration);

/// Earliest sample time k*dt at which the two plans come within delta_tol in
/// the downwash-weighted metric, scanning their common duration.
std::optional<double> first_collision_time(const VelocityPlan& plan_a,
                                           const VelocityPlan& plan_b,
                                           const Vec3& e_diag, double delta_tol,
                                           double dt);

}  // namespace pmpc::search
