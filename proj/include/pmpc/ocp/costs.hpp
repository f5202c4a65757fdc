#pragma once

#include <utility>

#include "pmpc/ocp/problem.hpp"

namespace pmpc::ocp {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

/// Sigmoid-scheduled stage weights (W^pos, W^vel). The position weight grows
/// with squared distance to the waypoint; the velocity weight grows as its
/// gating error shrinks (sigma_vel < 0), locking the reference velocity in
/// on final approach.
std::pair<double, double> dynamic_weights(const Vec3& pos, const Vec3& vel,
                                          const Vec3& waypoint_pos,
                                          const Vec3& waypoint_vel,
                                          const WeightConfig& cfg);

/// Value and state gradient of one cost term over both vehicles' state
/// sequences (length horizon+1 each).
struct CostEval {
  double value{0.0};
  std::array<StateTraj, 2> gradient;
};

/// Weighted waypoint-approach cost summed over the horizon and both
/// vehicles. The gradient is exact, including the sigmoid chain terms.
CostEval waypoint_cost(const std::array<StateTraj, 2>& states, const OcpProblem& prob);

/// Separation reward over the pre-collision window [0, t_c], entering the
/// minimized objective with a negative sign and saturating at d_sat per
/// step. Zero when the problem carries no collision step.
CostEval collision_cost(const std::array<StateTraj, 2>& states, const OcpProblem& prob);

/// waypoint_cost + collision_cost (the minimized objective).
double total_objective(const std::array<StateTraj, 2>& states, const OcpProblem& prob);

}  // namespace pmpc::ocp
