#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pmpc/core/dynamics.hpp"
#include "pmpc/core/types.hpp"

namespace pmpc::ocp {

/// Sigmoid weight scheduling and collision-term configuration.
struct WeightConfig {
  double mu{0.6};             ///< sigmoid midpoint (squared-error units)
  double sigma_pos{10.0};     ///< direction coefficient of the position weight
  double sigma_vel{-100.0};   ///< direction coefficient of the velocity weight
  double w_collision{0.1};    ///< scale of the separation reward
  double d_sat{0.6};          ///< separation reward saturates at this distance [m]
  bool velocity_weight_on_position{false};  ///< gate W^v on distance to the
                                            ///< waypoint instead of velocity error
};

/// Joint two-vehicle discrete OCP over a fixed horizon: approach each
/// vehicle's next waypoint with the searched reference velocity, subject to
/// the input box, rewarded for mutual separation up to the first predicted
/// reference collision.
struct OcpProblem {
  int horizon{20};   ///< N (steps); states run 0..N, inputs 0..N-1
  double dt{0.03};   ///< [s]
  ModelParams params;
  WeightConfig weights;
  std::array<QuadState, 2> initial_states;
  std::array<Vec3, 2> waypoint_positions;
  std::array<Vec3, 2> waypoint_velocities;
  std::optional<int> collision_step;  ///< t_c as a step index in [0, N]

  void validate() const;
  InputVec input_lower() const {
    return InputVec{params.thrust_min, -params.omega_max.x(), -params.omega_max.y(),
                    -params.omega_max.z()};
  }
  InputVec input_upper() const {
    return InputVec{params.thrust_max, params.omega_max.x(), params.omega_max.y(),
                    params.omega_max.z()};
  }
};

using StateTraj = std::vector<StateVec>;  ///< length N+1
using InputTraj = std::vector<InputVec>;  ///< length N

struct OcpSolution {
  std::array<StateTraj, 2> states;
  std::array<InputTraj, 2> inputs;
  double objective{0.0};
  int iterations{0};
  double solve_time{0.0};  ///< wall seconds
  bool converged{false};
  double dynamics_residual{0.0};  ///< max multiple-shooting gap at exit
  double kkt_residual{0.0};
};

/// Initial guess for the solver (shooting states + inputs).
struct OcpGuess {
  std::array<StateTraj, 2> states;
  std::array<InputTraj, 2> inputs;
};

}  // namespace pmpc::ocp
