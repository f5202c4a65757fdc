#include "pmpc/ocp/costs.hpp"

#include <cmath>

namespace pmpc::ocp {

void OcpProblem::validate() const {
  if (horizon < 2) throw ScenarioValidationError("horizon >= 2");
  if (!(dt > 0.0)) throw ScenarioValidationError("dt > 0");
  params.validate();
  if (collision_step && (*collision_step < 0 || *collision_step > horizon))
    throw ScenarioValidationError("collision step within [0, horizon]");
}

std::pair<double, double> dynamic_weights(const Vec3& pos, const Vec3& vel,
                                          const Vec3& waypoint_pos,
                                          const Vec3& waypoint_vel,
                                          const WeightConfig& cfg) {
  const double pos_err = (pos - waypoint_pos).squaredNorm();
  const double vel_gate = cfg.velocity_weight_on_position
                              ? pos_err
                              : (vel - waypoint_vel).squaredNorm();
  return {sigmoid(cfg.sigma_pos * (pos_err - cfg.mu)),
          sigmoid(cfg.sigma_vel * (vel_gate - cfg.mu))};
}

CostEval waypoint_cost(const std::array<StateTraj, 2>& states, const OcpProblem& prob) {
  CostEval out;
  const WeightConfig& cfg = prob.weights;
  for (int q = 0; q < 2; ++q) {
    out.gradient[q].assign(states[q].size(), StateVec::Zero());
    for (std::size_t k = 0; k < states[q].size(); ++k) {
      const StateVec& x = states[q][k];
      const Vec3 dp = x.segment<3>(0) - prob.waypoint_positions[q];
      const Vec3 dv = x.segment<3>(3) - prob.waypoint_velocities[q];
      const double rp = dp.squaredNorm();
      const double rv = dv.squaredNorm();

      const double wp = sigmoid(cfg.sigma_pos * (rp - cfg.mu));
      const double gate = cfg.velocity_weight_on_position ? rp : rv;
      const double wv = sigmoid(cfg.sigma_vel * (gate - cfg.mu));
      out.value += wp * rp + wv * rv;

      const double wp_slope = cfg.sigma_pos * wp * (1.0 - wp);
      const double wv_slope = cfg.sigma_vel * wv * (1.0 - wv);
      StateVec& g = out.gradient[q][k];
      if (cfg.velocity_weight_on_position) {
        g.segment<3>(0) = 2.0 * (wp + wp_slope * rp + wv_slope * rv) * dp;
        g.segment<3>(3) = 2.0 * wv * dv;
      } else {
        g.segment<3>(0) = 2.0 * (wp + wp_slope * rp) * dp;
        g.segment<3>(3) = 2.0 * (wv + wv_slope * rv) * dv;
      }
    }
  }
  return out;
}

CostEval collision_cost(const std::array<StateTraj, 2>& states, const OcpProblem& prob) {
  CostEval out;
  for (int q = 0; q < 2; ++q)
    out.gradient[q].assign(states[q].size(), StateVec::Zero());
  if (!prob.collision_step) return out;

  const Vec3& e = prob.params.downwash;
  const double w = prob.weights.w_collision;
  const double sat_sq = prob.weights.d_sat * prob.weights.d_sat;
  const auto last = static_cast<std::size_t>(*prob.collision_step);

  for (std::size_t k = 0; k <= last && k < states[0].size(); ++k) {
    const Vec3 delta = states[0][k].segment<3>(0) - states[1][k].segment<3>(0);
    const Vec3 weighted{e.x() * e.x() * delta.x(), e.y() * e.y() * delta.y(),
                        e.z() * e.z() * delta.z()};
    const double dist_sq = weighted.dot(delta);
    if (dist_sq < sat_sq) {
      out.value -= w * dist_sq;
      const Vec3 g = -2.0 * w * weighted;
      out.gradient[0][k].segment<3>(0) += g;
      out.gradient[1][k].segment<3>(0) -= g;
    } else {
      out.value -= w * sat_sq;
    }
  }
  return out;
}

double total_objective(const std::array<StateTraj, 2>& states, const OcpProblem& prob) {
  double value = 0.0;
  const WeightConfig& cfg = prob.weights;
  for (int q = 0; q < 2; ++q) {
    for (const StateVec& x : states[q]) {
      const double rp = (x.segment<3>(0) - prob.waypoint_positions[q]).squaredNorm();
      const double rv = (x.segment<3>(3) - prob.waypoint_velocities[q]).squaredNorm();
      const double gate = cfg.velocity_weight_on_position ? rp : rv;
      value += sigmoid(cfg.sigma_pos * (rp - cfg.mu)) * rp +
               sigmoid(cfg.sigma_vel * (gate - cfg.mu)) * rv;
    }
  }
  if (prob.collision_step) {
    const Vec3& e = prob.params.downwash;
    const double sat_sq = cfg.d_sat * cfg.d_sat;
    const auto last = static_cast<std::size_t>(*prob.collision_step);
    for (std::size_t k = 0; k <= last && k < states[0].size(); ++k) {
      const double dist_sq = weighted_dist_sq(states[0][k].segment<3>(0),
                                              states[1][k].segment<3>(0), e);
      value -= cfg.w_collision * std::min(dist_sq, sat_sq);
    }
  }
  return value;
}

}  // namespace pmpc::ocp
