#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace pmpc {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Full rigid-body state of one quadrotor. The attitude quaternion is stored
/// as (w, x, y, z) and is kept at unit norm by every constructor and
/// integration step.
struct QuadState {
  Vec3 position{Vec3::Zero()};      ///< [m]
  Vec3 velocity{Vec3::Zero()};      ///< [m/s]
  Vec4 attitude{1.0, 0.0, 0.0, 0.0};  ///< unit quaternion (w,x,y,z)

  bool finite() const {
    return position.allFinite() && velocity.allFinite() && attitude.allFinite();
  }
};

/// Collective thrust plus body rates, the input vector of the model.
struct ControlInput {
  double thrust{0.0};             ///< collective thrust [N]
  Vec3 body_rates{Vec3::Zero()};  ///< [rad/s]

  bool finite() const { return std::isfinite(thrust) && body_rates.allFinite(); }
};

/// Physical parameters and input box shared by the simulator and the OCP.
struct ModelParams {
  double mass{1.0};                      ///< [kg]
  Vec3 gravity{0.0, 0.0, -9.81};         ///< [m/s^2]
  double thrust_min{1.0};                ///< [N]
  double thrust_max{30.0};               ///< [N]
  Vec3 omega_max{3.0, 3.0, 3.0};         ///< symmetric body-rate bound [rad/s]
  Vec3 downwash{1.0, 1.0, 1.0 / 3.0};    ///< diagonal of E
  double collision_tolerance{0.2};       ///< delta_tol [m]

  double hover_thrust() const { return mass * gravity.norm(); }

  /// Throws ScenarioValidationError naming the violated invariant.
  void validate() const;
};

/// Squared downwash-weighted distance ||E (a - b)||^2.
inline double weighted_dist_sq(const Vec3& a, const Vec3& b, const Vec3& e_diag) {
  const double dx = e_diag.x() * (a.x() - b.x());
  const double dy = e_diag.y() * (a.y() - b.y());
  const double dz = e_diag.z() * (a.z() - b.z());
  return (dx * dx + dy * dy) + dz * dz;
}

}  // namespace pmpc
