#include "pmpc/core/dynamics.hpp"

#include <cmath>

#include "pmpc/core/errors.hpp"
#include "pmpc/core/quaternion.hpp"

namespace pmpc {

namespace {

constexpr double kUnitNormTol = 1e-6;

void check_state(const QuadState& x) {
  if (!x.finite()) throw InvalidStateError("quad state has non-finite components");
  if (std::abs(x.attitude.norm() - 1.0) > kUnitNormTol)
    throw InvalidStateError("attitude quaternion is not unit norm");
}

void check_input(const ControlInput& u) {
  if (!u.finite()) throw InvalidStateError("control input has non-finite components");
}

}  // namespace

void ModelParams::validate() const {
  if (!(mass > 0.0)) throw ScenarioValidationError("mass > 0");
  if (!gravity.allFinite()) throw ScenarioValidationError("gravity finite");
  if (!(thrust_min >= 0.0)) throw ScenarioValidationError("thrust_min >= 0");
  if (!(thrust_max > thrust_min)) throw ScenarioValidationError("thrust_max > thrust_min");
  if (!(omega_max.minCoeff() > 0.0)) throw ScenarioValidationError("omega_max > 0");
  if (!(downwash.minCoeff() > 0.0)) throw ScenarioValidationError("downwash diagonal > 0");
  if (!(collision_tolerance > 0.0)) throw ScenarioValidationError("collision_tolerance > 0");
}

StateDerivative dynamics_derivative(const QuadState& x, const ControlInput& u,
                                    const ModelParams& p) {
  check_state(x);
  check_input(u);
  StateDerivative d;
  d.dposition = x.velocity;
  d.dvelocity = p.gravity + quat::rotate_body_z(x.attitude) * (u.thrust / p.mass);
  d.dattitude = quat::derivative(x.attitude, u.body_rates);
  return d;
}

QuadState rk4_step(const QuadState& x, const ControlInput& u, double dt,
                   const ModelParams& p) {
  check_state(x);
  check_input(u);
  const StateVec next = rk4_step_raw(to_state_vec(x), to_input_vec(u), dt, p);
  return to_quad_state(next);
}

StateVec to_state_vec(const QuadState& x) {
  StateVec v;
  v.segment<3>(0) = x.position;
  v.segment<3>(3) = x.velocity;
  v.segment<4>(6) = x.attitude;
  return v;
}

QuadState to_quad_state(const StateVec& x) {
  QuadState s;
  s.position = x.segment<3>(0);
  s.velocity = x.segment<3>(3);
  s.attitude = x.segment<4>(6);
  return s;
}

InputVec to_input_vec(const ControlInput& u) {
  return InputVec{u.thrust, u.body_rates.x(), u.body_rates.y(), u.body_rates.z()};
}

ControlInput to_control_input(const InputVec& u) {
  return ControlInput{u(0), Vec3{u(1), u(2), u(3)}};
}

StateVec dynamics_raw(const StateVec& x, const InputVec& u, const ModelParams& p) {
  const double w = x(6), qx = x(7), qy = x(8), qz = x(9);
  const double wx = u(1), wy = u(2), wz = u(3);
  const double a = u(0) / p.mass;

  StateVec dx;
  dx.segment<3>(0) = x.segment<3>(3);
  dx(3) = p.gravity(0) + a * (2.0 * (qx * qz + w * qy));
  dx(4) = p.gravity(1) + a * (2.0 * (qy * qz - w * qx));
  dx(5) = p.gravity(2) + a * (1.0 - 2.0 * (qx * qx + qy * qy));
  dx(6) = 0.5 * (-qx * wx - qy * wy - qz * wz);
  dx(7) = 0.5 * (w * wx + qy * wz - qz * wy);
  dx(8) = 0.5 * (w * wy + qz * wx - qx * wz);
  dx(9) = 0.5 * (w * wz + qx * wy - qy * wx);
  return dx;
}

void dynamics_jacobians(const StateVec& x, const InputVec& u, const ModelParams& p,
                        StateMat& fx, StateInputMat& fu) {
  const double w = x(6), qx = x(7), qy = x(8), qz = x(9);
  const double wx = u(1), wy = u(2), wz = u(3);
  const double a = u(0) / p.mass;

  fx.setZero();
  fu.setZero();

  fx.block<3, 3>(0, 3).setIdentity();

  // ∂(a · R(q) e_z)/∂q
  fx(3, 6) = a * 2.0 * qy;
  fx(3, 7) = a * 2.0 * qz;
  fx(3, 8) = a * 2.0 * w;
  fx(3, 9) = a * 2.0 * qx;
  fx(4, 6) = -a * 2.0 * qx;
  fx(4, 7) = -a * 2.0 * w;
  fx(4, 8) = a * 2.0 * qz;
  fx(4, 9) = a * 2.0 * qy;
  fx(5, 7) = -a * 4.0 * qx;
  fx(5, 8) = -a * 4.0 * qy;

  // ∂(½ q ⊗ (0,ω))/∂q
  fx(6, 7) = -0.5 * wx;
  fx(6, 8) = -0.5 * wy;
  fx(6, 9) = -0.5 * wz;
  fx(7, 6) = 0.5 * wx;
  fx(7, 8) = 0.5 * wz;
  fx(7, 9) = -0.5 * wy;
  fx(8, 6) = 0.5 * wy;
  fx(8, 7) = -0.5 * wz;
  fx(8, 9) = 0.5 * wx;
  fx(9, 6) = 0.5 * wz;
  fx(9, 7) = 0.5 * wy;
  fx(9, 8) = -0.5 * wx;

  const double inv_m = 1.0 / p.mass;
  fu(3, 0) = inv_m * 2.0 * (qx * qz + w * qy);
  fu(4, 0) = inv_m * 2.0 * (qy * qz - w * qx);
  fu(5, 0) = inv_m * (1.0 - 2.0 * (qx * qx + qy * qy));

  // ∂(½ q ⊗ (0,ω))/∂ω = ½ Λ(q) restricted to the vector part
  fu(6, 1) = -0.5 * qx;
  fu(6, 2) = -0.5 * qy;
  fu(6, 3) = -0.5 * qz;
  fu(7, 1) = 0.5 * w;
  fu(7, 2) = -0.5 * qz;
  fu(7, 3) = 0.5 * qy;
  fu(8, 1) = 0.5 * qz;
  fu(8, 2) = 0.5 * w;
  fu(8, 3) = -0.5 * qx;
  fu(9, 1) = -0.5 * qy;
  fu(9, 2) = 0.5 * qx;
  fu(9, 3) = 0.5 * w;
}

namespace {

StateVec renormalize_quat(const StateVec& x) {
  StateVec out = x;
  const double n = x.segment<4>(6).norm();
  out.segment<4>(6) /= n;
  return out;
}

}  // namespace

StateVec rk4_step_raw(const StateVec& x, const InputVec& u, double dt,
                      const ModelParams& p) {
  const StateVec k1 = dynamics_raw(x, u, p);
  const StateVec k2 = dynamics_raw(x + 0.5 * dt * k1, u, p);
  const StateVec k3 = dynamics_raw(x + 0.5 * dt * k2, u, p);
  const StateVec k4 = dynamics_raw(x + dt * k3, u, p);
  return renormalize_quat(x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

StateVec rk4_step_jacobians(const StateVec& x, const InputVec& u, double dt,
                            const ModelParams& p, StateMat& ax, StateInputMat& bu) {
  StateMat f1x, f2x, f3x, f4x;
  StateInputMat f1u, f2u, f3u, f4u;

  const StateVec k1 = dynamics_raw(x, u, p);
  dynamics_jacobians(x, u, p, f1x, f1u);
  const StateVec x2 = x + 0.5 * dt * k1;
  const StateVec k2 = dynamics_raw(x2, u, p);
  dynamics_jacobians(x2, u, p, f2x, f2u);
  const StateVec x3 = x + 0.5 * dt * k2;
  const StateVec k3 = dynamics_raw(x3, u, p);
  dynamics_jacobians(x3, u, p, f3x, f3u);
  const StateVec x4 = x + dt * k3;
  const StateVec k4 = dynamics_raw(x4, u, p);
  dynamics_jacobians(x4, u, p, f4x, f4u);

  const StateMat id = StateMat::Identity();
  const StateMat k1x = f1x;
  const StateInputMat k1u = f1u;
  const StateMat k2x = f2x * (id + 0.5 * dt * k1x);
  const StateInputMat k2u = f2u + f2x * (0.5 * dt * k1u);
  const StateMat k3x = f3x * (id + 0.5 * dt * k2x);
  const StateInputMat k3u = f3u + f3x * (0.5 * dt * k2u);
  const StateMat k4x = f4x * (id + dt * k3x);
  const StateInputMat k4u = f4u + f4x * (dt * k3u);

  const StateVec raw = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  StateMat raw_x = id + (dt / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
  StateInputMat raw_u = (dt / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);

  // Renormalization q ← q/|q| contributes (I - n nᵀ)/|q| on the quaternion block.
  const Vec4 qraw = raw.segment<4>(6);
  const double n = qraw.norm();
  const Vec4 qn = qraw / n;
  const Mat4 jn = (Mat4::Identity() - qn * qn.transpose()) / n;

  raw_x.block<4, 10>(6, 0) = jn * raw_x.block<4, 10>(6, 0);
  raw_u.block<4, 4>(6, 0) = jn * raw_u.block<4, 4>(6, 0);

  ax = raw_x;
  bu = raw_u;

  StateVec out = raw;
  out.segment<4>(6) = qn;
  return out;
}

}  // namespace pmpc
