#pragma once

#include "pmpc/core/types.hpp"

namespace pmpc {

/// Time derivative of a QuadState under a ControlInput.
struct StateDerivative {
  Vec3 dposition;
  Vec3 dvelocity;
  Vec4 dattitude;
};

/// Point-mass translation driven by rotated collective thrust plus quaternion
/// kinematics:
///   dξ = v,  dv = g + R(q)(0,0,ΣT)/m,  dq = ½ Λ(q)(0, ω).
/// Throws InvalidStateError on non-finite components or a quaternion further
/// than 1e-6 from unit norm.
StateDerivative dynamics_derivative(const QuadState& x, const ControlInput& u,
                                    const ModelParams& p);

/// Classical 4-stage Runge-Kutta step with zero-order-hold input. The
/// attitude quaternion is renormalized after the step.
QuadState rk4_step(const QuadState& x, const ControlInput& u, double dt,
                   const ModelParams& p);

// ---------------------------------------------------------------------------
// Flat-vector forms used by the OCP transcription. State layout:
// [ξ(3), v(3), q(4)]; input layout: [ΣT, ωx, ωy, ωz]. These skip the
// invariant checks of the typed API and tolerate non-unit quaternions (the
// polynomial rotation form is used as-is).
// ---------------------------------------------------------------------------

constexpr int kStateDim = 10;
constexpr int kInputDim = 4;

using StateVec = Eigen::Matrix<double, kStateDim, 1>;
using InputVec = Eigen::Matrix<double, kInputDim, 1>;
using StateMat = Eigen::Matrix<double, kStateDim, kStateDim>;
using StateInputMat = Eigen::Matrix<double, kStateDim, kInputDim>;

StateVec to_state_vec(const QuadState& x);
QuadState to_quad_state(const StateVec& x);
InputVec to_input_vec(const ControlInput& u);
ControlInput to_control_input(const InputVec& u);

StateVec dynamics_raw(const StateVec& x, const InputVec& u, const ModelParams& p);

/// Continuous-time Jacobians ∂f/∂x and ∂f/∂u of dynamics_raw.
void dynamics_jacobians(const StateVec& x, const InputVec& u, const ModelParams& p,
                        StateMat& fx, StateInputMat& fu);

/// RK4 discrete map on the flat state, quaternion renormalized at the end.
StateVec rk4_step_raw(const StateVec& x, const InputVec& u, double dt,
                      const ModelParams& p);

/// rk4_step_raw together with its exact Jacobians (chain rule through the
/// four stages and the final renormalization).
StateVec rk4_step_jacobians(const StateVec& x, const InputVec& u, double dt,
                            const ModelParams& p, StateMat& ax, StateInputMat& bu);

}  // namespace pmpc
