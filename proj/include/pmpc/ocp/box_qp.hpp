#pragma once

#include <Eigen/Dense>

namespace pmpc::ocp {

struct BoxQpOptions {
  int max_iterations{100};
  double gradient_tolerance{1e-10};
  int max_backtracks{40};
};

struct BoxQpResult {
  Eigen::VectorXd x;
  int iterations{0};
  bool converged{false};
};

/// Minimize 1/2 x'Hx + g'x subject to lb <= x <= ub for symmetric positive
/// definite H, by projected Newton on the free variables. Every iterate is
/// feasible by construction.
BoxQpResult solve_box_qp(const Eigen::MatrixXd& h, const Eigen::VectorXd& g,
                         const Eigen::VectorXd& lb, const Eigen::VectorXd& ub,
                         const Eigen::VectorXd& x0, const BoxQpOptions& opts = {});

}  // namespace pmpc::ocp
