#pragma once

#include <Eigen/Dense>

namespace slicesum {

// min_a ||A a - b||_2^2 + tau^2 ||diag(regularizer) a||_2^2
struct RidgeProblem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  double tau = 0.0;
  Eigen::VectorXd regularizer;  // diagonal of D, entries >= 1
};

struct RidgeSolution {
  Eigen::VectorXd x;
  int rank = 0;               // singular values kept above the spectral floor
  bool rank_deficient = false;  // tau == 0 and numerically rank-deficient
};

// Solved in standard form (z = D a, SVD of A D^{-1}) with the exact
// Tikhonov filter sigma / (sigma^2 + tau^2). A stacked-QR solve of
// [A; tau D] is mathematically identical but loses the solution once
// tau <~ 1e-8 * sigma_max (its condition number is floored by 1/tau).
// tau == 0 returns the minimum-norm least-squares solution.
RidgeSolution solve_ridge(const RidgeProblem& problem);

}  // namespace slicesum
