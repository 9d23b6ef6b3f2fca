#pragma once

#include <Eigen/Dense>

namespace wegner {

/* Lower Cholesky factorization that reports the sign pattern of the Schur
 * pivots instead of failing opaquely.  `scale` sets the classification
 * thresholds: a pivot below -1e-10*scale means the matrix is indefinite,
 * anything in [-1e-10*scale, 1e-12*scale] counts as numerically
 * semidefinite ("degenerate"). */
struct CholeskyOutcome {
  enum class Status { positive_definite, degenerate, indefinite };
  Status status = Status::positive_definite;
  int pivot_index = -1;     // first offending pivot, -1 if none
  double pivot_value = 0.0;
  Eigen::MatrixXd factor;   // complete only when positive_definite
};

CholeskyOutcome cholesky_with_pivots(const Eigen::MatrixXd& a, double scale);

}  // namespace wegner
