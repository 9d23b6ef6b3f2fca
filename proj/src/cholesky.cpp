#include "wegnerlab/cholesky.hpp"

#include <cmath>
#include <stdexcept>

namespace wegner {

CholeskyOutcome cholesky_with_pivots(const Eigen::MatrixXd& a, double scale) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("cholesky_with_pivots: matrix must be square");
  if (!(scale > 0.0)) throw std::invalid_argument("cholesky_with_pivots: scale must be positive");

  const double indefinite_tol = -1e-10 * scale;
  const double degenerate_tol = 1e-12 * scale;

  CholeskyOutcome out;
  out.factor = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double piv = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) piv -= out.factor(j, k) * out.factor(j, k);
    if (piv < indefinite_tol) {
      out.status = CholeskyOutcome::Status::indefinite;
      out.pivot_index = static_cast<int>(j);
      out.pivot_value = piv;
      return out;
    }
    if (piv <= degenerate_tol) {
      out.status = CholeskyOutcome::Status::degenerate;
      out.pivot_index = static_cast<int>(j);
      out.pivot_value = piv;
      return out;
    }
    const double ljj = std::sqrt(piv);
    out.factor(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= out.factor(i, k) * out.factor(j, k);
      out.factor(i, j) = s / ljj;
    }
  }
  return out;
}

}  // namespace wegner
