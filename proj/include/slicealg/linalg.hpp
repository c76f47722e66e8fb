#pragma once

#include <Eigen/Dense>

namespace slicealg {

using Element = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Relative singular-value cutoff used for every kernel/rank decision.
inline constexpr double kRankTolerance = 1e-8;

namespace linalg {

/// Orthonormal basis (columns) of ker(m). A singular value counts as zero
/// when it is below rel_tol times the largest one; the zero matrix has a
/// full kernel.
Matrix null_space(const Matrix& m, double rel_tol = kRankTolerance);
ComplexMatrix null_space(const ComplexMatrix& m, double rel_tol = kRankTolerance);

int numerical_rank(const Matrix& m, double rel_tol = kRankTolerance);
int numerical_rank(const ComplexMatrix& m, double rel_tol = kRankTolerance);

/// sigma_min / sigma_max, or 0 for the zero matrix.
double inverse_condition(const Matrix& m);

/// Minimum-norm least-squares solution of m x = rhs.
Eigen::VectorXd lstsq(const Matrix& m, const Eigen::VectorXd& rhs,
                      double rel_tol = kRankTolerance);

}  // namespace linalg
}  // namespace slicealg
