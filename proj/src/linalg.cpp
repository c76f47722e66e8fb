#include "slicealg/linalg.hpp"

#include <algorithm>

namespace slicealg::linalg {

namespace {

template <typename M>
M null_space_impl(const M& m, double rel_tol) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0 || cols == 0) return M::Identity(cols, cols);
  Eigen::JacobiSVD<M> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  if (top > 0.0) {
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > rel_tol * top) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

template <typename M>
int rank_impl(const M& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<M> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

}  // namespace

Matrix null_space(const Matrix& m, double rel_tol) { return null_space_impl(m, rel_tol); }

ComplexMatrix null_space(const ComplexMatrix& m, double rel_tol) {
  return null_space_impl(m, rel_tol);
}

int numerical_rank(const Matrix& m, double rel_tol) { return rank_impl(m, rel_tol); }

int numerical_rank(const ComplexMatrix& m, double rel_tol) { return rank_impl(m, rel_tol); }

double inverse_condition(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

Eigen::VectorXd lstsq(const Matrix& m, const Eigen::VectorXd& rhs, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel_tol);
  return svd.solve(rhs);
}

}  // namespace slicealg::linalg
