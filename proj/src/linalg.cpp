#include "coxplane/linalg.h"

#include <cmath>

namespace coxplane {

int numerical_rank(const Matrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

Matrix null_space(const Matrix& m, double tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++r;
  return svd.matrixV().rightCols(n - r);
}

Matrix row_space(const Matrix& m, double tol) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return Matrix(n, 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++r;
  return svd.matrixV().leftCols(r);
}

double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

long long VectorRegistry::bucket(double x) const {
  // Cells are much wider than eps, so a match sits in the same or an
  // adjacent cell.
  const double cell = 1e3 * eps_;
  return static_cast<long long>(std::floor(x / cell));
}

int VectorRegistry::find(const Vector& v) const {
  const long long b = bucket(v(0));
  for (long long k = b - 1; k <= b + 1; ++k) {
    auto it = buckets_.find(k);
    if (it == buckets_.end()) continue;
    for (int idx : it->second)
      if (max_abs_diff(items_[static_cast<std::size_t>(idx)], v) <= eps_) return idx;
  }
  return -1;
}

int VectorRegistry::insert(const Vector& v) {
  if (int idx = find(v); idx >= 0) return idx;
  const int idx = static_cast<int>(items_.size());
  items_.push_back(v);
  buckets_[bucket(v(0))].push_back(idx);
  return idx;
}

}  // namespace coxplane
