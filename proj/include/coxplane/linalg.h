#pragma once

#include <Eigen/Dense>

#include <unordered_map>
#include <vector>

namespace coxplane {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Snap tolerance used to identify vectors (max-norm).
inline constexpr double kDefaultTolerance = 1e-9;

/// Singular values below this count as zero. Genuine nonzero singular values
/// of w - 1 are 2 sin(pi/k) for some element order k <= 30, far above it.
inline constexpr double kRankTolerance = 1e-6;

int numerical_rank(const Matrix& m, double tol = kRankTolerance);

/// Orthonormal basis (as columns) of { x : m x = 0 }.
Matrix null_space(const Matrix& m, double tol = kRankTolerance);

/// Orthonormal basis (as columns) of the span of the rows of m.
Matrix row_space(const Matrix& m, double tol = kRankTolerance);

double max_abs_diff(const Vector& a, const Vector& b);

/// Registry identifying vectors within eps in max-norm. Lookups bucket on the
/// first coordinate, so a hit costs a handful of comparisons.
class VectorRegistry {
 public:
  explicit VectorRegistry(double eps = kDefaultTolerance) : eps_(eps) {}

  /// Index of a registered vector within eps of v, or -1.
  int find(const Vector& v) const;

  /// Registers v unless an equal vector is present; returns its index.
  int insert(const Vector& v);

  std::size_t size() const { return items_.size(); }
  const Vector& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vector>& items() const { return items_; }
  double eps() const { return eps_; }

 private:
  long long bucket(double x) const;

  double eps_;
  std::vector<Vector> items_;
  std::unordered_map<long long, std::vector<int>> buckets_;
};

}  // namespace coxplane
