#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "chgoe/log_scaled.hpp"

namespace chgoe {

/// Dense real antisymmetric matrix of even dimension.
///
/// Built from the strictly upper triangle only, so antisymmetry and a zero
/// diagonal hold by construction. Immutable once built.
class AntisymmetricMatrix {
 public:
  AntisymmetricMatrix() = default;

  /// `upper` lists a_{01}, a_{02}, ..., a_{0,n-1}, a_{12}, ... row by row
  /// (n(n-1)/2 entries). Throws std::invalid_argument for odd `dim` or a
  /// wrong entry count.
  AntisymmetricMatrix(int dim, std::span<const double> upper);

  /// Takes the strictly upper triangle of `m`; the lower triangle is ignored.
  static AntisymmetricMatrix from_upper(const Eigen::MatrixXd& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& dense() const { return m_; }

 private:
  explicit AntisymmetricMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}
  Eigen::MatrixXd m_;
};

/// pf(A) with pf(A)^2 = det(A). Closed forms up to dimension 4, otherwise
/// Parlett-Reid tridiagonalization with partial pivoting. pf of the empty
/// matrix is 1.
double pfaffian(const AntisymmetricMatrix& a);

/// Pfaffian of an antisymmetric matrix whose entries may span many orders of
/// magnitude. `upper` is the strictly upper triangle in row order. The matrix
/// is balanced by a diagonal similarity D A D before the plain evaluation and
/// the scale restored in log domain.
LogScaled pfaffian_balanced(int dim, const std::vector<LogScaled>& upper);

}  // namespace chgoe
