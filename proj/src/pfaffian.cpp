#include "chgoe/pfaffian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chgoe {

AntisymmetricMatrix::AntisymmetricMatrix(int dim, std::span<const double> upper) {
  if (dim < 0 || dim % 2 != 0)
    throw std::invalid_argument("AntisymmetricMatrix: dimension must be even and non-negative, got " +
                                std::to_string(dim));
  const std::size_t expected = static_cast<std::size_t>(dim) * (dim - 1) / 2;
  if (upper.size() != expected)
    throw std::invalid_argument("AntisymmetricMatrix: expected " + std::to_string(expected) +
                                " upper-triangle entries, got " + std::to_string(upper.size()));
  m_ = Eigen::MatrixXd::Zero(dim, dim);
  std::size_t idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      m_(i, j) = upper[idx];
      m_(j, i) = -upper[idx];
      ++idx;
    }
}

AntisymmetricMatrix AntisymmetricMatrix::from_upper(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("AntisymmetricMatrix: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n % 2 != 0)
    throw std::invalid_argument("AntisymmetricMatrix: dimension must be even, got " +
                                std::to_string(n));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a(i, j) = m(i, j);
      a(j, i) = -m(i, j);
    }
  return AntisymmetricMatrix(std::move(a));
}

double pfaffian(const AntisymmetricMatrix& a) {
  const int n = a.dim();
  if (n == 0) return 1.0;
  if (n == 2) return a(0, 1);
  if (n == 4)
    return a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);

  Eigen::MatrixXd m = a.dense();
  double pf = 1.0;
  for (int k = 0; k < n - 1; k += 2) {
    int kp = k + 1;
    double best = std::fabs(m(k + 1, k));
    for (int i = k + 2; i < n; ++i)
      if (std::fabs(m(i, k)) > best) {
        best = std::fabs(m(i, k));
        kp = i;
      }
    if (kp != k + 1) {
      m.row(k + 1).swap(m.row(kp));
      m.col(k + 1).swap(m.col(kp));
      pf = -pf;
    }
    if (m(k + 1, k) == 0.0) return 0.0;
    pf *= m(k, k + 1);
    const int rest = n - k - 2;
    if (rest > 0) {
      const Eigen::VectorXd tau = m.row(k).tail(rest).transpose() / m(k, k + 1);
      const Eigen::VectorXd v = m.col(k + 1).tail(rest);
      m.bottomRightCorner(rest, rest).noalias() += tau * v.transpose() - v * tau.transpose();
    }
  }
  return pf;
}

LogScaled pfaffian_balanced(int dim, const std::vector<LogScaled>& upper) {
  if (dim == 0) return LogScaled::one();
  const std::size_t expected = static_cast<std::size_t>(dim) * (dim - 1) / 2;
  if (dim < 0 || dim % 2 != 0 || upper.size() != expected)
    throw std::invalid_argument("pfaffian_balanced: bad dimension or entry count");

  // Least-squares fit log|a_ij| ~ s_i + s_j over the non-zero entries.
  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
  std::size_t idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j, ++idx) {
      if (upper[idx].is_zero()) continue;
      const double l = upper[idx].log_magnitude;
      normal(i, i) += 1.0;
      normal(j, j) += 1.0;
      normal(i, j) += 1.0;
      normal(j, i) += 1.0;
      rhs(i) += l;
      rhs(j) += l;
    }
  const Eigen::VectorXd s = normal.completeOrthogonalDecomposition().solve(rhs);

  std::vector<std::vector<LogScaled>> m(dim, std::vector<LogScaled>(dim));
  idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j, ++idx) {
      LogScaled v = upper[idx];
      if (!v.is_zero()) v.log_magnitude -= s(i) + s(j);
      m[i][j] = v;
      m[j][i] = -v;
    }

  // Parlett-Reid elimination carried out in LogScaled arithmetic.
  LogScaled pf = LogScaled::one();
  for (int k = 0; k < dim - 1; k += 2) {
    int kp = k + 1;
    for (int i = k + 2; i < dim; ++i)
      if (!m[i][k].is_zero() && (m[kp][k].is_zero() || m[i][k].log_magnitude > m[kp][k].log_magnitude)) kp = i;
    if (kp != k + 1) {
      std::swap(m[k + 1], m[kp]);
      for (auto& row : m) std::swap(row[k + 1], row[kp]);
      pf = -pf;
    }
    if (m[k][k + 1].is_zero()) return LogScaled::zero();
    pf *= m[k][k + 1];
    for (int i = k + 2; i < dim; ++i) {
      const LogScaled tau_i = m[k][i] / m[k][k + 1];
      const LogScaled& v_i = m[i][k + 1];
      for (int j = k + 2; j < dim; ++j) {
        const LogScaled tau_j = m[k][j] / m[k][k + 1];
        m[i][j] += tau_i * m[j][k + 1] - v_i * tau_j;
      }
    }
  }
  return pf * LogScaled::from_log(s.sum());
}

}  // namespace chgoe
