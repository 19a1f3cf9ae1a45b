#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "chgoe/pfaffian.hpp"

using namespace chgoe;

namespace {

std::vector<double> random_upper(int dim, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> uni(-1, 1);
  std::vector<double> u(dim * (dim - 1) / 2);
  for (auto& x : u) x = uni(gen);
  return u;
}

int permutation_sign(std::vector<int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    while (perm[i] != static_cast<int>(i)) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

TEST_CASE("small closed forms") {
  CHECK(pfaffian(AntisymmetricMatrix(0, std::vector<double>{})) == 1.0);
  CHECK(pfaffian(AntisymmetricMatrix(2, std::vector<double>{3.5})) == 3.5);
  // pf = a01 a23 - a02 a13 + a03 a12
  const std::vector<double> u{1, 2, 3, 4, 5, 6};
  CHECK(pfaffian(AntisymmetricMatrix(4, u)) == doctest::Approx(1 * 6 - 2 * 5 + 3 * 4));
}

TEST_CASE("pf^2 = det for random matrices") {
  std::mt19937_64 gen(11);
  for (int dim = 2; dim <= 16; dim += 2) {
    const AntisymmetricMatrix a(dim, random_upper(dim, gen));
    const double pf = pfaffian(a);
    const double det = a.dense().determinant();
    CHECK(std::fabs(pf * pf - det) <= 1e-11 * std::fabs(det));
  }
}

TEST_CASE("permutation covariance pf(P A P^T) = sign(P) pf(A)") {
  std::mt19937_64 gen(5);
  for (int dim : {4, 6, 8}) {
    const AntisymmetricMatrix a(dim, random_upper(dim, gen));
    std::vector<int> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) pm(i, perm[i]) = 1.0;
    const auto b = AntisymmetricMatrix::from_upper(pm * a.dense() * pm.transpose());
    CHECK(pfaffian(b) == doctest::Approx(permutation_sign(perm) * pfaffian(a)).epsilon(1e-12));
  }
}

TEST_CASE("pf(B A B^T) = det(B) pf(A)") {
  std::mt19937_64 gen(9);
  std::normal_distribution<double> nd;
  const int dim = 6;
  const AntisymmetricMatrix a(dim, random_upper(dim, gen));
  Eigen::MatrixXd bm(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) bm(i, j) = nd(gen);
  const auto c = AntisymmetricMatrix::from_upper(bm * a.dense() * bm.transpose());
  CHECK(pfaffian(c) == doctest::Approx(bm.determinant() * pfaffian(a)).epsilon(1e-11));
}

TEST_CASE("balanced Pfaffian handles entries far outside double range") {
  std::mt19937_64 gen(3);
  const int dim = 8;
  const auto u = random_upper(dim, gen);
  const double ref = pfaffian(AntisymmetricMatrix(dim, u));
  // Scaling row/column i by e^{s_i} multiplies pf by e^{sum s_i}.
  const std::vector<double> s{400, -300, 900, 10, -700, 250, 600, -100};
  std::vector<LogScaled> scaled;
  int idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) scaled.push_back(LogScaled::from_double(u[idx++]) * LogScaled::from_log(s[i] + s[j]));
  const LogScaled pf = pfaffian_balanced(dim, scaled);
  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  CHECK(pf.sign == (ref > 0 ? 1 : -1));
  CHECK(pf.log_magnitude - total == doctest::Approx(std::log(std::fabs(ref))).epsilon(1e-12));
}

TEST_CASE("zero and singular matrices") {
  CHECK(pfaffian(AntisymmetricMatrix(4, std::vector<double>(6, 0.0))) == 0.0);
  CHECK(pfaffian(AntisymmetricMatrix(6, std::vector<double>(15, 0.0))) == 0.0);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(AntisymmetricMatrix(3, std::vector<double>(3, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(AntisymmetricMatrix(4, std::vector<double>(5, 1.0)), std::invalid_argument);
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(4, 4);
  CHECK_THROWS_AS(AntisymmetricMatrix::from_upper(Eigen::MatrixXd::Ones(3, 4)), std::invalid_argument);
  CHECK_NOTHROW(AntisymmetricMatrix::from_upper(m));
}
