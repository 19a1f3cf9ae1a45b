#include <doctest.h>

#include <cmath>

#include "chgoe/distributions.hpp"
#include "chgoe/microscopic.hpp"
#include "chgoe/specfun.hpp"
#include "oracle_values.hpp"

using namespace chgoe;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("hard-edge gap and density against references") {
  for (const auto& r : oracle::kMicro) {
    const int k = static_cast<int>(r.k);
    CAPTURE(k);
    CAPTURE(r.u);
    CHECK(rel(gap_micro(k, r.u), r.gap) < 1e-9);
    CHECK(rel(smallest_micro(k, r.u), r.smallest) < 1e-9);
  }
}

TEST_CASE("example value at u = 1") {
  CHECK(smallest_micro(0, 1.0) == doctest::Approx(0.375 * std::exp(-0.625)).epsilon(1e-15));
  CHECK(smallest_micro(0, 1.0) == doctest::Approx(0.20072303569462).epsilon(1e-12));
}

TEST_CASE("level density against references") {
  for (const auto& r : oracle::kMicroDensity) CHECK(rel(micro_density(static_cast<int>(r.nu), r.u), r.value) < 1e-9);
}

TEST_CASE("density is minus the derivative of the gap") {
  for (int k : {1, 2, 3})
    for (double u : {3.0, 12.0, 30.0}) {
      const double h = 1e-3 * u;
      auto e = [k](double x) { return gap_micro(k, x); };
      const double d = -(-e(u + 2 * h) + 8 * e(u + h) - 8 * e(u - h) + e(u - 2 * h)) / (12 * h);
      CHECK(rel(d, smallest_micro(k, u)) < 1e-6);
    }
}

TEST_CASE("finite p converges to the limit") {
  const double u = 5.0;
  const double lim = smallest_micro(2, u);
  double prev = 1.0;
  for (int p : {10, 40, 160}) {
    const double dev = std::fabs(smallest_finite({p, 2, u / (4.0 * p)}) / (4.0 * p) - lim);
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("edge values and limits") {
  CHECK(gap_micro(3, 0.0) == 1.0);
  CHECK(gap_micro(2, 1e9) == 0.0);
  CHECK(smallest_micro(2, 1e9) == 0.0);
  CHECK(xi_small_lim(0, 0, 0.0) == 1.0);
  CHECK(xi_small_lim(1, 0, 0.0) == 0.0);
  CHECK(xi_big_lim(2, 2, 1, 3.0) == 0.0);
  CHECK(xi_big_lim(0, 1, 1, 3.0) == doctest::Approx(-xi_big_lim(1, 0, 1, 3.0)));
  CHECK_THROWS_AS(smallest_micro(1, 0.0), DomainError);
  CHECK_THROWS_AS(gap_micro(-1, 1.0), DomainError);
  CHECK_THROWS_AS(micro_density(2, -1.0), DomainError);
}
