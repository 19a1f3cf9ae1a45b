#include <doctest.h>

#include <cmath>

#include "chgoe/kernels.hpp"
#include "chgoe/specfun.hpp"
#include "oracle_values.hpp"

using namespace chgoe;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
}  // namespace

TEST_CASE("Xi and xi against references") {
  for (const auto& r : oracle::kXiBig) {
    const KernelSpec s{static_cast<int>(r.gamma), static_cast<int>(r.l), r.t};
    CAPTURE(r.l);
    CHECK(rel(xi_big(static_cast<int>(r.a), static_cast<int>(r.b), s), r.value) < 1e-10);
  }
  for (const auto& r : oracle::kXiSmall) {
    const KernelSpec s{static_cast<int>(r.gamma), static_cast<int>(r.l), r.t};
    CHECK(rel(xi_small(static_cast<int>(r.a), s), r.value) < 1e-10);
  }
}

TEST_CASE("kernel sum against references") {
  for (const auto& r : oracle::kKernel)
    CHECK(rel(kernel_sop_sum(r.x, r.y, static_cast<int>(r.gamma), static_cast<int>(r.l), r.t), r.value) < 1e-10);
}

TEST_CASE("Christoffel-Darboux form equals the explicit sum") {
  for (int gamma : {0, 1})
    for (int l : {2, 4, 8, 14})
      for (double t : {0.3, 2.0}) {
        CAPTURE(l);
        const double a = 0.7, b = 2.9;
        CHECK(rel(kernel_cd(a, b, gamma, l, t), kernel_sop_sum(a, b, gamma, l, t)) < 1e-9);
      }
  CHECK_THROWS(kernel_cd(1.0, 1.0, 0, 4, 1.0));
}

TEST_CASE("Xi is antisymmetric and agrees between builder and free function") {
  const KernelSpec s{1, 9, 0.4};
  const KernelBuilder kb(s, 4);
  for (int a = 0; a < 4; ++a) {
    CHECK(kb.xi_big(a, a) == 0.0);
    for (int b = a + 1; b < 4; ++b) {
      CHECK(rel(kb.xi_big(a, b), -kb.xi_big(b, a)) < 1e-14);
      CHECK(rel(kb.xi_big(a, b), xi_big(a, b, s)) < 1e-14);
    }
  }
}

TEST_CASE("Xi equals derivatives of the kernel at the degenerate point") {
  // Ξ_01 = -t^{2γ+2} (∂_y K)(x,y) at x = y = -t.
  const int gamma = 0, l = 6;
  const double t = 0.8, h = 1e-4;
  auto k = [&](double y) { return kernel_sop_sum(-t, y, gamma, l, t); };
  const double dk = (k(-t + h) - k(-t - h)) / (2 * h);
  CHECK(rel(xi_big(0, 1, {gamma, l, t}), -std::pow(t, 2 * gamma + 2) * dk) < 1e-6);
}

TEST_CASE("large kernel sizes stay finite") {
  const KernelBuilder kb({0, 516, 4.0 / (4 * 512)}, 3);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) CHECK(std::isfinite(kb.xi_big_scaled(a, b).log_magnitude));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(xi_big(0, 1, {0, 1, 1.0}), DomainError);
  CHECK_THROWS_AS(xi_big(0, 1, {0, 4, 0.0}), DomainError);
  CHECK_THROWS_AS(xi_big(0, 1, {-1, 4, 1.0}), DomainError);
}
