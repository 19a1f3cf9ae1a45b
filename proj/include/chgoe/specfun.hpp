#pragma once

#include <stdexcept>
#include <vector>

#include "chgoe/log_scaled.hpp"

namespace chgoe {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// ln Γ(x) for x > 0.
double ln_gamma(double x);

/// ln n! for integer n >= 0.
double ln_factorial(int n);

/// Monic Laguerre polynomial L_a^(mu)(y) = y^a + ..., from the three-term
/// recurrence L_{n+1} = (y - (2n+mu+1)) L_n - n(n+mu) L_{n-1}.
/// a = -1 gives exactly zero.
LogScaled laguerre_monic(int a, double mu, double y);

/// d^order/dy^order L_a^(mu)(y) = a!/(a-order)! L_{a-order}^(mu+order)(y).
LogScaled laguerre_monic_deriv(int a, double mu, int order, double y);

/// All of L_0^(mu)(y) ... L_{a_max}^(mu)(y) from a single recurrence sweep.
/// Entry n holds L_n; the vector has a_max + 1 entries.
std::vector<LogScaled> laguerre_monic_table(int a_max, double mu, double y);

/// Tricomi's confluent hypergeometric function
///   U(a,b,t) = 1/Γ(a) ∫_0^∞ s^{a-1} (1+s)^{b-a-1} e^{-ts} ds,   a > 0, t > 0.
LogScaled tricomi_u(double a, double b, double t);

/// Modified Bessel function I_n(x), n >= 0, x >= 0.
LogScaled bessel_i(int n, double x);

/// Bessel function J_n(x), x >= 0. Negative n uses J_{-n} = (-1)^n J_n.
double bessel_j(int n, double x);

/// K_{m+1/2}(x) for integer m >= -1 and x > 0.
LogScaled bessel_k_half(int m, double x);

}  // namespace chgoe
