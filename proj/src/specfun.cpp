#include "chgoe/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "chgoe/quadrature.hpp"

namespace chgoe {

namespace {

constexpr double kRescaleHi = 1e150;
constexpr double kRescaleLo = 1e-150;

// Keeps the pair (lm, l) inside double range, accumulating the removed scale.
inline void rescale(double& lm, double& l, double& log_scale) {
  const double m = std::fmax(std::fabs(lm), std::fabs(l));
  if (m > kRescaleHi || (m < kRescaleLo && m > 0.0)) {
    lm /= m;
    l /= m;
    log_scale += std::log(m);
  }
}

inline LogScaled scaled(double v, double log_scale) {
  if (v == 0.0) return {};
  return {std::log(std::fabs(v)) + log_scale, v > 0 ? 1 : -1};
}

inline double softplus(double x) {
  return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0))
    throw DomainError("ln_gamma: argument must be positive, got " +
                      std::to_string(x));
  return boost::math::lgamma(x);
}

double ln_factorial(int n) {
  if (n < 0) throw DomainError("ln_factorial: negative argument");
  static const std::vector<double> table = [] {
    std::vector<double> v(4096);
    v[0] = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
      v[i] = v[i - 1] + std::log(static_cast<double>(i));
    return v;
  }();
  if (static_cast<std::size_t>(n) < table.size()) return table[n];
  return boost::math::lgamma(n + 1.0);
}

LogScaled laguerre_monic(int a, double mu, double y) {
  if (a < -1) throw DomainError("laguerre_monic: order below -1");
  if (a == -1) return LogScaled::zero();
  if (a == 0) return LogScaled::one();
  double lm = 1.0, l = y - (mu + 1.0), log_scale = 0.0;
  for (int n = 1; n < a; ++n) {
    const double next = (y - (2.0 * n + mu + 1.0)) * l - n * (n + mu) * lm;
    lm = l;
    l = next;
    rescale(lm, l, log_scale);
  }
  return scaled(l, log_scale);
}

std::vector<LogScaled> laguerre_monic_table(int a_max, double mu, double y) {
  std::vector<LogScaled> out;
  if (a_max < 0) return out;
  out.reserve(a_max + 1);
  out.push_back(LogScaled::one());
  if (a_max == 0) return out;
  double lm = 1.0, l = y - (mu + 1.0), log_scale = 0.0;
  out.push_back(scaled(l, log_scale));
  for (int n = 1; n < a_max; ++n) {
    const double next = (y - (2.0 * n + mu + 1.0)) * l - n * (n + mu) * lm;
    lm = l;
    l = next;
    rescale(lm, l, log_scale);
    out.push_back(scaled(l, log_scale));
  }
  return out;
}

LogScaled laguerre_monic_deriv(int a, double mu, int order, double y) {
  if (order < 0) throw DomainError("laguerre_monic_deriv: negative order");
  if (order > a) return LogScaled::zero();
  LogScaled v = laguerre_monic(a - order, mu + order, y);
  if (order > 0) v *= LogScaled::from_log(ln_factorial(a) - ln_factorial(a - order));
  return v;
}

LogScaled tricomi_u(double a, double b, double t) {
  if (!(a > 0.0) || !(t > 0.0))
    throw DomainError("tricomi_u: requires a > 0 and t > 0 (a=" +
                      std::to_string(a) + ", t=" + std::to_string(t) + ")");
  if (b == a + 1.0) return LogScaled::from_log(-a * std::log(t));

  // With s = e^x the integrand is exp(g(x)),
  //   g(x) = a x + (b-a-1) log(1+e^x) - t e^x.
  // g' vanishes where t s^2 + (t-b+1) s - a = 0, which has exactly one
  // positive root, so g is unimodal.
  const double c = b - a - 1.0;
  const double B = t - b + 1.0;
  const double disc = std::sqrt(B * B + 4.0 * t * a);
  const double s0 = B > 0.0 ? 2.0 * a / (B + disc) : (disc - B) / (2.0 * t);
  const double x0 = std::log(s0);
  auto g = [&](double x) { return a * x + c * softplus(x) - t * std::exp(x); };
  const double g0 = g(x0);

  const double sig = 1.0 / (1.0 + std::exp(-x0));
  const double curv = t * s0 - c * sig * (1.0 - sig);
  const double width = curv > 0.0 ? 1.0 / std::sqrt(curv) : 1.0;

  constexpr double kCut = -46.0;
  double lo_step = width, hi_step = width;
  while (g(x0 - lo_step) - g0 > kCut) lo_step *= 2.0;
  while (g(x0 + hi_step) - g0 > kCut) hi_step *= 2.0;

  auto f = [&](double x) { return std::exp(g(x) - g0); };
  const double left = integrate_adaptive(f, x0 - lo_step, x0, 1e-13, nullptr, 12);
  const double right = integrate_adaptive(f, x0, x0 + hi_step, 1e-13, nullptr, 12);
  return LogScaled::from_log(g0 + std::log(left + right) - ln_gamma(a));
}

LogScaled bessel_i(int n, double x) {
  if (n < 0) n = -n;
  if (!(x >= 0.0)) throw DomainError("bessel_i: negative argument");
  if (x == 0.0) return n == 0 ? LogScaled::one() : LogScaled::zero();
  if (x < 600.0) return LogScaled::from_double(std::cyl_bessel_i(double(n), x));
  // Hankel expansion: I_n(x) ~ e^x / sqrt(2 pi x) sum_k (-1)^k a_k(n) / x^k.
  const double mu = 4.0 * n * n;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * x);
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return {x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum), 1};
}

double bessel_j(int n, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j: negative argument");
  if (n < 0) return (n % 2 == 0 ? 1.0 : -1.0) * bessel_j(-n, x);
  return std::cyl_bessel_j(double(n), x);
}

LogScaled bessel_k_half(int m, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k_half: argument must be positive");
  if (m < -1) throw DomainError("bessel_k_half: order below -1/2");
  // K_{m+1/2}(x) = sqrt(pi/2x) e^{-x} q_m with q_{-1} = q_0 = 1 and
  // q_{m+1} = q_{m-1} + ((2m+1)/x) q_m.
  double qm = 1.0, q = 1.0, log_scale = 0.0;
  for (int j = 0; j < m; ++j) {
    const double next = qm + (2.0 * j + 1.0) / x * q;
    qm = q;
    q = next;
    rescale(qm, q, log_scale);
  }
  return {0.5 * std::log(std::numbers::pi / (2.0 * x)) - x + std::log(q) + log_scale, 1};
}

}  // namespace chgoe
