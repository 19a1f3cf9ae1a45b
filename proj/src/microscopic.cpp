#include "chgoe/microscopic.hpp"

#include <cmath>
#include <vector>

#include "chgoe/pfaffian.hpp"
#include "chgoe/quadrature.hpp"
#include "chgoe/specfun.hpp"

namespace chgoe {

namespace {

// K_{γ-1/2}(x) / K_{γ+1/2}(x)
double k_ratio(int gamma, double x) {
  if (gamma == 0) return 1.0;
  if (gamma == 1) return x / (x + 1.0);
  return (bessel_k_half(gamma - 1, x) / bessel_k_half(gamma, x)).to_double();
}

// Gauss-Legendre of increasing order until two successive values agree.
template <class F>
double integrate_gl_doubling(const F& f, double lo, double hi, int n0) {
  int n = n0;
  double prev = integrate_gl(f, lo, hi, n);
  for (int iter = 0; iter < 8; ++iter) {
    n *= 2;
    const double cur = integrate_gl(f, lo, hi, n);
    if (std::fabs(cur - prev) <= 1e-11 * std::fabs(cur) + 1e-300) return cur;
    prev = cur;
  }
  return prev;
}

// ln Π_{l<k} 4^{l+1} (2l)!/l!
double ln_micro_const(int k) {
  double s = 0.0;
  for (int l = 0; l < k; ++l)
    s += (l + 1) * std::log(4.0) + ln_factorial(2 * l) - ln_factorial(l);
  return s;
}

LogScaled micro_pfaffian(int k, int gamma, double u) {
  const int dim = k % 2 == 0 ? k : k + 1;
  std::vector<LogScaled> upper;
  upper.reserve(dim * (dim - 1) / 2);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      if (b < k)
        upper.push_back(LogScaled::from_double(xi_big_lim(a, b, gamma, u)));
      else
        upper.push_back(LogScaled::from_double(xi_small_lim(a, gamma, u)));
    }
  return pfaffian_balanced(dim, upper);
}

// The Pfaffian entries grow at most like e^{√u} times powers of u, so once
// this bound on the full product drops below the double range the result is 0.
bool underflows(double ln_pref, int k, double u) {
  return ln_pref + (k + 1) * std::sqrt(u) + (k + 1.0) * (k + 1.0) * std::log1p(u) < -800.0;
}

}  // namespace

double xi_small_lim(int a, int gamma, double u) {
  if (a < 0 || gamma < 0) throw DomainError("xi_small_lim: negative index");
  if (u == 0.0) return 2 * gamma + a == 0 ? 1.0 : 0.0;
  if (!(u > 0.0)) throw DomainError("xi_small_lim: u must be positive");
  const double su = std::sqrt(u);
  const int n = 2 * gamma + a;
  const LogScaled v = bessel_i(n, su) + k_ratio(gamma, su / 2) * bessel_i(n + 1, su);
  return (v * LogScaled::from_log(0.5 * n * std::log(u / 4))).to_double();
}

double xi_big_lim(int a, int b, int gamma, double u) {
  if (a < 0 || b < 0 || gamma < 0) throw DomainError("xi_big_lim: negative index");
  if (!(u > 0.0)) throw DomainError("xi_big_lim: u must be positive");
  if (a == b) return 0.0;
  const int g2 = 2 * gamma;
  auto integrand = [&](double x) {
    if (x <= 0.0) return 0.0;
    const double kr = k_ratio(gamma, x);
    const double Aa = bessel_i(g2 + a, 2 * x).to_double();
    const double Ab = bessel_i(g2 + b, 2 * x).to_double();
    const double Aa1 = bessel_i(g2 + a + 1, 2 * x).to_double();
    const double Ab1 = bessel_i(g2 + b + 1, 2 * x).to_double();
    const double v = 2.0 * (b - a) * Aa * Ab +
                     (x * (1.0 - kr * kr) - kr * (g2 + 1.0)) * (Aa * Ab1 - Aa1 * Ab) +
                     kr * (2.0 * b * Aa1 * Ab - 2.0 * a * Aa * Ab1);
    return std::pow(x, a + b + 1) * v;
  };
  const int n0 = static_cast<int>(std::ceil(20.0 + 3.0 * std::sqrt(u)));
  return 0.25 * integrate_gl_doubling(integrand, 0.0, std::sqrt(u) / 2, n0);
}

double gap_micro(int k, double u) {
  if (k < 0) throw DomainError("gap_micro: k must be non-negative");
  if (u == 0.0) return 1.0;
  if (!(u > 0.0)) throw DomainError("gap_micro: u must be non-negative");
  double ln_pref = ln_micro_const(k) - 0.5 * k * k * std::log(u) - u / 8 - std::sqrt(u / 4);
  if (k % 2 != 0) ln_pref += std::log(std::sqrt(u) / 4);
  if (std::isinf(u) || underflows(ln_pref, k, u)) return 0.0;
  return (LogScaled::from_log(ln_pref) * micro_pfaffian(k, 0, u)).to_double();
}

double smallest_micro(int k, double u) {
  if (k < 0) throw DomainError("smallest_micro: k must be non-negative");
  if (!(u > 0.0)) throw DomainError("smallest_micro: u must be positive");
  double ln_pref = ln_micro_const(k) - std::log(8.0) + std::log(std::sqrt(u) + 2.0) -
                   0.5 * (k * k + 1.0) * std::log(u) - u / 8 - std::sqrt(u / 4);
  if (k % 2 != 0) ln_pref -= 0.5 * std::log(u);
  if (std::isinf(u) || underflows(ln_pref, k, u)) return 0.0;
  return (LogScaled::from_log(ln_pref) * micro_pfaffian(k, 1, u)).to_double();
}

double micro_density(int nu, double u) {
  if (nu < 0) throw DomainError("micro_density: nu must be non-negative");
  if (!(u > 0.0)) throw DomainError("micro_density: u must be positive");
  const double s = std::sqrt(u);
  const double jn = bessel_j(nu, s);
  const double first = 0.25 * (jn * jn - bessel_j(nu - 1, s) * bessel_j(nu + 1, s));
  const int n0 = static_cast<int>(std::ceil(20.0 + 3.0 * s));
  const double integral =
      integrate_gl_doubling([nu](double x) { return bessel_j(nu, x); }, 0.0, s, n0);
  return first + jn * (1.0 - integral) / (4.0 * s);
}

}  // namespace chgoe
