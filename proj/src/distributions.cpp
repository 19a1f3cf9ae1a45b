#include "chgoe/distributions.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>

#include "chgoe/kernels.hpp"
#include "chgoe/microscopic.hpp"
#include "chgoe/pfaffian.hpp"
#include "chgoe/sop.hpp"
#include "chgoe/specfun.hpp"

namespace chgoe {

namespace {

const double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);

double ln_prod_l(int p, int k) {
  double s = 0.0;
  const double lp = std::log(static_cast<double>(p));
  for (int l = 0; l < k; ++l)
    s += (l + 1) * 2.0 * kLn2 + ln_factorial(2 * l) + ln_gamma(p + l + 2.0) + (l - 1) * lp -
         ln_factorial(l) - ln_gamma(p + 2.0 * l + 1.0);
  return s;
}

// Normalization constants of the gap probability (which = 0) and of the
// smallest-eigenvalue density (which = 1).
double ln_constant(int which, int p, int k) {
  const double lp = std::log(static_cast<double>(p));
  double s = ln_prod_l(p, k) - 0.5 * kLnPi + ln_factorial(p) + ln_gamma((p + 1) / 2.0) -
             ln_factorial(p + k);
  const bool even = k % 2 == 0;
  if (which == 0) {
    if (even)
      s += -0.5 * k * kLn2 + 1.5 * k * lp - ln_gamma((p + k + 1) / 2.0);
    else
      s += -0.5 * (k + 3) * kLn2 + 0.5 * (3 * k - 1) * lp - ln_gamma((p + k) / 2.0);
  } else {
    if (even)
      s += -0.5 * (k + 5) * kLn2 + 0.5 * (3 * k - 1) * lp - ln_gamma((p + k) / 2.0);
    else
      s += -0.5 * (k + 6) * kLn2 + 1.5 * k * lp - ln_gamma((p + k + 1) / 2.0);
  }
  return s;
}

// pf of [Ξ_ab] (k even) or of Ξ bordered by ξ (k odd), k >= 1.
LogScaled kernel_pfaffian(int k, int gamma, int l, double t) {
  const KernelBuilder kb({gamma, l, t}, k - 1);
  const int dim = k % 2 == 0 ? k : k + 1;
  std::vector<LogScaled> upper;
  upper.reserve(dim * (dim - 1) / 2);
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      upper.push_back(b < k ? kb.xi_big_scaled(a, b) : kb.xi_small_scaled(a));
  return pfaffian_balanced(dim, upper);
}

void check_spec(const FiniteSpec& s, const char* who) {
  if (s.p < 1) throw DomainError(std::string(who) + ": p must be >= 1");
  if (s.k < 0) throw DomainError(std::string(who) + ": k must be >= 0");
  if (std::isnan(s.t)) throw DomainError(std::string(who) + ": t is NaN");
}

}  // namespace

double gap_finite(const FiniteSpec& spec) {
  check_spec(spec, "gap_finite");
  const int p = spec.p, k = spec.k;
  const double t = spec.t;
  if (t < 0.0) throw DomainError("gap_finite: t must be non-negative");
  if (t == 0.0) return 1.0;
  if (std::isinf(t)) return 0.0;

  const double ln4pt = std::log(4.0 * p * t);
  double ln = ln_constant(0, p, k) - p * t / 2 - std::log(2.0 * std::sqrt(2.0 * p));
  LogScaled pf = LogScaled::one();
  if (k % 2 == 0) {
    const double a = (p + k + 1) / 2.0;
    ln += (0.5 - 0.5 * k * k) * ln4pt + ln_gamma(a);
    if (k > 0) pf = kernel_pfaffian(k, 0, p + k, t);
    return (LogScaled::from_log(ln) * tricomi_u(a, 1.5, t / 2) * pf).to_double();
  }
  const double a = (p + k) / 2.0;
  ln += (1.0 - 0.5 * k * k) * ln4pt + ln_gamma(a);
  pf = kernel_pfaffian(k, 0, p + k + 1, t);
  return (LogScaled::from_log(ln) * tricomi_u(a, 1.5, t / 2) * pf).to_double();
}

double smallest_finite(const FiniteSpec& spec) {
  check_spec(spec, "smallest_finite");
  const int p = spec.p, k = spec.k;
  const double t = spec.t;
  if (!(t > 0.0)) throw DomainError("smallest_finite: t must be positive");
  if (std::isinf(t)) return 0.0;
  if (p == 1) {
    // One eigenvalue with density x^{(ν-1)/2} e^{-x/2} / Z_{1,ν}.
    const double nu = 2.0 * k;
    return std::exp((nu - 1) / 2 * std::log(t) - t / 2 - (nu + 1) / 2 * kLn2 -
                    ln_gamma((nu + 1) / 2));
  }

  const double ln4pt = std::log(4.0 * p * t);
  double ln = std::log(4.0 * p) + ln_constant(1, p, k) - p * t / 2 -
              std::log(2.0 * std::pow(2.0 * p, 1.5));
  LogScaled pf = LogScaled::one();
  if (k % 2 == 0) {
    const double a = (p + k + 2) / 2.0;
    ln += (1.0 - 0.5 * k * k) * ln4pt + ln_gamma(a);
    if (k > 0) pf = kernel_pfaffian(k, 1, p + k - 1, t);
    return (LogScaled::from_log(ln) * tricomi_u(a, 2.5, t / 2) * pf).to_double();
  }
  const double a = (p + k + 1) / 2.0;
  ln += (0.5 - 0.5 * k * k) * ln4pt + ln_gamma(a);
  pf = kernel_pfaffian(k, 1, p + k, t);
  return (LogScaled::from_log(ln) * tricomi_u(a, 2.5, t / 2) * pf).to_double();
}

double gap_finite_k0_vev(int p, double t) {
  if (p < 1) throw DomainError("gap_finite_k0_vev: p must be >= 1");
  if (t < 0.0) throw DomainError("gap_finite_k0_vev: t must be non-negative");
  if (t == 0.0) return 1.0;
  const LogScaled v = partition_z(p, 1) / partition_z(p, 0) * half_power_average(p, 1, t);
  return (v * LogScaled::from_log(-p * t / 2)).to_double();
}

double closed_form_k0(int p, double t) {
  if (p < 2) throw DomainError("closed_form_k0: p must be >= 2");
  if (!(t > 0.0)) throw DomainError("closed_form_k0: t must be positive");
  const double ln = ln_factorial(p) - (p - 0.5) * kLn2 - ln_gamma(p / 2.0) - 0.5 * std::log(t) -
                    p * t / 2;
  return (LogScaled::from_log(ln) * tricomi_u((p - 1) / 2.0, -0.5, t / 2)).to_double();
}

double closed_form_k1(int p, double t) {
  if (p < 2) throw DomainError("closed_form_k1: p must be >= 2");
  if (!(t > 0.0)) throw DomainError("closed_form_k1: t must be positive");
  // (-1)^n L_n^(mu)(-t) > 0, so both bracket terms are positive.
  LogScaled first = tricomi_u((p - 1) / 2.0, -0.5, t / 2) *
                    laguerre_monic(p - 1, 2.0, -t) *
                    LogScaled::from_log(-ln_factorial(p - 1));
  LogScaled second = tricomi_u((p + 1) / 2.0, 0.5, t / 2) *
                     laguerre_monic(p - 2, 3.0, -t) *
                     LogScaled::from_log(std::log(t / 2) - ln_factorial(p - 2));
  if ((p - 1) % 2 != 0) first = -first;
  if ((p - 2) % 2 != 0) second = -second;
  const double ln = ln_gamma((p + 1) / 2.0) - 0.5 * std::log(2.0 * std::numbers::pi) +
                    0.5 * std::log(t) - p * t / 2;
  return (LogScaled::from_log(ln) * (first + second)).to_double();
}

Regime regime_of(Quantity q) {
  switch (q) {
    case Quantity::GapFinite:
    case Quantity::SmallestFinite:
      return Regime::Finite;
    case Quantity::GapMicro:
    case Quantity::SmallestMicro:
      return Regime::Microscopic;
    case Quantity::Density:
      return Regime::Density;
  }
  return Regime::Finite;
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::GapFinite: return "E";
    case Quantity::SmallestFinite: return "P";
    case Quantity::GapMicro: return "E_micro";
    case Quantity::SmallestMicro: return "P_micro";
    case Quantity::Density: return "rho";
  }
  return "?";
}

double evaluate(Quantity q, int p, int k, double x) {
  switch (q) {
    case Quantity::GapFinite: return gap_finite({p, k, x});
    case Quantity::SmallestFinite: return smallest_finite({p, k, x});
    case Quantity::GapMicro: return gap_micro(k, x);
    case Quantity::SmallestMicro: return smallest_micro(k, x);
    case Quantity::Density: return micro_density(k, x);
  }
  throw std::logic_error("evaluate: unknown quantity");
}

namespace {

void check_grid(const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0)) throw DomainError("tabulate: grid values must be non-negative");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError("tabulate: grid must be strictly increasing");
  }
}

std::runtime_error at_point(double x, const std::exception& e) {
  return std::runtime_error("evaluation failed at abscissa " + std::to_string(x) + ": " +
                            e.what());
}

}  // namespace

DistributionCurve tabulate_serial(Quantity q, int p, int k, const std::vector<double>& grid) {
  check_grid(grid);
  DistributionCurve c{q, regime_of(q) == Regime::Finite ? p : 0, k, {}};
  c.samples.reserve(grid.size());
  for (double x : grid) {
    try {
      c.samples.push_back({x, evaluate(q, p, k, x)});
    } catch (const std::exception& e) {
      throw at_point(x, e);
    }
  }
  return c;
}

DistributionCurve tabulate(Quantity q, int p, int k, const std::vector<double>& grid) {
  check_grid(grid);
  DistributionCurve c{q, regime_of(q) == Regime::Finite ? p : 0, k, {}};
  const long n = static_cast<long>(grid.size());
  c.samples.resize(n);
  std::exception_ptr failure;
  long failed_at = -1;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      c.samples[i] = {grid[i], evaluate(q, p, k, grid[i])};
    } catch (...) {
#pragma omp critical(chgoe_tabulate_error)
      if (failed_at < 0 || i < failed_at) {
        failed_at = i;
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      throw at_point(grid[failed_at], e);
    }
  }
  return c;
}

}  // namespace chgoe
