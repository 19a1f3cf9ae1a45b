#include "chgoe/sop.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chgoe/quadrature.hpp"
#include "chgoe/specfun.hpp"

namespace chgoe {

namespace {

const double kLn2 = std::numbers::ln2;
const double kLnGamma32 = std::log(std::sqrt(std::numbers::pi) / 2.0);

// ln of the t-independent part of Z_{p,γ}(t).
double ln_z_t_prefactor(int p, int gamma) {
  double s = 0.5 * p * (p + 2.0 * gamma) * kLn2;
  for (int j = 0; j < p; ++j)
    s += ln_gamma((j + 3) / 2.0) + ln_gamma((j + 2.0 * gamma + 2.0) / 2.0) - kLnGamma32;
  return s;
}

double rho(int j, int gamma, double t) {
  const double a = j + gamma + 0.5;
  return (tricomi_u(a, gamma + 0.5, t / 2) / tricomi_u(a, gamma + 1.5, t / 2)).to_double();
}

LaguerreCombination make_even(int j, int gamma, double t, double rho_j) {
  LaguerreCombination c;
  c.gamma = gamma;
  c.t = t;
  c.index = 2 * j;
  const double mu = 2.0 * gamma;
  if (j == 0) {
    c.terms.push_back({0, mu, LogScaled::one()});
    return c;
  }
  c.terms.push_back({2 * j, mu, LogScaled::one()});
  c.terms.push_back({2 * j - 1, mu + 1, LogScaled::from_double(-2.0 * j * rho_j)});
  return c;
}

LaguerreCombination make_odd(int j, int gamma, double t, double rho_j,
                             double low_ratio) {
  LaguerreCombination c;
  c.gamma = gamma;
  c.t = t;
  c.index = 2 * j + 1;
  const double mu = 2.0 * gamma;
  c.terms.push_back({2 * j + 1, mu, LogScaled::one()});
  if (j == 0) return c;
  const double d1 = -2.0 * j * rho_j;
  const double d2 = -d1 + d1 * d1 - 4.0 * j * (j + 1.0) * low_ratio;
  const double d3 = -2.0 * (2.0 * j - 1.0) * (gamma + j) * d1;
  c.terms.push_back({2 * j - 1, mu, LogScaled::from_double(-4.0 * j * (gamma + j))});
  c.terms.push_back({2 * j, mu + 1, LogScaled::from_double(d1)});
  c.terms.push_back({2 * j - 1, mu + 1, LogScaled::from_double(d2)});
  c.terms.push_back({2 * j - 2, mu + 1, LogScaled::from_double(d3)});
  return c;
}

double low_ratio(int j, int gamma, double t) {
  const double a = j + gamma + 0.5;
  return (tricomi_u(a, gamma - 0.5, t / 2) / tricomi_u(a, gamma + 1.5, t / 2)).to_double();
}

}  // namespace

void WeightParams::validate() const {
  if (!(t > 0.0)) throw DomainError("WeightParams: t must be positive, got " + std::to_string(t));
  if (gamma < 0) throw DomainError("WeightParams: gamma must be non-negative");
  if (eta != 1.0) throw DomainError("WeightParams: eta must equal 1 at evaluation time");
}

LogScaled LaguerreCombination::evaluate(double y, int deriv) const {
  std::vector<LogScaled> vals;
  vals.reserve(terms.size());
  for (const auto& term : terms) {
    if (term.order < 0 || term.coeff.is_zero()) continue;
    vals.push_back(term.coeff * laguerre_monic_deriv(term.order, term.mu, deriv, y));
  }
  return log_sum(vals);
}

void LaguerreCombination::add_scaled(const LaguerreCombination& other,
                                     const LogScaled& scale) {
  for (const auto& term : other.terms)
    terms.push_back({term.order, term.mu, term.coeff * scale});
}

double weight(double x, const WeightParams& params) {
  if (x < 0.0) throw DomainError("weight: negative argument");
  const double xg = params.gamma == 0 ? 1.0 : std::pow(x, params.gamma);
  return xg / std::sqrt(x + params.t) * std::exp(-params.eta * x / 2.0);
}

LogScaled weight_moment(int m, const WeightParams& params) {
  params.validate();
  const double s = params.gamma + m;
  return LogScaled::from_log(ln_gamma(s + 1.0) + (s + 0.5) * std::log(params.t)) *
         tricomi_u(s + 1.0, s + 1.5, params.t / 2);
}

LogScaled partition_z(int p, int nu) {
  if (p < 1) throw DomainError("partition_z: p must be >= 1");
  if (nu < -1) throw DomainError("partition_z: nu must be >= -1");
  double s = 0.5 * p * (p + nu) * kLn2;
  for (int j = 0; j < p; ++j)
    s += ln_gamma((j + 3) / 2.0) + ln_gamma((j + nu + 1) / 2.0) - kLnGamma32;
  return LogScaled::from_log(s);
}

LogScaled partition_z_t(int p, int gamma, double t) {
  if (p < 0) throw DomainError("partition_z_t: p must be >= 0");
  if (!(t > 0.0)) throw DomainError("partition_z_t: t must be positive");
  if (p == 0) return LogScaled::one();
  return LogScaled::from_log(ln_z_t_prefactor(p, gamma)) *
         tricomi_u(p / 2.0, (1.0 - 2.0 * gamma) / 2.0, t / 2);
}

LogScaled half_power_average(int p, int nu, double t) {
  if (p < 1) throw DomainError("half_power_average: p must be >= 1");
  if (!(t > 0.0)) throw DomainError("half_power_average: t must be positive");
  return LogScaled::from_log(-0.5 * p * kLn2) * tricomi_u(p / 2.0, (2.0 - nu) / 2.0, t / 2);
}

LaguerreCombination sop_even(int j, const WeightParams& params) {
  params.validate();
  if (j < 0) throw DomainError("sop_even: negative index");
  return make_even(j, params.gamma, params.t, j > 0 ? rho(j, params.gamma, params.t) : 0.0);
}

LaguerreCombination sop_odd(int j, const WeightParams& params) {
  params.validate();
  if (j < 0) throw DomainError("sop_odd: negative index");
  if (j == 0) return make_odd(0, params.gamma, params.t, 0.0, 0.0);
  return make_odd(j, params.gamma, params.t, rho(j, params.gamma, params.t),
                  low_ratio(j, params.gamma, params.t));
}

LaguerreCombination sop(int i, const WeightParams& params) {
  return i % 2 == 0 ? sop_even(i / 2, params) : sop_odd(i / 2, params);
}

LogScaled sop_norm(int j, const WeightParams& params) {
  params.validate();
  if (j < 0) throw DomainError("sop_norm: negative index");
  const double b = 0.5 - params.gamma, z = params.t / 2;
  LogScaled r = LogScaled::from_log(kLn2 + ln_factorial(2 * j) +
                                    ln_gamma(2.0 * j + 2.0 * params.gamma + 2.0)) *
                tricomi_u(j + 1.0, b, z);
  if (j > 0) r /= tricomi_u(j, b, z);
  return r;
}

LogScaled sop_weight_integral(int i, const WeightParams& params) {
  if (i < 0) throw DomainError("sop_weight_integral: negative index");
  return SopFamily(params, i + 1).weight_integral(i);
}

LogScaled weight_integral_by_moments(const LaguerreCombination& f,
                                     const WeightParams& params) {
  int max_order = 0;
  for (const auto& term : f.terms) max_order = std::max(max_order, term.order);
  std::vector<LogScaled> moments(max_order + 1);
  for (int m = 0; m <= max_order; ++m) moments[m] = weight_moment(m, params);

  std::vector<LogScaled> parts;
  for (const auto& term : f.terms) {
    const int a = term.order;
    if (a < 0 || term.coeff.is_zero()) continue;
    // Monic L_a^(mu)(x) = sum_m (-1)^{a-m} a!/m! Γ(a+mu+1)/(Γ(a-m+1) Γ(mu+m+1)) x^m
    for (int m = 0; m <= a; ++m) {
      const double lc = ln_factorial(a) - ln_factorial(m) + ln_gamma(a + term.mu + 1.0) -
                        ln_factorial(a - m) - ln_gamma(term.mu + m + 1.0);
      const LogScaled c{lc, (a - m) % 2 == 0 ? 1 : -1};
      parts.push_back(term.coeff * c * moments[m]);
    }
  }
  return log_sum(parts);
}

LaguerreCombination sop_hat(int j, int K, const WeightParams& params) {
  if (K < 0 || j < 0 || j > 2 * K) throw DomainError("sop_hat: need 0 <= j <= 2K");
  return SopFamily(params, 2 * K + 1).hat(j, K);
}

double skew_product_oracle(const LaguerreCombination& f,
                           const LaguerreCombination& g,
                           const WeightParams& params) {
  params.validate();
  const double inf = std::numeric_limits<double>::infinity();
  // |<f,g>| <= 2 ∫w|f| ∫w|g|, which sets the absolute scale for both levels.
  const double sf = integrate_adaptive([&](double x) { return weight(x, params) * std::fabs(f(x)); },
                                       0.0, inf, 1e-8);
  const double sg = integrate_adaptive([&](double x) { return weight(x, params) * std::fabs(g(x)); },
                                       0.0, inf, 1e-8);
  const double scale = 2.0 * sf * sg;
  auto inner = [&](double y) {
    if (y <= 0.0) return 0.0;
    const double fy = f(y), gy = g(y);
    auto h = [&](double x) { return weight(x, params) * (f(x) * gy - fy * g(x)); };
    const double inner_scale = sf * std::fabs(gy) + sg * std::fabs(fy);
    return integrate_adaptive(h, 0.0, y, 1e-12, nullptr, 18, 1e-13 * inner_scale);
  };
  double err = 0.0;
  const double v = integrate_adaptive([&](double y) { return weight(y, params) * inner(y); }, 0.0,
                                      inf, 1e-10, &err, 18, 1e-11 * scale);
  if (!std::isfinite(v) || err > 1e-8 * std::fmax(std::fabs(v), scale))
    throw std::runtime_error("skew_product_oracle: quadrature did not converge (error estimate " +
                             std::to_string(err) + ")");
  return v;
}

SopFamily::SopFamily(const WeightParams& params, int n) : params_(params) {
  params.validate();
  if (n < 1) throw DomainError("SopFamily: need at least one polynomial");
  const int gamma = params.gamma;
  const double t = params.t, z = t / 2;
  const double b_lo = 0.5 - gamma, b_hi = 1.5 - gamma;

  // W[m] = U(m/2, 1/2-γ, t/2), V[m] = U(m/2, 3/2-γ, t/2); U(0, ., .) = 1.
  std::vector<LogScaled> W(n + 2), V(n + 3);
  W[0] = LogScaled::one();
  V[0] = LogScaled::one();
  for (int m = 1; m <= n + 1; ++m) W[m] = tricomi_u(m / 2.0, b_lo, z);
  for (int m = 2; m <= n + 2; ++m) V[m] = tricomi_u(m / 2.0, b_hi, z);

  const int n_pairs = (n + 1) / 2;
  polys_.reserve(n);
  norms_.reserve(n_pairs);
  for (int j = 0; j < n_pairs; ++j) {
    norms_.push_back(LogScaled::from_log(kLn2 + ln_factorial(2 * j) +
                                         ln_gamma(2.0 * j + 2.0 * gamma + 2.0)) *
                     W[2 * j + 2] / W[2 * j]);
    const double r = j > 0 ? rho(j, gamma, t) : 0.0;
    polys_.push_back(make_even(j, gamma, t, r));
    if (2 * j + 1 < n)
      polys_.push_back(make_odd(j, gamma, t, r, j > 0 ? low_ratio(j, gamma, t) : 0.0));
  }

  alphas_.reserve(n);
  double ln_pref = 0.0;  // ln of the t-independent part of Z_{2j+1}(t)
  double ln_norm_prod = 0.0;
  int pref_p = 0;
  for (int j = 0; 2 * j < n; ++j) {
    while (pref_p < 2 * j + 1) {
      ln_pref += ln_gamma((pref_p + 3) / 2.0) + ln_gamma((pref_p + 2.0 * gamma + 2.0) / 2.0) -
                 kLnGamma32;
      ++pref_p;
    }
    const double p = 2.0 * j + 1.0;
    const LogScaled a_even =
        LogScaled::from_log(0.5 * p * (p + 2.0 * gamma) * kLn2 + ln_pref -
                            ln_factorial(2 * j + 1) - ln_norm_prod) *
        W[2 * j + 1];
    alphas_.push_back(a_even);
    if (2 * j + 1 < n) {
      double bracket = (2.0 * j + 1.0) / 2.0 * (V[2 * j + 3] / W[2 * j + 1]).to_double();
      if (j > 0) bracket -= j * (V[2 * j + 2] / W[2 * j]).to_double();
      alphas_.push_back(a_even * (t * bracket));
    }
    ln_norm_prod += norms_[j].log_magnitude;
  }
}

LaguerreCombination SopFamily::hat(int i, int K) const {
  if (K < 0 || i < 0 || i > 2 * K || 2 * K >= size())
    throw DomainError("SopFamily::hat: index out of range");
  const LogScaled& aK = alphas_[2 * K];
  if (aK.is_zero()) throw DomainError("SopFamily::hat: degenerate normalization");
  LaguerreCombination out;
  out.gamma = params_.gamma;
  out.t = params_.t;
  out.index = i;
  out.hatted = true;
  if (i == 2 * K) {
    out.add_scaled(polys_[2 * K], LogScaled::one() / aK);
    return out;
  }
  out.add_scaled(polys_[i], LogScaled::one());
  out.add_scaled(polys_[2 * K], -(alphas_[i] / aK));
  return out;
}

}  // namespace chgoe
