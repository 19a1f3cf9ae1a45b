#include "chgoe/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chgoe/sop.hpp"
#include "chgoe/specfun.hpp"

namespace chgoe {

void KernelSpec::validate() const {
  if (l < 2) throw DomainError("KernelSpec: l must be >= 2, got " + std::to_string(l));
  if (gamma < 0) throw DomainError("KernelSpec: gamma must be non-negative");
  if (!(t > 0.0)) throw DomainError("KernelSpec: t must be positive");
}

KernelBuilder::KernelBuilder(const KernelSpec& spec, int max_deriv)
    : spec_(spec), max_deriv_(max_deriv) {
  spec.validate();
  if (max_deriv < 0 || max_deriv > spec.l - 2)
    throw DomainError("KernelBuilder: derivative order must lie in [0, l-2]");
  const int l = spec.l, g = spec.gamma;
  const double t = spec.t;

  tables_.reserve(max_deriv + 2);
  for (int o = 0; o <= max_deriv + 1; ++o)
    tables_.push_back(laguerre_monic_table(l, 2.0 * g + o, -t));

  const SopFamily fam({g, t, 1.0}, l);
  const int K = (l - 1) / 2;
  n_pairs_ = spec.odd() ? K : l / 2;

  derivs_.assign(l, std::vector<LogScaled>(max_deriv + 1));
  for (int i = 0; i < l; ++i)
    for (int a = 0; a <= max_deriv; ++a) {
      std::vector<LogScaled> parts;
      for (const auto& term : fam.poly(i).terms) {
        if (term.order < a) continue;
        const int offset = static_cast<int>(std::lround(term.mu)) - 2 * g;
        parts.push_back(term.coeff * laguerre_at(term.order, offset, a));
      }
      derivs_[i][a] = log_sum(parts);
    }

  if (spec.odd()) {
    // R̂_i = R_i - (α_i/α_{2K}) R_{2K} for the indices that enter the sum.
    const LogScaled& aK = fam.weight_integral(2 * K);
    for (int i = 0; i < 2 * K; ++i) {
      const LogScaled c = fam.weight_integral(i) / aK;
      for (int a = 0; a <= max_deriv; ++a) derivs_[i][a] -= c * derivs_[2 * K][a];
    }
  }

  norms_.reserve(n_pairs_);
  for (int j = 0; j < n_pairs_; ++j) norms_.push_back(fam.norm(j));

  const double aa = g + (l - 1) / 2.0;
  rho_prime_ = (tricomi_u(aa, g + 0.5, t / 2) / tricomi_u(aa, g + 1.5, t / 2)).to_double();
}

LogScaled KernelBuilder::laguerre_at(int order, int mu_offset, int deriv) const {
  if (order < deriv) return LogScaled::zero();
  LogScaled v = tables_.at(mu_offset + deriv).at(order - deriv);
  if (deriv > 0) v *= LogScaled::from_log(ln_factorial(order) - ln_factorial(order - deriv));
  return v;
}

LogScaled KernelBuilder::xi_big_scaled(int a, int b) const {
  if (a < 0 || b < 0 || a > max_deriv_ || b > max_deriv_)
    throw DomainError("xi_big: derivative index out of range");
  if (a == b) return LogScaled::zero();
  std::vector<LogScaled> parts;
  parts.reserve(2 * n_pairs_);
  for (int j = 0; j < n_pairs_; ++j) {
    const auto& o = derivs_[2 * j + 1];
    const auto& e = derivs_[2 * j];
    parts.push_back(o[a] * e[b] / norms_[j]);
    parts.push_back(-(o[b] * e[a] / norms_[j]));
  }
  LogScaled s = log_sum(parts);
  const int power = 2 * spec_.gamma + a + b + 1;
  s *= LogScaled::from_log(power * std::log(spec_.t));
  return (a + b) % 2 == 0 ? s : -s;
}

LogScaled KernelBuilder::xi_small_scaled(int a) const {
  const int l = spec_.l;
  if (a < 0 || a > l - 2 || a > max_deriv_) throw DomainError("xi_small: index out of range");
  // Entries of tables_[a] are L_n^(2γ+a); tables_[a+1] are L_n^(2γ+a+1).
  LogScaled v = tables_[a][l - a - 2] * LogScaled::from_log(-ln_factorial(l - a - 2));
  if (l - a - 3 >= 0)
    v -= rho_prime_ * tables_[a + 1][l - a - 3] * LogScaled::from_log(-ln_factorial(l - a - 3));
  v *= LogScaled::from_log((2 * spec_.gamma + a) * std::log(spec_.t));
  return (a + l) % 2 == 0 ? v : -v;
}

double xi_big(int a, int b, const KernelSpec& spec) {
  spec.validate();
  if (a < 0 || b < 0 || a > spec.l - 2 || b > spec.l - 2)
    throw DomainError("xi_big: index out of range");
  return KernelBuilder(spec, std::max(a, b)).xi_big(a, b);
}

double xi_small(int a, const KernelSpec& spec) {
  spec.validate();
  if (a < 0 || a > spec.l - 2) throw DomainError("xi_small: index out of range");
  return KernelBuilder(spec, a).xi_small(a);
}

double kernel_sop_sum(double kappa_a, double kappa_b, int gamma, int l, double t) {
  const KernelSpec spec{gamma, l, t};
  spec.validate();
  const WeightParams params{gamma, t, 1.0};
  const SopFamily fam(params, l);
  const int K = (l - 1) / 2;
  const int n_pairs = spec.odd() ? K : l / 2;
  auto poly = [&](int i) {
    return spec.odd() ? fam.hat(i, K) : fam.poly(i);
  };
  std::vector<LogScaled> parts;
  for (int j = 0; j < n_pairs; ++j) {
    const auto o = poly(2 * j + 1), e = poly(2 * j);
    const LogScaled& r = fam.norm(j);
    parts.push_back(o.evaluate(kappa_a) * e.evaluate(kappa_b) / r);
    parts.push_back(-(o.evaluate(kappa_b) * e.evaluate(kappa_a) / r));
  }
  return log_sum(parts).to_double();
}

double kernel_cd(double kappa_a, double kappa_b, int gamma, int l, double t) {
  const KernelSpec spec{gamma, l, t};
  spec.validate();
  if (spec.odd()) throw DomainError("kernel_cd: l must be even");
  if (kappa_a == kappa_b) throw DomainError("kernel_cd: coincident arguments");
  const double z = t / 2, aa = gamma + (l - 1) / 2.0;
  const LogScaled den = tricomi_u(aa, gamma + 1.5, z);
  const double rho1 = (tricomi_u(aa, gamma + 0.5, z) / den).to_double();
  const double rho2 = (tricomi_u(aa, gamma - 0.5, z) / den).to_double();
  const double mu = 2.0 * gamma - 2.0;

  double ax[5], ay[5];
  for (int n = 0; n < 5; ++n) {
    ax[n] = laguerre_monic_deriv(l, mu, n, kappa_a).to_double();
    ay[n] = laguerre_monic_deriv(l, mu, n, kappa_b).to_double();
  }
  // ∂_x^i ∂_y^j of F(x,y) = [1 - ρ1(∂x+∂y) + ρ2 ∂x∂y] A(x)A(y)
  auto F = [&](int i, int j) {
    return ax[i] * ay[j] - rho1 * (ax[i + 1] * ay[j] + ax[i] * ay[j + 1]) +
           rho2 * ax[i + 1] * ay[j + 1];
  };
  const double d = kappa_a - kappa_b;
  const double first = F(1, 0) - F(0, 1);
  const double second = F(2, 0) - 2.0 * F(1, 1) + F(0, 2);
  const double zratio = (partition_z_t(l - 2, gamma, t) / partition_z_t(l, gamma, t)).to_double();
  return zratio * (second / d - 2.0 * first / (d * d));
}

}  // namespace chgoe
