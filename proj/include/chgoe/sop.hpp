#pragma once

#include <vector>

#include "chgoe/log_scaled.hpp"

namespace chgoe {

/// Parameters of the weight w_γ(x,t) = x^γ (x+t)^{-1/2} e^{-ηx/2}.
/// η is a formal device and is always 1 when evaluated.
struct WeightParams {
  int gamma = 0;
  double t = 1.0;
  double eta = 1.0;

  /// Throws DomainError unless t > 0, γ >= 0 and η == 1.
  void validate() const;
};

/// One term coeff · L_order^(mu) of a Laguerre expansion.
struct LaguerreTerm {
  int order;  // >= -1; order -1 contributes nothing
  double mu;
  LogScaled coeff;
};

/// Polynomial written as a finite sum of monic Laguerre polynomials with
/// mixed superscripts. Every skew-orthogonal polynomial is one of these.
struct LaguerreCombination {
  std::vector<LaguerreTerm> terms;
  int gamma = 0;
  double t = 0.0;
  int index = 0;
  bool hatted = false;

  bool odd() const { return index % 2 != 0; }

  /// d^deriv/dy^deriv of the polynomial at y.
  LogScaled evaluate(double y, int deriv = 0) const;
  double operator()(double y) const { return evaluate(y).to_double(); }

  /// Appends `scale` times every term of `other`.
  void add_scaled(const LaguerreCombination& other, const LogScaled& scale);
};

double weight(double x, const WeightParams& params);

/// ∫_0^∞ x^{γ+m} (x+t)^{-1/2} e^{-x/2} dx.
LogScaled weight_moment(int m, const WeightParams& params);

/// Selberg normalization Z_{p,ν}.
LogScaled partition_z(int p, int nu);

/// Z_{p,γ}(t); p = 0 gives 1.
LogScaled partition_z_t(int p, int gamma, double t);

/// <det^{-1/2}(X + t)>_{p,ν}.
LogScaled half_power_average(int p, int nu, double t);

/// R_{2j}^(γ)(y,t).
LaguerreCombination sop_even(int j, const WeightParams& params);

/// R_{2j+1}^(γ)(y,t), in the five-term form.
LaguerreCombination sop_odd(int j, const WeightParams& params);

/// R_i for either parity.
LaguerreCombination sop(int i, const WeightParams& params);

/// Skew norm r_j^(γ)(t).
LogScaled sop_norm(int j, const WeightParams& params);

/// ∫_0^∞ w_γ(x,t) R_i(x,t) dx in closed form.
LogScaled sop_weight_integral(int i, const WeightParams& params);

/// ∫_0^∞ w_γ(x,t) f(x) dx by expanding every Laguerre term into monomials and
/// summing weight moments. Exact in exact arithmetic but subject to
/// cancellation in floating point for high degree.
LogScaled weight_integral_by_moments(const LaguerreCombination& f,
                                     const WeightParams& params);

/// Hatted polynomial R̂_j for 0 <= j <= 2K.
LaguerreCombination sop_hat(int j, int K, const WeightParams& params);

/// ∫_0^∞ dy ∫_0^y dx w(x) w(y) [f(x) g(y) - f(y) g(x)] by nested adaptive
/// quadrature. Slow; intended for tests. Throws std::runtime_error if the
/// quadrature error estimate is not small.
double skew_product_oracle(const LaguerreCombination& f,
                           const LaguerreCombination& g,
                           const WeightParams& params);

/// All polynomials R_0 ... R_{n-1}, norms and weight integrals for one
/// (γ, t), sharing the Tricomi evaluations between them.
class SopFamily {
 public:
  SopFamily(const WeightParams& params, int n);

  int size() const { return static_cast<int>(polys_.size()); }
  const WeightParams& params() const { return params_; }
  const LaguerreCombination& poly(int i) const { return polys_.at(i); }
  const LogScaled& norm(int j) const { return norms_.at(j); }
  const LogScaled& weight_integral(int i) const { return alphas_.at(i); }
  /// R̂_i relative to R_{2K}; needs 2K < size().
  LaguerreCombination hat(int i, int K) const;

 private:
  WeightParams params_;
  std::vector<LaguerreCombination> polys_;
  std::vector<LogScaled> norms_;
  std::vector<LogScaled> alphas_;
};

}  // namespace chgoe
