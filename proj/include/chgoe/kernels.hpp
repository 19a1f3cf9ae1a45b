#pragma once

#include <vector>

#include "chgoe/log_scaled.hpp"

namespace chgoe {

/// Kernel size index l together with the weight parameters (γ, t).
/// Plain skew-orthogonal polynomials enter for even l, hatted ones for odd l.
struct KernelSpec {
  int gamma = 0;
  int l = 2;
  double t = 1.0;

  bool odd() const { return l % 2 != 0; }
  void validate() const;
};

/// Evaluates Ξ_ab and ξ_a at the degenerate point κ = -t for one KernelSpec.
///
/// Construction does the expensive part once (the polynomial family, the
/// Laguerre tables at y = -t up to derivative order `max_deriv`), after which
/// each entry costs O(l).
class KernelBuilder {
 public:
  KernelBuilder(const KernelSpec& spec, int max_deriv);

  const KernelSpec& spec() const { return spec_; }
  int max_deriv() const { return max_deriv_; }

  LogScaled xi_big_scaled(int a, int b) const;
  LogScaled xi_small_scaled(int a) const;
  double xi_big(int a, int b) const { return xi_big_scaled(a, b).to_double(); }
  double xi_small(int a) const { return xi_small_scaled(a).to_double(); }

  /// d^a/dy^a of the i-th polynomial entering the kernel sum, at y = -t.
  const LogScaled& poly_deriv(int i, int a) const { return derivs_.at(i).at(a); }

 private:
  LogScaled laguerre_at(int order, int mu_offset, int deriv) const;

  KernelSpec spec_;
  int max_deriv_;
  int n_pairs_;
  std::vector<std::vector<LogScaled>> tables_;  // tables_[o][n] = L_n^(2γ+o)(-t)
  std::vector<std::vector<LogScaled>> derivs_;
  std::vector<LogScaled> norms_;
  double rho_prime_;
};

/// Ξ_ab^(γ,l)(t).
double xi_big(int a, int b, const KernelSpec& spec);

/// ξ_a^(γ,l)(t).
double xi_small(int a, const KernelSpec& spec);

/// Two-argument kernel as the explicit sum over skew-orthogonal polynomials.
double kernel_sop_sum(double kappa_a, double kappa_b, int gamma, int l, double t);

/// Two-argument kernel for even l in Christoffel-Darboux form: a fixed
/// number of products of two Laguerre polynomials regardless of l.
/// Requires kappa_a != kappa_b.
double kernel_cd(double kappa_a, double kappa_b, int gamma, int l, double t);

}  // namespace chgoe
