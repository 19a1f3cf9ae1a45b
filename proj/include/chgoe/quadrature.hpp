#pragma once

#include <functional>
#include <memory>
#include <vector>

namespace chgoe {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights of the n-point Gauss-Legendre rule. Rules are computed
/// once per order and cached; the returned pointer stays valid for the life
/// of the process.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n);

/// Globally adaptive Gauss-Kronrod (61 point) integral of f over [a, b].
/// Either bound may be infinite. The interval with the largest error estimate
/// is bisected until the summed estimate is below max(abs_tol, rel_tol |I|)
/// or every remaining piece is `max_depth` bisections deep (at most 4000
/// pieces in total). `error` receives
/// the summed error estimate if given.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-12,
                          double* error = nullptr, unsigned max_depth = 18,
                          double abs_tol = 0.0);

}  // namespace chgoe
