#include "chgoe/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace chgoe {

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = x;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

}  // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  if (n == 1) {
    auto r = std::make_shared<GaussLegendreRule>();
    r->nodes = {0.0};
    r->weights = {2.0};
    return r;
  }
  static std::mutex mtx;
  static std::map<int, std::shared_ptr<const GaussLegendreRule>> cache;
  std::lock_guard lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const GaussLegendreRule>(build_rule(n));
  cache.emplace(n, rule);
  return rule;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n) {
  const auto rule = gauss_legendre(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += rule->weights[i] * f(mid + half * rule->nodes[i]);
  return s * half;
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, double* error,
                          unsigned max_depth, double abs_tol) {
  using boost::math::quadrature::gauss_kronrod;
  if (a == b) {
    if (error) *error = 0.0;
    return 0.0;
  }
  if (a > b) return -integrate_adaptive(f, b, a, rel_tol, error, max_depth, abs_tol);

  // Infinite ends are mapped onto a finite s-interval first.
  std::function<double(double)> g;
  double lo = a, hi = b;
  if (std::isinf(a) && std::isinf(b)) {
    g = [&f](double s) { const double d = 1.0 - s * s; return f(s / d) * (1.0 + s * s) / (d * d); };
    lo = -1.0, hi = 1.0;
  } else if (std::isinf(b)) {
    g = [&f, a](double s) { const double d = 1.0 - s; return f(a + s / d) / (d * d); };
    lo = 0.0, hi = 1.0;
  } else if (std::isinf(a)) {
    g = [&f, b](double s) { const double d = 1.0 - s; return f(b - s / d) / (d * d); };
    lo = 0.0, hi = 1.0;
  } else {
    g = f;
  }

  struct Piece {
    double lo, hi, value, err;
    unsigned depth;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  auto eval = [&g](double l, double h, unsigned depth) {
    double e = 0.0;
    const double v = gauss_kronrod<double, 61>::integrate(g, l, h, 0, 0.0, &e);
    return Piece{l, h, v, e, depth};
  };

  std::priority_queue<Piece> queue;
  std::vector<Piece> done;
  queue.push(eval(lo, hi, 0));
  double total = queue.top().value, total_err = queue.top().err;
  constexpr std::size_t kMaxPieces = 4000;
  while (!queue.empty() && queue.size() + done.size() < kMaxPieces &&
         total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
    Piece worst = queue.top();
    queue.pop();
    if (worst.depth >= max_depth) {
      done.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Piece left = eval(worst.lo, mid, worst.depth + 1);
    const Piece right = eval(mid, worst.hi, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
  }
  // Re-sum to drop the rounding accumulated by the running updates.
  total = 0.0, total_err = 0.0;
  for (const auto& p : done) total += p.value, total_err += p.err;
  while (!queue.empty()) {
    total += queue.top().value;
    total_err += queue.top().err;
    queue.pop();
  }
  if (error) *error = total_err;
  return total;
}

}  // namespace chgoe
