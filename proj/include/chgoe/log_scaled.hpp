#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace chgoe {

/// A real number stored as sign * exp(log_magnitude).
///
/// Used wherever intermediate quantities (factorials, Laguerre polynomials of
/// high degree, Gamma * U products) leave the double range even though the
/// final assembled result is O(1). sign == 0 means the value is exactly zero
/// and log_magnitude is ignored.
struct LogScaled {
  double log_magnitude = -std::numeric_limits<double>::infinity();
  int sign = 0;

  constexpr LogScaled() = default;
  constexpr LogScaled(double log_mag, int s) : log_magnitude(log_mag), sign(s) {}

  static LogScaled from_double(double x) {
    if (x == 0.0) return {};
    return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
  }
  static constexpr LogScaled zero() { return {}; }
  static constexpr LogScaled one() { return {0.0, 1}; }
  /// exp(log_mag) with positive sign.
  static constexpr LogScaled from_log(double log_mag) { return {log_mag, 1}; }

  bool is_zero() const { return sign == 0; }

  double to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_magnitude);
  }

  LogScaled operator-() const { return {log_magnitude, -sign}; }

  LogScaled& operator*=(const LogScaled& o) {
    sign *= o.sign;
    log_magnitude = sign == 0 ? -std::numeric_limits<double>::infinity()
                              : log_magnitude + o.log_magnitude;
    return *this;
  }
  LogScaled& operator/=(const LogScaled& o) {
    // Division by an exact zero yields an infinite magnitude with the
    // numerator's sign; callers guard against this where it matters.
    if (o.sign == 0) {
      log_magnitude = std::numeric_limits<double>::infinity();
      return *this;
    }
    sign *= o.sign;
    if (sign != 0) log_magnitude -= o.log_magnitude;
    return *this;
  }
  LogScaled& operator+=(const LogScaled& o) {
    if (o.sign == 0) return *this;
    if (sign == 0) return *this = o;
    const double hi = std::fmax(log_magnitude, o.log_magnitude);
    const double s = sign * std::exp(log_magnitude - hi) +
                     o.sign * std::exp(o.log_magnitude - hi);
    if (s == 0.0) return *this = LogScaled{};
    log_magnitude = hi + std::log(std::fabs(s));
    sign = s > 0 ? 1 : -1;
    return *this;
  }
  LogScaled& operator-=(const LogScaled& o) { return *this += -o; }

  LogScaled& operator*=(double x) { return *this *= from_double(x); }

  friend LogScaled operator*(LogScaled a, const LogScaled& b) { return a *= b; }
  friend LogScaled operator/(LogScaled a, const LogScaled& b) { return a /= b; }
  friend LogScaled operator+(LogScaled a, const LogScaled& b) { return a += b; }
  friend LogScaled operator-(LogScaled a, const LogScaled& b) { return a -= b; }
  friend LogScaled operator*(LogScaled a, double x) { return a *= x; }
  friend LogScaled operator*(double x, LogScaled a) { return a *= x; }

  /// Integer power; n may be negative.
  LogScaled pow(int n) const {
    if (n == 0) return one();
    if (sign == 0) return {};
    return {log_magnitude * n, (sign < 0 && (n % 2 != 0)) ? -1 : 1};
  }
};

/// Sum of many terms with a single rescaling, so that cancellation is
/// resolved relative to the largest term rather than pairwise.
inline LogScaled log_sum(std::span<const LogScaled> terms) {
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0) hi = std::fmax(hi, t.log_magnitude);
  if (!std::isfinite(hi)) return {};
  double s = 0.0;
  for (const auto& t : terms)
    if (t.sign != 0) s += t.sign * std::exp(t.log_magnitude - hi);
  if (s == 0.0) return {};
  return {hi + std::log(std::fabs(s)), s > 0 ? 1 : -1};
}

}  // namespace chgoe
