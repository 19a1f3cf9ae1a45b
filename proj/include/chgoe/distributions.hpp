#pragma once

#include <string>
#include <vector>

#include "chgoe/log_scaled.hpp"

namespace chgoe {

/// Finite matrix size p, topology ν = 2k, spectral point t.
struct FiniteSpec {
  int p = 1;
  int k = 0;
  double t = 0.0;
};

/// Gap probability E_{p,2k}(t): probability that no eigenvalue lies in [0, t].
double gap_finite(const FiniteSpec& spec);

/// Density P_{p,2k}(t) of the smallest eigenvalue (density in t).
double smallest_finite(const FiniteSpec& spec);

/// E_{p,0}(t) through the half-power average of the characteristic
/// polynomial; an independent route for k = 0.
double gap_finite_k0_vev(int p, double t);

/// Closed-form smallest-eigenvalue densities for ν = 0 and ν = 2.
double closed_form_k0(int p, double t);
double closed_form_k1(int p, double t);

enum class Quantity { GapFinite, SmallestFinite, GapMicro, SmallestMicro, Density };
enum class Regime { Finite, Microscopic, Density };

Regime regime_of(Quantity q);
std::string to_string(Quantity q);

struct CurvePoint {
  double x;
  double value;
};

/// Tabulated samples of one quantity. `p` is 0 for limiting curves; for the
/// density `k` holds ν rather than ν/2.
struct DistributionCurve {
  Quantity quantity = Quantity::GapFinite;
  int p = 0;
  int k = 0;
  std::vector<CurvePoint> samples;

  Regime regime() const { return regime_of(quantity); }
};

/// Evaluates `q` at every grid point (t for finite quantities, u otherwise)
/// using OpenMP threads. Output order follows the grid.
DistributionCurve tabulate(Quantity q, int p, int k, const std::vector<double>& grid);

/// Single-threaded reference for `tabulate`.
DistributionCurve tabulate_serial(Quantity q, int p, int k, const std::vector<double>& grid);

/// Value of `q` at one abscissa.
double evaluate(Quantity q, int p, int k, double x);

}  // namespace chgoe
