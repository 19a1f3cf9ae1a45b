#pragma once

#include "chgoe/log_scaled.hpp"

namespace chgoe {

// Hard-edge limit p -> ∞ with t = u/(4p).

/// Limit of ξ_a^(γ,l).
double xi_small_lim(int a, int gamma, double u);

/// Limit of Ξ_ab^(γ,l), a one-dimensional Bessel integral over [0, √u/2].
double xi_big_lim(int a, int b, int gamma, double u);

/// Limiting gap probability ℰ_{2k}(u); u = 0 gives 1.
double gap_micro(int k, double u);

/// Limiting smallest-eigenvalue density 𝒫_{2k}(u), u > 0.
double smallest_micro(int k, double u);

/// Microscopic level density ρ_ν(u), u > 0.
double micro_density(int nu, double u);

}  // namespace chgoe
