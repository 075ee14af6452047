#pragma once

#include <cstdint>

#include "core/numeric.hpp"

namespace gcdsum {

// Euler-Maclaurin evaluation parameters: direct sum below `cut`, then the
// integral/boundary corrections with `terms` even-index Bernoulli terms.
struct ZetaConfig {
    unsigned cut = 50;
    unsigned terms = 10;
};

// Riemann zeta on the real axis for sigma > -1, sigma != 1.
// Absolute error stays below 1e-14 over [-0.9, 60] with the default config.
Real zeta(Real sigma);
Real zeta(Real sigma, const ZetaConfig& cfg);

// d/ds zeta(s) at real sigma > 1, by term-wise differentiation of the same
// Euler-Maclaurin expansion.
Real zeta_prime(Real sigma);
Real zeta_prime(Real sigma, const ZetaConfig& cfg);

// Exact even-index Bernoulli number B_{2m} (B_0 = 1, B_2 = 1/6, ...),
// grown on demand from the defining recurrence and cached.
Rat bernoulli_even(unsigned m);

// Euler-Mascheroni constant. The first call cross-checks the stored literal
// against an independent harmonic-number evaluation and aborts on drift.
Real euler_gamma();

// exp(-C (log x)^{3/5} (log log x)^{-1/5}), the decay envelope used in the
// diagnostic remainder plots. Requires x > e so that log log x > 0.
Real delta_decay(Real x, Real C = 1.0L);

}  // namespace gcdsum
