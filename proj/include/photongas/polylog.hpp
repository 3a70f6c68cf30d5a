#pragma once

namespace photongas {

/// Bose-Einstein integral function g_p(z) = sum_{n>=1} z^n / n^p for integer
/// order p >= 2 and fugacity z in [0, 1].
///
/// Direct summation with compensated accumulation; the truncated remainder is
/// replaced by the analytic tail  integral_{N+1/2}^inf z^x x^-p dx  evaluated
/// through the generalized exponential integral E_p, so the result is good to
/// ~1e-14 relative over the whole domain including z = 1.
///
/// Throws std::domain_error for p < 2, z < 0, z > 1, or non-finite z.
double polylog(int p, double z);

/// Riemann zeta at integer argument p >= 2: zeta(p) = g_p(1).
double zeta(int p);

}  // namespace photongas
