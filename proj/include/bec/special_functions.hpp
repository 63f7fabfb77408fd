#pragma once

#include <cstdint>

namespace bec {

/// Value of an adaptively truncated series together with the number of
/// explicitly summed terms and a rigorous upper bound on the truncation error.
struct SeriesResult {
  double value = 0.0;
  std::int64_t terms_used = 0;
  double bound = 0.0;
};

/// Riemann zeta function zeta(s) = sum_{j>=1} j^{-s} for s > 1.
///
/// The partial sum is corrected by the midpoint of the analytic tail bracket
/// integral_{J+1}^inf x^{-s} dx <= tail <= integral_J^inf x^{-s} dx, and the
/// half-width of that bracket is reported as the error bound.  Terms are added
/// until the bound drops below 1e-12 relative to the value.
///
/// Throws std::domain_error for s <= 1 (the series diverges there).
SeriesResult zeta(double s);

/// Bose-Einstein polylogarithm Li_s(z) = sum_{j>=1} z^j / j^s for s >= 2 and
/// 0 <= z <= 1.
///
/// For z < 1 the series is truncated once the next term is below 1e-16 of the
/// running sum *and* the rigorous geometric tail bound term * z / (1 - z)
/// drops below 1e-12 relative to the sum; Li_s(1) delegates to zeta(s).
/// Throws convergence_error if 1e7 terms do not suffice (z extremely close
/// to 1) and std::domain_error for arguments outside the supported region.
SeriesResult polylog(double s, double z);

}  // namespace bec
