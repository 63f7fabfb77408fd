#pragma once

#include "bec/trap.hpp"

namespace bec {

/// Thermodynamic-limit condensation temperature with its leading finite-size
/// correction, in reduced units (k_B = hbar = loosest trap frequency = 1).
struct SemiclassicalResult {
  double t_c0 = 0.0;             ///< thermodynamic-limit value
  double t_c_first_order = 0.0;  ///< t_c0 * (1 + correction)
  double correction = 0.0;       ///< relative first-order shift, always <= 0
};

/// Thermodynamic-limit condensation temperature
/// t_c0 = gm * (N / zeta(3))^(1/3), where gm is the geometric-mean level
/// spacing of the trap.  Requires n_atoms > 0.
double tc0(const TrapSpec& trap, double n_atoms);

/// First-order finite-size corrected condensation temperature.  The relative
/// shift is -(zeta(2) / (2 zeta(3)^(2/3))) * (am/gm) * N^(-1/3), with am and
/// gm the arithmetic- and geometric-mean level spacings; the prefactor for an
/// isotropic trap is 0.72750360228...  Requires n_atoms > 1 so the shift is
/// meaningful.
SemiclassicalResult tc_first_order(const TrapSpec& trap, double n_atoms);

/// Condensate fraction of the semiclassical (local-density) limit,
/// max(0, 1 - x^3) with x = t / t_c0.  Requires t_over_tc0 >= 0.
double lda_condensate_fraction_limit(double t_over_tc0);

}  // namespace bec
