#pragma once

#include "bec/trap.hpp"

namespace bec {

/// Equilibrium state of an ideal Bose gas with a fixed mean atom number,
/// treated grand-canonically on the exact discrete trap spectrum.  The
/// condensate is identified with the ground level alone; its occupancy is
/// n0 = z / (1 - z) with fugacity z = exp((mu - E0) / t).
struct GasState {
  TrapSpec trap;
  double n_atoms = 0.0;  ///< target mean total occupation N
  double t = 0.0;        ///< temperature in reduced units
  double z = 0.0;        ///< fugacity, strictly inside (0, 1)
  double n0 = 0.0;       ///< ground-level occupation z / (1 - z)
  double f0 = 0.0;       ///< condensate fraction n0 / N, in [0, 1)
};

/// Temperature at which the condensate fraction reaches a given target.
struct ThresholdResult {
  double t_threshold = 0.0;      ///< solution temperature in reduced units
  double target_fraction = 0.0;  ///< requested condensate fraction
  int iterations = 0;            ///< root-finder iterations used
  double residual = 0.0;         ///< |f0(t_threshold) - target|
};

/// Total mean occupation summed level by level over the discrete spectrum,
/// truncated at (E - E0) / t <= cutoff.  Isotropic traps use the analytic
/// shell degeneracy (n+1)(n+2)/2; anisotropic traps enumerate all three
/// quantum numbers.  Intended as a transparent cross-check for the series
/// evaluator.  Requires z in (0, 1), t > 0, cutoff > 0.
double occupation_sum_direct(const TrapSpec& trap, double z, double t, double cutoff = 45.0);

/// Total mean occupation via the resummed form
/// sum_{j>=1} z^j prod_i (1 - exp(-j d_i / t))^(-1).
/// The ground-level part of every term is summed analytically to z / (1 - z),
/// and the excited-level remainder sum_j z^j [prod_i(...)^(-1) - 1] is
/// truncated once a term falls below 1e-15 of the running total.  This is the
/// production evaluator; it stays accurate arbitrarily close to z = 1.
/// Throws convergence_error if 1e7 terms do not suffice.
double occupation_sum_series(const TrapSpec& trap, double z, double t);

/// Solves occupation(z) = n_atoms for the fugacity at fixed temperature.
/// The occupation is strictly increasing in z, so the root is unique; it is
/// located in logit space u = ln(z / (1 - z)) (where n0 = e^u exactly) to a
/// relative tolerance of 1e-10 on the total occupation, and the returned
/// state sits on the occupation <= N side of the bracket so that f0 < 1
/// always holds.  Requires t > 0 and 0 < n_atoms <= 1e12.
GasState solve_fugacity(const TrapSpec& trap, double n_atoms, double t);

/// Condensate fraction n0 / N at the given temperature; shorthand for
/// solve_fugacity(trap, n_atoms, t).f0.
double condensate_fraction(const TrapSpec& trap, double n_atoms, double t);

/// Finds the temperature where condensate_fraction == target_fraction.  The
/// fraction decreases strictly with temperature, so the root is unique; the
/// initial bracket [0.1, 2] x tc0 is expanded geometrically until it encloses
/// the root (bracketing_error if that fails), then refined until
/// |f0 - target| <= 1e-6 * target within 200 iterations (convergence_error
/// otherwise).  Requires target_fraction in (0, 1).
ThresholdResult threshold_temperature(const TrapSpec& trap, double n_atoms,
                                      double target_fraction);

}  // namespace bec
