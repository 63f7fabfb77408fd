#pragma once

#include "bec/trap.hpp"

namespace bec {

/// Default separation factor between the condensation temperature and the
/// largest level spacing required for the continuum (local-density)
/// description to hold.
inline constexpr double kDefaultContinuumThreshold = 20.0;

/// Outcome of the continuum-approximation check k_B Tc0 > threshold * d_max,
/// with d_max the largest single-particle level spacing of the trap.
struct ValidityReport {
  double criterion_lhs = 0.0;  ///< k_B Tc0 in reduced units
  double criterion_rhs = 0.0;  ///< threshold * largest level spacing
  double margin = 0.0;         ///< criterion_lhs / criterion_rhs
  double n_min = 0.0;          ///< smallest atom number passing at this shape and s
  double s_max = 0.0;          ///< largest anisotropy passing at this shape and N
  bool valid = false;          ///< margin > 1
};

/// Evaluates the continuum criterion for a trap and atom number, including
/// the equivalent bounds on atom number and anisotropy.
/// Requires n_atoms > 0 and threshold > 0.
ValidityReport check_validity(const TrapSpec& trap, double n_atoms,
                              double threshold = kDefaultContinuumThreshold);

/// Smallest atom number for which the continuum criterion holds:
/// N_min = zeta(3) * (threshold * d_max / gm)^3, where gm is the
/// geometric-mean spacing.  For an isotropic trap at the default threshold
/// this is zeta(3) * 20^3, roughly 9.6e3.
double min_atoms(Shape shape, double s = 1.0, double threshold = kDefaultContinuumThreshold);

/// Largest anisotropy for which the continuum criterion holds at fixed atom
/// number, obtained by inverting the criterion via the shape-dependent
/// spacing ratio d_max / gm = s^(1-n) with n the anisotropy exponent of the
/// geometric mean (so 1 - n is 1, 2/3, 1/3 for isotropic, disk, cigar):
/// s_max = [(1/threshold) * (N / zeta(3))^(1/3)]^(1/(1-n)).
double max_anisotropy(Shape shape, double n_atoms,
                      double threshold = kDefaultContinuumThreshold);

}  // namespace bec
