#pragma once

#include <vector>

#include "bec/sweep.hpp"
#include "bec/trap.hpp"

namespace bec {

/// Version stamp recorded in sweep metadata.
inline constexpr const char* kToolVersion = "1.0.0";

/// Number of worker threads used for sweep evaluation: all hardware cores,
/// optionally capped by the BEC_NUM_WORKERS environment variable.
int worker_count();

/// Scan of characteristic temperatures against atom number for the isotropic
/// trap, every temperature rescaled by the thermodynamic-limit value.
struct Fig1Params {
  double n_min = 1e4;
  double n_max = 1e7;
  int points = 25;
  bool unsafe = false;  ///< permit n_min below 1e4 (strongly finite-size regime)
};

/// Builds a table with columns log10_n, tc0_rescaled (identically 1), the
/// first-order corrected temperature, and the temperatures where the
/// condensate fraction reaches 0.1%, 0.5% and 1%, all divided by tc0.
/// Points are spaced evenly in log10(N) with the endpoints hit exactly.
SweepTable cmd_fig1(const Fig1Params& params);

/// Condensate-fraction curves against t / tc0 for several atom numbers in
/// the isotropic trap, with the semiclassical limit curve alongside.
struct Fig2Params {
  std::vector<double> n_values = {1e4, 1e5};
  int t_points = 60;
};

/// Builds a table over the shared reduced-temperature grid [0.2, 1.3] with
/// one exact-fraction column per atom number, the semiclassical limit
/// max(0, 1 - x^3), and constant columns marking the 0.1%-1% threshold
/// window.  Metadata records the first-order temperature marker for each N.
SweepTable cmd_fig2(const Fig2Params& params);

/// Anisotropy sweep at fixed atom number for disk or cigar traps, comparing
/// the first-order corrected temperature against the exact 0.1% threshold.
struct AnisoScanParams {
  Shape shape = Shape::Disk;
  double n_atoms = 1e5;
  double s_min = 1.0;
  double s_max = 0.0;  ///< <= 0 selects twice the continuum anisotropy limit
  int points = 20;
};

/// Builds a table with columns s, the exact 0.1% threshold temperature, the
/// first-order corrected temperature, their relative deviation
/// |tc_first_order - t_0.1%| / t_0.1%, and a 0/1 flag marking points inside
/// the continuum validity domain.  Metadata records the anisotropy limit.
SweepTable cmd_anisoscan(const AnisoScanParams& params);

}  // namespace bec
