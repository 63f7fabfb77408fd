#pragma once

#include <array>
#include <string_view>

namespace bec {

/// Trap families, classified by how many axes are tightened relative to the
/// loosest one.
enum class Shape {
  Isotropic,  ///< all three frequencies equal
  Disk,       ///< one tight axis: spacings (1, 1, s)
  Cigar,      ///< two tight axes: spacings (s, s, 1)
};

/// A 3D harmonic trap in reduced units.
///
/// Conventions used throughout the library: hbar = k_B = 1, and the loosest
/// trap frequency is the unit of energy and temperature, so the smallest
/// single-particle level spacing is always exactly 1.  The anisotropy s >= 1
/// is the ratio of the tight to the loose frequency.  A disk tightens one
/// axis (spacings 1, 1, s) and a cigar tightens two (spacings s, s, 1); with
/// this choice the geometric-mean spacing is s^(1/3) for a disk and s^(2/3)
/// for a cigar.  Energies are measured from the ground level, so the spectrum
/// is E(n1,n2,n3) = n1*d1 + n2*d2 + n3*d3 with quantum numbers n_i >= 0.
struct TrapSpec {
  Shape shape = Shape::Isotropic;
  double s = 1.0;
  std::array<double, 3> spacings{1.0, 1.0, 1.0};
};

/// Builds a trap of the given shape and anisotropy.
///
/// Requires s >= 1; an isotropic trap additionally requires s == 1.
/// Throws std::domain_error otherwise.
TrapSpec make_trap(Shape shape, double s = 1.0);

/// Geometric mean of the three level spacings (the mean trap frequency in
/// reduced units): 1, s^(1/3), s^(2/3) for isotropic, disk, cigar.
double geometric_mean_spacing(const TrapSpec& trap);

/// Arithmetic mean of the three level spacings: 1, (2+s)/3, (1+2s)/3 for
/// isotropic, disk, cigar.  Always >= the geometric mean.
double arithmetic_mean_spacing(const TrapSpec& trap);

/// Exponent n in the anisotropy prefactor s^n of the geometric-mean spacing:
/// 0 (isotropic), 1/3 (disk), 2/3 (cigar).
double shape_exponent(Shape shape);

/// Lower-case name of a shape ("isotropic", "disk", "cigar").
const char* to_string(Shape shape);

/// Parses a shape name (case-sensitive, lower-case).
/// Throws std::invalid_argument for unknown names.
Shape shape_from_string(std::string_view name);

}  // namespace bec
