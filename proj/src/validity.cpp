#include "bec/validity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bec/semiclassical.hpp"
#include "bec/special_functions.hpp"

namespace bec {

namespace {

double zeta3() {
  static const double value = zeta(3.0).value;
  return value;
}

void check_threshold(double threshold) {
  if (!(threshold > 0.0)) {
    throw std::domain_error("validity: threshold must be positive, got " +
                            std::to_string(threshold));
  }
}

double largest_spacing(const TrapSpec& trap) {
  return std::max({trap.spacings[0], trap.spacings[1], trap.spacings[2]});
}

}  // namespace

double min_atoms(Shape shape, double s, double threshold) {
  check_threshold(threshold);
  const TrapSpec trap = make_trap(shape, s);
  const double ratio = threshold * largest_spacing(trap) / geometric_mean_spacing(trap);
  return zeta3() * ratio * ratio * ratio;
}

double max_anisotropy(Shape shape, double n_atoms, double threshold) {
  check_threshold(threshold);
  if (!(n_atoms > 0.0)) {
    throw std::domain_error("max_anisotropy: atom number must be positive, got N = " +
                            std::to_string(n_atoms));
  }
  const double one_minus_n = 1.0 - shape_exponent(shape);
  const double base = std::cbrt(n_atoms / zeta3()) / threshold;
  return std::pow(base, 1.0 / one_minus_n);
}

ValidityReport check_validity(const TrapSpec& trap, double n_atoms, double threshold) {
  check_threshold(threshold);
  ValidityReport report;
  report.criterion_lhs = tc0(trap, n_atoms);
  report.criterion_rhs = threshold * largest_spacing(trap);
  report.margin = report.criterion_lhs / report.criterion_rhs;
  report.n_min = min_atoms(trap.shape, trap.s, threshold);
  report.s_max = max_anisotropy(trap.shape, n_atoms, threshold);
  report.valid = report.margin > 1.0;
  return report;
}

}  // namespace bec
