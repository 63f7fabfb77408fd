#include "bec/semiclassical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bec/special_functions.hpp"

namespace bec {

namespace {

double zeta2() {
  static const double value = zeta(2.0).value;
  return value;
}

double zeta3() {
  static const double value = zeta(3.0).value;
  return value;
}

}  // namespace

double tc0(const TrapSpec& trap, double n_atoms) {
  if (!(n_atoms > 0.0)) {
    throw std::domain_error("tc0: atom number must be positive, got N = " +
                            std::to_string(n_atoms));
  }
  return geometric_mean_spacing(trap) * std::cbrt(n_atoms / zeta3());
}

SemiclassicalResult tc_first_order(const TrapSpec& trap, double n_atoms) {
  if (!(n_atoms > 1.0)) {
    throw std::domain_error("tc_first_order: atom number must exceed 1, got N = " +
                            std::to_string(n_atoms));
  }
  static const double coeff = zeta2() / (2.0 * std::pow(zeta3(), 2.0 / 3.0));
  const double mean_ratio = arithmetic_mean_spacing(trap) / geometric_mean_spacing(trap);
  SemiclassicalResult result;
  result.t_c0 = tc0(trap, n_atoms);
  result.correction = -coeff * mean_ratio * std::pow(n_atoms, -1.0 / 3.0);
  result.t_c_first_order = result.t_c0 * (1.0 + result.correction);
  return result;
}

double lda_condensate_fraction_limit(double t_over_tc0) {
  if (!(t_over_tc0 >= 0.0)) {
    throw std::domain_error("lda_condensate_fraction_limit: reduced temperature must be >= 0");
  }
  const double x3 = t_over_tc0 * t_over_tc0 * t_over_tc0;
  return x3 >= 1.0 ? 0.0 : 1.0 - x3;
}

}  // namespace bec
