#include "bec/trap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bec {

TrapSpec make_trap(Shape shape, double s) {
  if (!(s >= 1.0)) {
    throw std::domain_error("make_trap: anisotropy must satisfy s >= 1, got s = " +
                            std::to_string(s));
  }
  TrapSpec trap;
  trap.shape = shape;
  trap.s = s;
  switch (shape) {
    case Shape::Isotropic:
      if (s != 1.0) {
        throw std::domain_error("make_trap: an isotropic trap requires s = 1, got s = " +
                                std::to_string(s));
      }
      trap.spacings = {1.0, 1.0, 1.0};
      break;
    case Shape::Disk:
      trap.spacings = {1.0, 1.0, s};
      break;
    case Shape::Cigar:
      trap.spacings = {s, s, 1.0};
      break;
  }
  return trap;
}

double geometric_mean_spacing(const TrapSpec& trap) {
  return std::cbrt(trap.spacings[0] * trap.spacings[1] * trap.spacings[2]);
}

double arithmetic_mean_spacing(const TrapSpec& trap) {
  return (trap.spacings[0] + trap.spacings[1] + trap.spacings[2]) / 3.0;
}

double shape_exponent(Shape shape) {
  switch (shape) {
    case Shape::Isotropic: return 0.0;
    case Shape::Disk: return 1.0 / 3.0;
    case Shape::Cigar: return 2.0 / 3.0;
  }
  throw std::invalid_argument("shape_exponent: unknown shape");
}

const char* to_string(Shape shape) {
  switch (shape) {
    case Shape::Isotropic: return "isotropic";
    case Shape::Disk: return "disk";
    case Shape::Cigar: return "cigar";
  }
  throw std::invalid_argument("to_string: unknown shape");
}

Shape shape_from_string(std::string_view name) {
  if (name == "isotropic") return Shape::Isotropic;
  if (name == "disk") return Shape::Disk;
  if (name == "cigar") return Shape::Cigar;
  throw std::invalid_argument("unknown trap shape '" + std::string(name) +
                              "' (expected isotropic, disk, or cigar)");
}

}  // namespace bec
