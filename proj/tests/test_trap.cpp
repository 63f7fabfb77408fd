#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "bec/trap.hpp"

using bec::Shape;
using bec::TrapSpec;

namespace {

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

TEST_CASE("make_trap produces the documented spacings") {
  const TrapSpec iso = bec::make_trap(Shape::Isotropic);
  CHECK(iso.spacings[0] == 1.0);
  CHECK(iso.spacings[1] == 1.0);
  CHECK(iso.spacings[2] == 1.0);
  CHECK(iso.s == 1.0);

  const TrapSpec disk = bec::make_trap(Shape::Disk, 8.0);
  CHECK(disk.spacings[0] == 1.0);
  CHECK(disk.spacings[1] == 1.0);
  CHECK(disk.spacings[2] == 8.0);
  CHECK(bec::geometric_mean_spacing(disk) == doctest::Approx(2.0).epsilon(1e-14));

  const TrapSpec cigar = bec::make_trap(Shape::Cigar, 8.0);
  CHECK(cigar.spacings[0] == 8.0);
  CHECK(cigar.spacings[1] == 8.0);
  CHECK(cigar.spacings[2] == 1.0);
  CHECK(bec::geometric_mean_spacing(cigar) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("the loosest axis always has unit spacing") {
  for (double s : {1.0, 1.5, 3.2, 10.4, 100.0}) {
    for (Shape shape : {Shape::Disk, Shape::Cigar}) {
      const TrapSpec trap = bec::make_trap(shape, s);
      const double lowest = std::min({trap.spacings[0], trap.spacings[1], trap.spacings[2]});
      CHECK(lowest == 1.0);
    }
  }
}

TEST_CASE("geometric mean carries the anisotropy prefactor") {
  CHECK(bec::geometric_mean_spacing(bec::make_trap(Shape::Isotropic)) == 1.0);
  CHECK(bec::geometric_mean_spacing(bec::make_trap(Shape::Disk, 27.0)) ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK(rel_diff(bec::geometric_mean_spacing(bec::make_trap(Shape::Cigar, 3.2)),
                 std::pow(3.2, 2.0 / 3.0)) < 1e-14);
  for (double s : {1.0, 2.0, 3.2, 10.4, 100.0}) {
    CHECK(rel_diff(bec::geometric_mean_spacing(bec::make_trap(Shape::Disk, s)),
                   std::pow(s, 1.0 / 3.0)) < 1e-14);
    CHECK(rel_diff(bec::geometric_mean_spacing(bec::make_trap(Shape::Cigar, s)),
                   std::pow(s, 2.0 / 3.0)) < 1e-14);
  }
}

TEST_CASE("arithmetic mean of the spacings") {
  CHECK(bec::arithmetic_mean_spacing(bec::make_trap(Shape::Isotropic)) == 1.0);
  CHECK(bec::arithmetic_mean_spacing(bec::make_trap(Shape::Disk, 4.0)) == 2.0);
  CHECK(bec::arithmetic_mean_spacing(bec::make_trap(Shape::Cigar, 4.0)) == 3.0);
}

TEST_CASE("arithmetic mean dominates geometric mean") {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> aniso(1.0, 100.0);
  CHECK(bec::arithmetic_mean_spacing(bec::make_trap(Shape::Isotropic)) ==
        bec::geometric_mean_spacing(bec::make_trap(Shape::Isotropic)));
  for (int trial = 0; trial < 100; ++trial) {
    const double s = aniso(rng);
    if (s == 1.0) continue;
    for (Shape shape : {Shape::Disk, Shape::Cigar}) {
      const TrapSpec trap = bec::make_trap(shape, s);
      CHECK(bec::arithmetic_mean_spacing(trap) > bec::geometric_mean_spacing(trap));
    }
  }
}

TEST_CASE("shape exponents") {
  CHECK(bec::shape_exponent(Shape::Isotropic) == 0.0);
  CHECK(bec::shape_exponent(Shape::Disk) == doctest::Approx(1.0 / 3.0));
  CHECK(bec::shape_exponent(Shape::Cigar) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("shape names round trip") {
  for (Shape shape : {Shape::Isotropic, Shape::Disk, Shape::Cigar}) {
    CHECK(bec::shape_from_string(bec::to_string(shape)) == shape);
  }
  CHECK_THROWS_AS(bec::shape_from_string("sphere"), std::invalid_argument);
  CHECK_THROWS_AS(bec::shape_from_string("Disk"), std::invalid_argument);
}

TEST_CASE("make_trap rejects invalid parameters") {
  CHECK_THROWS_AS(bec::make_trap(Shape::Disk, 0.5), std::domain_error);
  CHECK_THROWS_AS(bec::make_trap(Shape::Cigar, 0.0), std::domain_error);
  CHECK_THROWS_AS(bec::make_trap(Shape::Cigar, -2.0), std::domain_error);
  CHECK_THROWS_AS(bec::make_trap(Shape::Isotropic, 2.0), std::domain_error);
}
