#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "bec/semiclassical.hpp"
#include "bec/trap.hpp"
#include "bec/validity.hpp"

using bec::Shape;
using bec::TrapSpec;
using bec::ValidityReport;

namespace {

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

TEST_CASE("minimum atom number at reference settings") {
  // zeta(3) * 20^3 for the isotropic trap at the default threshold.
  CHECK(std::fabs(bec::min_atoms(Shape::Isotropic) - 9616.455225276754) < 1e-8);
  // zeta(3) * 10^3 when the threshold is relaxed to 10.
  CHECK(std::fabs(bec::min_atoms(Shape::Isotropic, 1.0, 10.0) - 1202.0569031595943) < 1e-9);
  // Disk at s = 2: the spacing ratio d_max/gm = 2^(2/3) cubes to 4.
  CHECK(rel_diff(bec::min_atoms(Shape::Disk, 2.0), 4.0 * 9616.455225276754) < 1e-12);
}

TEST_CASE("maximum anisotropy at reference settings") {
  CHECK(rel_diff(bec::max_anisotropy(Shape::Disk, 1e5), 3.2247235784263499) < 1e-9);
  CHECK(rel_diff(bec::max_anisotropy(Shape::Cigar, 1e5), 10.398842157258843) < 1e-9);
  // N = 8000 zeta(3) puts the isotropic criterion exactly at margin 1, so the
  // admissible anisotropy collapses to 1 for every shape.
  const double n_edge = 8000.0 * 1.2020569031595943;
  CHECK(rel_diff(bec::max_anisotropy(Shape::Disk, n_edge), 1.0) < 1e-12);
  CHECK(rel_diff(bec::max_anisotropy(Shape::Cigar, n_edge), 1.0) < 1e-12);
}

TEST_CASE("min_atoms and max_anisotropy invert each other") {
  for (Shape shape : {Shape::Disk, Shape::Cigar}) {
    for (double s : {1.0, 2.0, 3.2, 10.4}) {
      const double n = bec::min_atoms(shape, s);
      CHECK(rel_diff(bec::max_anisotropy(shape, n), s) < 1e-10);
    }
  }
}

TEST_CASE("the three formulations of the criterion agree everywhere") {
  for (Shape shape : {Shape::Disk, Shape::Cigar}) {
    for (int i = 0; i < 20; ++i) {
      const double s = 1.0 + 0.6 * i;
      const TrapSpec trap = bec::make_trap(shape, s);
      for (int k = 0; k < 20; ++k) {
        const double n = std::pow(10.0, 2.0 + 0.25 * k);
        const ValidityReport report = bec::check_validity(trap, n);
        CHECK(report.valid == (report.margin > 1.0));
        CHECK(report.valid == (n > report.n_min));
        CHECK(report.valid == (s < report.s_max));
        CHECK(rel_diff(report.criterion_lhs, bec::tc0(trap, n)) < 1e-14);
      }
    }
  }
}

TEST_CASE("validity verdicts at representative points") {
  const TrapSpec iso = bec::make_trap(Shape::Isotropic);
  CHECK(bec::check_validity(iso, 1e4).valid);
  CHECK_FALSE(bec::check_validity(iso, 100.0).valid);

  // Exactly at N = zeta(3) * threshold^3 the margin is 1 up to rounding.
  const ValidityReport edge = bec::check_validity(iso, bec::min_atoms(Shape::Isotropic));
  CHECK(std::fabs(edge.margin - 1.0) < 1e-12);

  // A strongly flattened disk needs far more atoms than an isotropic trap.
  CHECK(bec::check_validity(bec::make_trap(Shape::Disk, 30.0), 1e5).margin < 1.0);
  CHECK(bec::check_validity(bec::make_trap(Shape::Disk, 30.0), 1e9).margin > 1.0);
}

TEST_CASE("margins respond monotonically to N and s") {
  std::mt19937 rng(42u);
  std::uniform_real_distribution<double> sdist(1.0, 20.0);
  std::uniform_real_distribution<double> ndist(2.0, 8.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Shape shape = trial % 2 == 0 ? Shape::Disk : Shape::Cigar;
    double s1 = sdist(rng), s2 = sdist(rng);
    if (s1 > s2) std::swap(s1, s2);
    double n1 = std::pow(10.0, ndist(rng)), n2 = std::pow(10.0, ndist(rng));
    if (n1 > n2) std::swap(n1, n2);
    const TrapSpec narrow = bec::make_trap(shape, s1);
    const TrapSpec wide = bec::make_trap(shape, s2);
    if (n2 / n1 > 1.0 + 1e-9) {
      CHECK(bec::check_validity(narrow, n1).margin < bec::check_validity(narrow, n2).margin);
      CHECK(bec::max_anisotropy(shape, n1) < bec::max_anisotropy(shape, n2));
    }
    if (s2 / s1 > 1.0 + 1e-9) {
      CHECK(bec::check_validity(wide, n1).margin < bec::check_validity(narrow, n1).margin);
      CHECK(bec::min_atoms(shape, s1) < bec::min_atoms(shape, s2));
    }
  }
}

TEST_CASE("validity domain errors") {
  const TrapSpec iso = bec::make_trap(Shape::Isotropic);
  CHECK_THROWS_AS(bec::check_validity(iso, 1e4, 0.0), std::domain_error);
  CHECK_THROWS_AS(bec::check_validity(iso, 1e4, -5.0), std::domain_error);
  CHECK_THROWS_AS(bec::check_validity(iso, 0.0), std::domain_error);
  CHECK_THROWS_AS(bec::min_atoms(Shape::Disk, 2.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(bec::min_atoms(Shape::Disk, 0.5), std::domain_error);
  CHECK_THROWS_AS(bec::max_anisotropy(Shape::Disk, 0.0), std::domain_error);
  CHECK_THROWS_AS(bec::max_anisotropy(Shape::Disk, 1e5, 0.0), std::domain_error);
}
