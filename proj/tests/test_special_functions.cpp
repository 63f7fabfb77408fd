#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "bec/errors.hpp"
#include "bec/special_functions.hpp"

using bec::SeriesResult;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct TailEstimate {
  double value = 0.0;
  double half_width = 0.0;  // truncation uncertainty of this estimate itself
};

// Re-evaluates the zeta estimator (compensated partial sum plus midpoint tail
// bracket) at an arbitrary term count, independent of the library's stopping
// logic.
TailEstimate zeta_estimate(double s, std::int64_t terms) {
  double partial = 0.0;
  double comp = 0.0;
  for (std::int64_t j = 1; j <= terms; ++j) {
    const double y = std::pow(static_cast<double>(j), -s) - comp;
    const double next = partial + y;
    comp = (next - partial) - y;
    partial = next;
  }
  const double upper = std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
  const double lower = std::pow(static_cast<double>(terms + 1), 1.0 - s) / (s - 1.0);
  return {partial + 0.5 * (upper + lower), 0.5 * (upper - lower)};
}

TailEstimate polylog_partial(double s, double z, std::int64_t terms) {
  double sum = 0.0;
  double comp = 0.0;
  double zpow = 1.0;
  for (std::int64_t j = 1; j <= terms; ++j) {
    zpow *= z;
    const double y = zpow * std::pow(static_cast<double>(j), -s) - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }
  // Geometric bound on everything dropped: sum_{k>terms} z^k k^-s
  //   <= z^(terms+1) (terms+1)^-s / (1 - z).
  const double tail =
      zpow * z * std::pow(static_cast<double>(terms + 1), -s) / (1.0 - z);
  return {sum, tail};
}

}  // namespace

TEST_CASE("zeta matches closed forms and reference values") {
  CHECK(std::fabs(bec::zeta(2.0).value - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::fabs(bec::zeta(3.0).value - 1.2020569031595943) < 1e-12);
  CHECK(std::fabs(bec::zeta(4.0).value - 1.0823232337111382) < 1e-12);
}

TEST_CASE("zeta rejects the divergent region") {
  CHECK_THROWS_AS(bec::zeta(1.0), std::domain_error);
  CHECK_THROWS_AS(bec::zeta(0.5), std::domain_error);
  CHECK_THROWS_AS(bec::zeta(-2.0), std::domain_error);
}

TEST_CASE("zeta reports an honest truncation bound") {
  for (double s : {2.0, 2.5, 3.0, 4.0}) {
    const SeriesResult r = bec::zeta(s);
    CHECK(r.bound >= 0.0);
    CHECK(r.terms_used >= 1);
    CHECK(r.bound <= 1e-12 * std::max(std::fabs(r.value), 1.0));
    // The refined estimate carries its own (100x smaller) truncation window
    // plus a few ulp of rounding; both sides' windows must overlap.
    const TailEstimate refined = zeta_estimate(s, r.terms_used * 10);
    CHECK(std::fabs(refined.value - r.value) <= r.bound + refined.half_width + 1e-14);
  }
}

TEST_CASE("polylog special arguments") {
  const SeriesResult at_zero = bec::polylog(3.0, 0.0);
  CHECK(at_zero.value == 0.0);
  CHECK(at_zero.terms_used >= 1);
  CHECK(at_zero.bound == 0.0);
  // Frozen from a brute-force partial sum over 1e6 terms.
  CHECK(std::fabs(bec::polylog(3.0, 0.5).value - 0.5372131936080403) < 1e-12);
  CHECK(std::fabs(bec::polylog(3.0, 0.5).value - polylog_partial(3.0, 0.5, 200).value) < 1e-12);
}

TEST_CASE("polylog at unit argument equals zeta") {
  for (double s : {2.0, 3.0, 4.0}) {
    const SeriesResult li = bec::polylog(s, 1.0);
    const SeriesResult ze = bec::zeta(s);
    CHECK(std::fabs(li.value - ze.value) <= li.bound + ze.bound);
  }
}

TEST_CASE("polylog rejects arguments outside its domain") {
  CHECK_THROWS_AS(bec::polylog(1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(bec::polylog(3.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(bec::polylog(3.0, 1.0001), std::domain_error);
}

TEST_CASE("polylog reports an honest truncation bound") {
  for (double z : {0.1, 0.5, 0.9, 0.999}) {
    const SeriesResult r = bec::polylog(2.0, z);
    CHECK(r.bound >= 0.0);
    CHECK(r.terms_used >= 1);
    CHECK(r.bound <= 1e-12 * std::max(std::fabs(r.value), 1.0));
    // Allow the refined sum's own geometric tail plus a few ulp of rounding
    // on either side; the bound itself must still carry the comparison.
    const TailEstimate refined = polylog_partial(2.0, z, r.terms_used * 10);
    CHECK(std::fabs(refined.value - r.value) <=
          r.bound + refined.half_width + 8.0 * 1.1e-16 * std::max(std::fabs(r.value), 1.0));
  }
}

TEST_CASE("polylog increases strictly in its argument") {
  std::mt19937 rng(20260823u);
  std::uniform_real_distribution<double> unit(0.0, 0.999);
  const double orders[] = {2.0, 2.5, 3.0, 4.0};
  for (int trial = 0; trial < 200; ++trial) {
    const double s = orders[rng() % 4];
    double z1 = unit(rng);
    double z2 = unit(rng);
    if (z1 > z2) std::swap(z1, z2);
    if (z2 - z1 < 1e-6) continue;
    const SeriesResult a = bec::polylog(s, z1);
    const SeriesResult b = bec::polylog(s, z2);
    const double gap = b.value - a.value;
    CHECK(a.value < b.value);
    CHECK(a.bound + b.bound < 0.5 * gap);
  }
}
