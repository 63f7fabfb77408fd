#include "bec/grand_canonical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "bec/errors.hpp"
#include "bec/semiclassical.hpp"

namespace bec {

namespace {

constexpr double kMaxAtoms = 1e12;
constexpr std::int64_t kSeriesGuard = 10'000'000;

// Logit bounds for the fugacity search: n0 = e^u, so the upper cap admits
// ground-state occupations up to 1e15, comfortably above the N <= 1e12 limit.
const double kLogitMax = std::log(1e15);
constexpr double kLogitMin = -700.0;

void check_z_t(double z, double t, const char* where) {
  if (!(z > 0.0 && z < 1.0)) {
    throw std::domain_error(std::string(where) + ": fugacity must lie strictly inside (0, 1), got z = " +
                            std::to_string(z));
  }
  if (!(t > 0.0)) {
    throw std::domain_error(std::string(where) + ": temperature must be positive, got t = " +
                            std::to_string(t));
  }
}

// ln z expressed through the logit u = ln(z / (1 - z)); stays accurate when z
// is within a few ulp of 1, where ln(z) computed from a rounded z would lose
// all precision.
double log_z_from_logit(double u) {
  return u >= 0.0 ? -std::log1p(std::exp(-u)) : u - std::log1p(std::exp(u));
}

double z_from_logit(double u) {
  return u >= 0.0 ? 1.0 / (1.0 + std::exp(-u)) : std::exp(u) / (1.0 + std::exp(u));
}

// Compensated accumulator for long sums of positive terms.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Excited-level occupation sum_{j>=1} e^{j ln z} [prod_i (1 - e^{-j d_i/t})^{-1} - 1].
// Every factor of the product is >= 1, so each term is nonnegative and the
// sequence decays at least geometrically with ratio z * exp(-min_i d_i / t).
double excited_occupation(const std::array<double, 3>& spacings, double log_z, double t) {
  const double a0 = spacings[0] / t;
  const double a1 = spacings[1] / t;
  const double a2 = spacings[2] / t;
  double total = 0.0;
  for (std::int64_t j = 1; j <= kSeriesGuard; ++j) {
    const double x = static_cast<double>(j);
    double prod = 1.0;
    prod /= -std::expm1(-x * a0);
    prod /= -std::expm1(-x * a1);
    prod /= -std::expm1(-x * a2);
    const double term = std::exp(x * log_z) * (prod - 1.0);
    total += term;
    if (term < 1e-15 * total || term == 0.0) {
      return total;
    }
  }
  throw convergence_error("occupation_sum_series: excited-level series did not converge within " +
                          std::to_string(kSeriesGuard) + " terms (t = " + std::to_string(t) + ")");
}

double total_occupation_logit(const TrapSpec& trap, double u, double t) {
  return std::exp(u) + excited_occupation(trap.spacings, log_z_from_logit(u), t);
}

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Refines a root of a continuous, strictly increasing f with f(lo) <= 0 <= f(hi)
// until |f| <= ftol.  Secant steps (confined to the bracket) alternate with
// bisection, so the bracket provably halves at least every other iteration.
template <typename F>
RootResult refine_root(F&& f, double lo, double flo, double hi, double fhi, double ftol,
                       int budget, const char* where) {
  if (std::abs(flo) <= ftol) return {lo, flo, 0};
  if (std::abs(fhi) <= ftol) return {hi, fhi, 0};
  double x0 = lo, f0 = flo;
  double x1 = hi, f1 = fhi;
  for (int it = 1; it <= budget; ++it) {
    double cand = 0.5 * (lo + hi);
    if (it % 2 == 1) {
      const double df = f1 - f0;
      if (df != 0.0 && std::isfinite(df)) {
        const double sec = x1 - f1 * (x1 - x0) / df;
        if (sec > lo && sec < hi) cand = sec;
      }
    }
    const double fc = f(cand);
    x0 = x1;
    f0 = f1;
    x1 = cand;
    f1 = fc;
    if (std::abs(fc) <= ftol) return {cand, fc, it};
    if (fc < 0.0) {
      lo = cand;
    } else {
      hi = cand;
    }
  }
  throw convergence_error(std::string(where) + ": root refinement did not reach tolerance " +
                          std::to_string(ftol) + " within " + std::to_string(budget) +
                          " iterations");
}

}  // namespace

double occupation_sum_direct(const TrapSpec& trap, double z, double t, double cutoff) {
  check_z_t(z, t, "occupation_sum_direct");
  if (!(cutoff > 0.0)) {
    throw std::domain_error("occupation_sum_direct: cutoff must be positive, got " +
                            std::to_string(cutoff));
  }
  const double emax = cutoff * t;
  KahanSum total;
  if (trap.shape == Shape::Isotropic) {
    // Unit spacing on every axis: levels at E = n carry shell degeneracy
    // (n+1)(n+2)/2.
    const auto nmax = static_cast<std::int64_t>(emax);
    for (std::int64_t n = 0; n <= nmax; ++n) {
      const double g = 0.5 * static_cast<double>(n + 1) * static_cast<double>(n + 2);
      total.add(g * z / (std::exp(static_cast<double>(n) / t) - z));
    }
    return total.sum;
  }
  std::array<double, 3> d = trap.spacings;
  std::sort(d.begin(), d.end(), std::greater<>());  // cheapest axis innermost
  const double grow = std::exp(d[2] / t);
  for (std::int64_t n1 = 0; static_cast<double>(n1) * d[0] <= emax; ++n1) {
    const double e1 = static_cast<double>(n1) * d[0];
    for (std::int64_t n2 = 0; e1 + static_cast<double>(n2) * d[1] <= emax; ++n2) {
      const double e12 = e1 + static_cast<double>(n2) * d[1];
      const auto n3max = static_cast<std::int64_t>((emax - e12) / d[2]);
      double boltz = std::exp(e12 / t);  // e^{E/t}, advanced one level at a time
      for (std::int64_t n3 = 0; n3 <= n3max; ++n3) {
        total.add(z / (boltz - z));
        boltz *= grow;
      }
    }
  }
  return total.sum;
}

double occupation_sum_series(const TrapSpec& trap, double z, double t) {
  check_z_t(z, t, "occupation_sum_series");
  return z / (1.0 - z) + excited_occupation(trap.spacings, std::log(z), t);
}

GasState solve_fugacity(const TrapSpec& trap, double n_atoms, double t) {
  if (!(n_atoms > 0.0)) {
    throw std::domain_error("solve_fugacity: atom number must be positive, got N = " +
                            std::to_string(n_atoms));
  }
  if (n_atoms > kMaxAtoms) {
    throw std::domain_error("solve_fugacity: atom numbers above 1e12 are not supported, got N = " +
                            std::to_string(n_atoms));
  }
  if (!(t > 0.0)) {
    throw std::domain_error("solve_fugacity: temperature must be positive, got t = " +
                            std::to_string(t));
  }

  const double log_n = std::log(n_atoms);
  auto h = [&](double u) { return std::log(total_occupation_logit(trap, u, t)) - log_n; };

  double lo = kLogitMin;
  double hi = kLogitMax;
  double hlo = h(lo);
  while (hlo > 0.0 && lo > -741.0) {  // vanishing atom numbers push the root further down
    lo -= 20.0;
    hlo = h(lo);
  }
  const double hhi = h(hi);
  if (hlo > 0.0 || hhi < 0.0) {
    throw bracketing_error("solve_fugacity: could not bracket the fugacity for N = " +
                           std::to_string(n_atoms) + " at t = " + std::to_string(t));
  }

  const RootResult root = refine_root(h, lo, hlo, hi, hhi, 1e-11, 200, "solve_fugacity");

  GasState state;
  state.trap = trap;
  state.n_atoms = n_atoms;
  state.t = t;
  state.n0 = std::exp(root.x);
  state.z = z_from_logit(root.x);
  // The solve lands within 1e-11 of ln N, but a last-ulp overshoot combined
  // with a fully frozen-out thermal cloud could round n0/N up to exactly 1;
  // the fraction is defined on [0, 1), so cap it one ulp below.
  state.f0 = std::min(state.n0 / n_atoms, 1.0 - std::numeric_limits<double>::epsilon() / 2.0);
  return state;
}

double condensate_fraction(const TrapSpec& trap, double n_atoms, double t) {
  return solve_fugacity(trap, n_atoms, t).f0;
}

ThresholdResult threshold_temperature(const TrapSpec& trap, double n_atoms,
                                      double target_fraction) {
  if (!(target_fraction > 0.0 && target_fraction < 1.0)) {
    throw std::domain_error(
        "threshold_temperature: target fraction must lie strictly inside (0, 1), got " +
        std::to_string(target_fraction));
  }
  const double scale = tc0(trap, n_atoms);
  const double log_target = std::log(target_fraction);
  // Negated so the objective increases with t, as refine_root expects.
  auto g = [&](double t) {
    return log_target - std::log(solve_fugacity(trap, n_atoms, t).f0);
  };

  double lo = 0.1 * scale;
  double hi = 2.0 * scale;
  double glo = g(lo);
  double ghi = g(hi);
  int expansions = 0;
  while (glo > 0.0) {  // fraction at lo is already below target: move the window down
    if (++expansions > 60) {
      throw bracketing_error("threshold_temperature: no bracket below t = " + std::to_string(lo) +
                             " for target fraction " + std::to_string(target_fraction));
    }
    hi = lo;
    ghi = glo;
    lo *= 0.5;
    glo = g(lo);
  }
  expansions = 0;
  while (ghi < 0.0) {  // fraction at hi still above target: move the window up
    if (++expansions > 60) {
      throw bracketing_error("threshold_temperature: no bracket above t = " + std::to_string(hi) +
                             " for target fraction " + std::to_string(target_fraction));
    }
    lo = hi;
    glo = ghi;
    hi *= 2.0;
    ghi = g(hi);
  }

  const RootResult root =
      refine_root(g, lo, glo, hi, ghi, 5e-7, 200, "threshold_temperature");

  ThresholdResult result;
  result.t_threshold = root.x;
  result.target_fraction = target_fraction;
  result.iterations = root.iterations;
  // root.fx = ln(target / f0), so f0 = target * e^{-fx}.
  result.residual = std::abs(std::expm1(-root.fx)) * target_fraction;
  return result;
}

}  // namespace bec
