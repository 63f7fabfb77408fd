#include "bec/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "bec/grand_canonical.hpp"
#include "bec/semiclassical.hpp"
#include "bec/validity.hpp"

namespace bec {

namespace {

// Runs work(0..count-1) on a small thread pool; the first failing index is
// reported with its label so the caller can tell which grid point broke.
void parallel_rows(std::size_t count, const std::function<void(std::size_t)>& work,
                   const std::function<std::string(std::size_t)>& label) {
  if (count == 0) return;
  std::vector<std::string> errors(count);
  std::vector<char> failed(count, 0);
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        work(i);
      } catch (const std::exception& e) {
        failed[i] = 1;
        errors[i] = e.what();
      } catch (...) {
        failed[i] = 1;
        errors[i] = "unknown error";
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& thread : pool) thread.join();
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (failed[i]) {
      throw std::runtime_error(label(i) + ": " + errors[i]);
    }
  }
}

// Evenly spaced grid hitting both endpoints exactly.
std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i == points - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return grid;
}

}  // namespace

int worker_count() {
  unsigned hardware = std::thread::hardware_concurrency();
  if (hardware == 0) hardware = 1;
  if (const char* env = std::getenv("BEC_NUM_WORKERS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) {
      return static_cast<int>(std::min<long>(parsed, hardware));
    }
  }
  return static_cast<int>(hardware);
}

SweepTable cmd_fig1(const Fig1Params& params) {
  if (!(params.n_min >= 100.0)) {
    throw std::domain_error("fig1: n_min must be at least 100, got " +
                            std::to_string(params.n_min));
  }
  if (!(params.n_max > params.n_min)) {
    throw std::domain_error("fig1: n_max must exceed n_min");
  }
  if (params.points < 2) {
    throw std::domain_error("fig1: need at least 2 points, got " + std::to_string(params.points));
  }
  if (params.n_min < 1e4 && !params.unsafe) {
    throw std::domain_error(
        "fig1: n_min below 1e4 leaves the regime where the rescaled curves are "
        "meaningful; pass --unsafe to scan it anyway");
  }

  const TrapSpec trap = make_trap(Shape::Isotropic);
  const auto log_grid = linspace(std::log10(params.n_min), std::log10(params.n_max), params.points);

  SweepTable table;
  table.metadata["command"] = "fig1";
  table.metadata["shape"] = to_string(trap.shape);
  table.metadata["n_min"] = format_real(params.n_min);
  table.metadata["n_max"] = format_real(params.n_max);
  table.metadata["points"] = std::to_string(params.points);
  table.metadata["unsafe"] = params.unsafe ? "1" : "0";
  table.metadata["tool"] = "bec";
  table.metadata["tool_version"] = kToolVersion;
  table.columns = {{"log10_n", "-"},
                   {"tc0_rescaled", "-"},
                   {"tc_first_order_over_tc0", "-"},
                   {"t_0.1pct_over_tc0", "-"},
                   {"t_0.5pct_over_tc0", "-"},
                   {"t_1pct_over_tc0", "-"}};
  table.rows.assign(log_grid.size(), {});

  parallel_rows(
      log_grid.size(),
      [&](std::size_t i) {
        const double n = std::pow(10.0, log_grid[i]);
        const double scale = tc0(trap, n);
        const double first_order = tc_first_order(trap, n).t_c_first_order / scale;
        const double t01 = threshold_temperature(trap, n, 0.001).t_threshold / scale;
        const double t05 = threshold_temperature(trap, n, 0.005).t_threshold / scale;
        const double t1 = threshold_temperature(trap, n, 0.01).t_threshold / scale;
        table.rows[i] = {log_grid[i], 1.0, first_order, t01, t05, t1};
      },
      [&](std::size_t i) {
        return "fig1: grid point " + std::to_string(i) +
               " (N = " + format_real(std::pow(10.0, log_grid[i])) + ")";
      });
  return table;
}

SweepTable cmd_fig2(const Fig2Params& params) {
  if (params.n_values.empty()) {
    throw std::domain_error("fig2: need at least one atom number");
  }
  for (double n : params.n_values) {
    if (!(n >= 100.0)) {
      throw std::domain_error("fig2: every atom number must be at least 100, got " +
                              format_real(n));
    }
  }
  if (params.t_points < 10) {
    throw std::domain_error("fig2: need at least 10 temperature points, got " +
                            std::to_string(params.t_points));
  }

  const TrapSpec trap = make_trap(Shape::Isotropic);
  const auto tau_grid = linspace(0.2, 1.3, params.t_points);
  const std::size_t n_count = params.n_values.size();
  const std::size_t t_count = tau_grid.size();

  SweepTable table;
  table.metadata["command"] = "fig2";
  table.metadata["shape"] = to_string(trap.shape);
  table.metadata["t_points"] = std::to_string(params.t_points);
  table.metadata["t_min_over_tc0"] = format_real(tau_grid.front());
  table.metadata["t_max_over_tc0"] = format_real(tau_grid.back());
  table.metadata["tool"] = "bec";
  table.metadata["tool_version"] = kToolVersion;
  table.columns.push_back({"t_over_tc0", "-"});
  for (double n : params.n_values) {
    table.columns.push_back({"f0_N" + format_real(n), "-"});
    const double marker = tc_first_order(trap, n).t_c_first_order / tc0(trap, n);
    table.metadata["tc_first_order_over_tc0_N" + format_real(n)] = format_real(marker);
  }
  table.columns.push_back({"lda_fraction", "-"});
  table.columns.push_back({"window_low", "-"});
  table.columns.push_back({"window_high", "-"});

  // One solve per (N, tau) pair, flattened for the pool.
  std::vector<std::vector<double>> fractions(n_count, std::vector<double>(t_count, 0.0));
  parallel_rows(
      n_count * t_count,
      [&](std::size_t task) {
        const std::size_t c = task / t_count;
        const std::size_t r = task % t_count;
        const double n = params.n_values[c];
        const double t = tau_grid[r] * tc0(trap, n);
        fractions[c][r] = condensate_fraction(trap, n, t);
      },
      [&](std::size_t task) {
        const std::size_t c = task / t_count;
        const std::size_t r = task % t_count;
        return "fig2: grid point (N = " + format_real(params.n_values[c]) +
               ", t/tc0 = " + format_real(tau_grid[r]) + ")";
      });

  table.rows.reserve(t_count);
  for (std::size_t r = 0; r < t_count; ++r) {
    std::vector<double> row;
    row.reserve(n_count + 4);
    row.push_back(tau_grid[r]);
    for (std::size_t c = 0; c < n_count; ++c) row.push_back(fractions[c][r]);
    row.push_back(lda_condensate_fraction_limit(tau_grid[r]));
    row.push_back(0.001);
    row.push_back(0.01);
    table.rows.push_back(std::move(row));
  }
  return table;
}

SweepTable cmd_anisoscan(const AnisoScanParams& params) {
  if (params.shape == Shape::Isotropic) {
    throw std::domain_error("anisoscan: shape must be disk or cigar");
  }
  if (!(params.n_atoms >= 100.0)) {
    throw std::domain_error("anisoscan: atom number must be at least 100, got " +
                            format_real(params.n_atoms));
  }
  if (!(params.s_min >= 1.0)) {
    throw std::domain_error("anisoscan: s_min must be at least 1, got " +
                            format_real(params.s_min));
  }
  if (params.points < 2) {
    throw std::domain_error("anisoscan: need at least 2 points, got " +
                            std::to_string(params.points));
  }
  const double s_limit = max_anisotropy(params.shape, params.n_atoms);
  const double s_max = params.s_max > 0.0 ? params.s_max : 2.0 * s_limit;
  if (!(s_max > params.s_min)) {
    throw std::domain_error("anisoscan: s_max must exceed s_min");
  }

  const auto s_grid = linspace(params.s_min, s_max, params.points);

  SweepTable table;
  table.metadata["command"] = "anisoscan";
  table.metadata["shape"] = to_string(params.shape);
  table.metadata["n_atoms"] = format_real(params.n_atoms);
  table.metadata["s_min"] = format_real(params.s_min);
  table.metadata["s_max"] = format_real(s_max);
  table.metadata["points"] = std::to_string(params.points);
  table.metadata["s_limit"] = format_real(s_limit);
  table.metadata["continuum_threshold"] = format_real(kDefaultContinuumThreshold);
  table.metadata["tool"] = "bec";
  table.metadata["tool_version"] = kToolVersion;
  table.columns = {{"s", "-"},
                   {"t_0.1pct", "hbar*omega/kB"},
                   {"tc_first_order", "hbar*omega/kB"},
                   {"rel_deviation", "-"},
                   {"within_validity", "-"}};
  table.rows.assign(s_grid.size(), {});

  parallel_rows(
      s_grid.size(),
      [&](std::size_t i) {
        const TrapSpec trap = make_trap(params.shape, s_grid[i]);
        const double t01 = threshold_temperature(trap, params.n_atoms, 0.001).t_threshold;
        const double first_order = tc_first_order(trap, params.n_atoms).t_c_first_order;
        const double deviation = std::abs(first_order - t01) / t01;
        table.rows[i] = {s_grid[i], t01, first_order, deviation,
                         s_grid[i] < s_limit ? 1.0 : 0.0};
      },
      [&](std::size_t i) {
        return "anisoscan: grid point " + std::to_string(i) + " (s = " + format_real(s_grid[i]) +
               ")";
      });
  return table;
}

}  // namespace bec
