#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bec/commands.hpp"
#include "bec/grand_canonical.hpp"
#include "bec/semiclassical.hpp"
#include "bec/sweep.hpp"
#include "bec/trap.hpp"
#include "bec/validity.hpp"

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string out;
  std::string overlay;
};

void add_table_output_options(CLI::App* cmd, OutputOptions& opt) {
  cmd->fallthrough();  // lets parent options like --config follow the subcommand
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "Write to PATH instead of stdout");
  cmd->add_option("--overlay", opt.overlay,
                  "CSV file whose columns are joined onto the result by first column");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Output is fully rendered in memory before the destination is opened, so a
// failed evaluation never leaves a truncated file behind.
void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

void emit_table(bec::SweepTable table, const OutputOptions& opt) {
  if (!opt.overlay.empty()) {
    table = bec::merge_overlay(table, bec::read_csv(read_file(opt.overlay)));
  }
  write_output(opt.format == "json" ? bec::to_json(table) : bec::to_csv(table), opt.out);
}

struct ReportOptions {
  std::string format = "text";
  std::string out;
};

void add_report_output_options(CLI::App* cmd, ReportOptions& opt) {
  cmd->fallthrough();  // lets parent options like --config follow the subcommand
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "Write to PATH instead of stdout");
}

std::string trap_label(const bec::TrapSpec& trap) {
  std::string label = bec::to_string(trap.shape);
  if (trap.shape != bec::Shape::Isotropic) {
    label += " (s = " + bec::format_real(trap.s) + ")";
  }
  return label;
}

std::string render_validity(const bec::TrapSpec& trap, double n_atoms, double threshold,
                            const bec::ValidityReport& report, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["shape"] = bec::to_string(trap.shape);
    doc["s"] = trap.s;
    doc["n_atoms"] = n_atoms;
    doc["threshold"] = threshold;
    doc["tc0"] = report.criterion_lhs;
    doc["continuum_scale"] = report.criterion_rhs;
    doc["margin"] = report.margin;
    doc["n_min"] = report.n_min;
    doc["s_max"] = report.s_max;
    doc["valid"] = report.valid;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "trap: " << trap_label(trap) << "\n";
  os << "atoms: " << bec::format_real(n_atoms) << "\n";
  os << "tc0: " << bec::format_real(report.criterion_lhs) << " (units of hbar*omega/kB)\n";
  os << "continuum scale: " << bec::format_real(report.criterion_rhs) << " ("
     << bec::format_real(threshold) << " x largest level spacing)\n";
  os << "margin: " << bec::format_real(report.margin) << "\n";
  os << "min atoms for this trap: " << bec::format_real(report.n_min) << "\n";
  os << "max anisotropy for this N: " << bec::format_real(report.s_max) << "\n";
  os << "verdict: " << (report.valid ? "VALID" : "INVALID") << "\n";
  return os.str();
}

std::string render_state(const bec::GasState& state, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["shape"] = bec::to_string(state.trap.shape);
    doc["s"] = state.trap.s;
    doc["n_atoms"] = state.n_atoms;
    doc["t"] = state.t;
    doc["z"] = state.z;
    doc["n0"] = state.n0;
    doc["f0"] = state.f0;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "trap: " << trap_label(state.trap) << "\n";
  os << "atoms: " << bec::format_real(state.n_atoms) << "\n";
  os << "t: " << bec::format_real(state.t) << " (units of hbar*omega/kB)\n";
  os << "fugacity z: " << bec::format_real(state.z) << "\n";
  os << "ground occupation n0: " << bec::format_real(state.n0) << "\n";
  os << "condensate fraction f0: " << bec::format_real(state.f0) << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Condensation temperatures of a finite ideal Bose gas in 3D harmonic traps"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML-style config file");
  app.set_version_flag("--version", std::string("bec ") + bec::kToolVersion);

  bec::Fig1Params fig1_params;
  OutputOptions fig1_output;
  auto* fig1 = app.add_subcommand(
      "fig1", "Characteristic temperatures vs atom number, isotropic trap, rescaled by tc0");
  fig1->add_option("--n-min", fig1_params.n_min, "Smallest atom number")->capture_default_str();
  fig1->add_option("--n-max", fig1_params.n_max, "Largest atom number")->capture_default_str();
  fig1->add_option("--points", fig1_params.points, "Number of log-spaced atom numbers")
      ->capture_default_str();
  fig1->add_flag("--unsafe", fig1_params.unsafe, "Allow n_min below 1e4");
  add_table_output_options(fig1, fig1_output);
  fig1->callback([&] { emit_table(bec::cmd_fig1(fig1_params), fig1_output); });

  bec::Fig2Params fig2_params;
  OutputOptions fig2_output;
  auto* fig2 = app.add_subcommand(
      "fig2", "Condensate fraction vs t/tc0 for several atom numbers, isotropic trap");
  fig2->add_option("--n", fig2_params.n_values, "Atom numbers (repeatable)")
      ->capture_default_str();
  fig2->add_option("--points", fig2_params.t_points, "Number of temperature points")
      ->capture_default_str();
  add_table_output_options(fig2, fig2_output);
  fig2->callback([&] { emit_table(bec::cmd_fig2(fig2_params), fig2_output); });

  bec::AnisoScanParams aniso_params;
  OutputOptions aniso_output;
  std::string aniso_shape = "disk";
  auto* aniso = app.add_subcommand(
      "anisoscan", "First-order vs exact 0.1% threshold temperature across anisotropy");
  aniso->add_option("--shape", aniso_shape, "Trap family")
      ->check(CLI::IsMember({"disk", "cigar"}))
      ->capture_default_str();
  aniso->add_option("--n", aniso_params.n_atoms, "Atom number")->capture_default_str();
  aniso->add_option("--s-min", aniso_params.s_min, "Smallest anisotropy")->capture_default_str();
  aniso->add_option("--s-max", aniso_params.s_max,
                    "Largest anisotropy (default: twice the validity limit)");
  aniso->add_option("--points", aniso_params.points, "Number of anisotropy points")
      ->capture_default_str();
  add_table_output_options(aniso, aniso_output);
  aniso->callback([&] {
    aniso_params.shape = bec::shape_from_string(aniso_shape);
    emit_table(bec::cmd_anisoscan(aniso_params), aniso_output);
  });

  ReportOptions validity_output;
  std::string validity_shape = "isotropic";
  double validity_s = 1.0;
  double validity_n = 0.0;
  double validity_threshold = bec::kDefaultContinuumThreshold;
  auto* validity =
      app.add_subcommand("validity", "Check the continuum criterion for a trap and atom number");
  validity->add_option("--shape", validity_shape, "Trap family")
      ->check(CLI::IsMember({"isotropic", "disk", "cigar"}))
      ->capture_default_str();
  validity->add_option("--s", validity_s, "Anisotropy (>= 1)")->capture_default_str();
  validity->add_option("--n", validity_n, "Atom number")->required();
  validity->add_option("--threshold", validity_threshold, "Continuum separation factor")
      ->capture_default_str();
  add_report_output_options(validity, validity_output);
  validity->callback([&] {
    const bec::TrapSpec trap = bec::make_trap(bec::shape_from_string(validity_shape), validity_s);
    const bec::ValidityReport report = bec::check_validity(trap, validity_n, validity_threshold);
    write_output(render_validity(trap, validity_n, validity_threshold, report,
                                 validity_output.format),
                 validity_output.out);
  });

  ReportOptions solve_output;
  std::string solve_shape = "isotropic";
  double solve_s = 1.0;
  double solve_n = 0.0;
  double solve_t = 0.0;
  auto* solve =
      app.add_subcommand("solve", "Solve the fugacity at fixed atom number and temperature");
  solve->add_option("--shape", solve_shape, "Trap family")
      ->check(CLI::IsMember({"isotropic", "disk", "cigar"}))
      ->capture_default_str();
  solve->add_option("--s", solve_s, "Anisotropy (>= 1)")->capture_default_str();
  solve->add_option("--n", solve_n, "Atom number")->required();
  solve->add_option("--t", solve_t, "Temperature in units of hbar*omega/kB")->required();
  add_report_output_options(solve, solve_output);
  solve->callback([&] {
    const bec::TrapSpec trap = bec::make_trap(bec::shape_from_string(solve_shape), solve_s);
    write_output(render_state(bec::solve_fugacity(trap, solve_n, solve_t), solve_output.format),
                 solve_output.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
