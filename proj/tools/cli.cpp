#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lzda/analysis.hpp"
#include "lzda/csv.hpp"
#include "lzda/detect.hpp"
#include "lzda/errors.hpp"
#include "lzda/findings.hpp"
#include "lzda/scenario_file.hpp"
#include "lzda/sim.hpp"
#include "lzda/sweep.hpp"

namespace lzda::cli {

namespace {

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Source {
  std::string scenario;
  std::string preset;

  void attach(CLI::App* cmd) {
    auto* s = cmd->add_option("--scenario", scenario, "Scenario file (INI sections [vehicle] [run] [attack] [detector])");
    auto* p = cmd->add_option("--preset", preset, "Built-in scenario: fig3, fig4, fig5, fig6");
    s->excludes(p);
  }

  ScenarioFile load() const {
    if (!preset.empty()) return lzda::preset(preset);
    if (!scenario.empty()) return load_scenario(scenario);
    return ScenarioFile{};
  }
};

const char* yes_no(bool v) { return v ? "yes" : "no"; }

void print_summary(std::ostream& out, const ScenarioFile& f) {
  const LateralModel model = build_model(f.vehicle, f.run.vx);
  const double cond = disruptive_condition(f.vehicle);

  out << "summary across sensor sets (vx = " << fmt(f.run.vx) << " m/s):\n";
  out << "  outputs    condition    threat  disruptive\n";
  auto line = [&](const std::string& outputs, const std::string& condition, const std::string& threat,
                  const std::string& disruptive) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-10s %-12s %-7s %s\n", outputs.c_str(), condition.c_str(), threat.c_str(),
                  disruptive.c_str());
    out << buf;
  };

  const auto yaw = classify(model, OutputCase::YawRate);
  line("r", "-", yes_no(yaw.attack_exists), yes_no(yaw.disruptive));

  const std::string sign = cond > 0.0 ? "aCf-bCr>0" : (cond < 0.0 ? "aCf-bCr<0" : "aCf-bCr=0");
  try {
    const auto accel = classify(model, OutputCase::LateralAccel);
    line("a_y", sign, yes_no(accel.attack_exists), yes_no(accel.disruptive));
    const bool caught = accel_detector_catches_attack(model, f.detector);
    line("a_y, a_x", "-", yes_no(!caught), yes_no(!caught && accel.disruptive));
  } catch (const DegenerateGeometryError&) {
    line("a_y", sign, "degenerate", "-");
    line("a_y, a_x", "-", "degenerate", "-");
  }

  const auto both = classify(model, OutputCase::Both);
  line("r, a_y", "-", yes_no(both.attack_exists), yes_no(both.disruptive));
}

int cmd_analyze(const Source& src, std::ostream& out) {
  const ScenarioFile f = src.load();
  const LateralModel model = build_model(f.vehicle, f.run.vx);
  const auto& p = f.vehicle;

  out << "vehicle: m=" << fmt(p.m) << " Iz=" << fmt(p.Iz) << " a=" << fmt(p.a) << " b=" << fmt(p.b)
      << " Cf=" << fmt(p.Cf) << " Cr=" << fmt(p.Cr) << "  vx=" << fmt(f.run.vx) << " m/s\n";
  out << "output: " << to_string(f.run.output_case) << "\n";

  const InvariantZeroReport rep = classify(model, f.run.output_case);
  if (rep.zeros.empty()) {
    out << "invariant zeros: none (no invariant zeros: strongly observable)\n";
  } else {
    for (const auto& z : rep.zeros) {
      out << "invariant zero: s0 = " << fmt(z.value.real(), 4) << " 1/s (" << (z.stable ? "stable" : "unstable")
          << ")\n";
    }
  }
  out << "classification: " << to_string(rep.classification) << "\n";
  out << "zero-dynamics attack: " << (rep.attack_exists ? "exists" : "impossible") << "\n";
  out << "verdict: " << (rep.disruptive ? "DISRUPTIVE" : "non-disruptive") << "\n";

  const double margin = a_stability_margin(model);
  out << "A stability margin: " << fmt(margin) << " m^2 (" << (margin > 0.0 ? "A Hurwitz" : "condition violated")
      << ")\n";
  const double cond = disruptive_condition(p);
  out << "aCf - bCr: " << fmt(cond) << " N m/rad ("
      << (cond < 0.0 ? "negative: lateral-acceleration zero stable" : "non-negative: lateral-acceleration zero unsafe")
      << ")\n";
  const auto eig = eigenvalues_A(model);
  out << "eigenvalues of A: " << fmt(eig[0].real()) << (eig[0].imag() != 0.0 ? " " + fmt(eig[0].imag()) + "i" : "")
      << ", " << fmt(eig[1].real()) << (eig[1].imag() != 0.0 ? " +" + fmt(eig[1].imag()) + "i" : "") << "\n";
  print_summary(out, f);
  return kExitOk;
}

void report_run(std::ostream& msg, const Trajectory& traj, const std::string& label) {
  msg << label << ": " << traj.size() << " samples, t_end = " << fmt(traj.t.back()) << " s";
  if (traj.diverged) msg << "  [diverged: state norm ceiling reached]";
  msg << "\n";
}

int cmd_simulate(const Source& src, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const Scenario sc = to_scenario(src.load());
  const Trajectory traj = integrate(sc);
  if (out_path.empty() || out_path == "-") {
    write_trajectory_csv(out, traj);
    report_run(err, traj, "simulated");
  } else {
    write_trajectory_csv(std::filesystem::path(out_path), traj);
    report_run(out, traj, "wrote " + out_path);
  }
  return kExitOk;
}

int cmd_pair(const Source& src, const std::string& prefix, std::ostream& out) {
  const ScenarioFile f = src.load();
  if (!f.attack.enabled) throw ConfigError("pair: the scenario has no enabled attack");
  const PairResult pair = run_pair(to_scenario(f));
  const std::string attacked = prefix + "_attacked.csv";
  const std::string free = prefix + "_free.csv";
  write_trajectory_csv(std::filesystem::path(attacked), pair.attacked);
  write_trajectory_csv(std::filesystem::path(free), pair.free);
  report_run(out, pair.attacked, "wrote " + attacked);
  report_run(out, pair.free, "wrote " + free);
  out << "max_output_gap = " << fmt(pair.max_output_gap, 9) << "\n";
  return kExitOk;
}

int cmd_detect(const std::string& csv, const DetectorConfig& cfg, std::ostream& out) {
  const TrajectoryTable table = read_trajectory_csv(std::filesystem::path(csv));
  const DetectorVerdict v = detect(table.t, table.ay, table.ax, cfg);
  out << "attacked = " << (v.attacked ? "true" : "false") << "\n";
  out << "first_alarm_time = " << (v.first_alarm_time ? fmt(*v.first_alarm_time, 9) : std::string("none")) << "\n";
  out << "peak_ax = " << fmt(v.peak_ax, 9) << "\n";
  return v.attacked ? kExitAttackDetected : kExitOk;
}

int cmd_sweep(const Source& src, const std::string& param, double from, double to, int points,
              const std::string& out_path, std::ostream& out) {
  const ScenarioFile f = src.load();
  const auto rows = sweep(f.vehicle, f.run.vx, f.run.output_case, param, from, to, points);

  std::ofstream file;
  std::ostream* dst = &out;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open for writing: " + out_path);
    dst = &file;
  }
  *dst << param << ",zero,stability_margin,disruptive_condition,classification,disruptive\n";
  for (const auto& row : rows) {
    *dst << fmt(row.value, 9) << ',' << (row.zero ? fmt(*row.zero, 9) : std::string("nan")) << ','
         << fmt(row.stability_margin, 9) << ',' << fmt(row.disruptive_condition, 9) << ',' << row.classification
         << ',' << (row.disruptive ? 1 : 0) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-dynamics attack analysis for linear vehicle lateral dynamics", "lzda"};
  app.require_subcommand(1);

  Source analyze_src, sim_src, pair_src, sweep_src, show_src;
  std::string sim_out, pair_out = "pair", sweep_out, csv_path, sweep_param = "a";
  double sweep_from = 1.3, sweep_to = 1.6;
  int sweep_points = 31;
  DetectorConfig det_cfg;

  auto* analyze = app.add_subcommand("analyze", "Invariant zeros, classification and sensor-set summary");
  analyze_src.attach(analyze);

  auto* simulate = app.add_subcommand("simulate", "Simulate the scenario and write a trajectory CSV");
  sim_src.attach(simulate);
  simulate->add_option("--out", sim_out, "Output CSV path (default: stdout)");

  auto* pair = app.add_subcommand("pair", "Attacked and attack-free runs; prints max_output_gap");
  pair_src.attach(pair);
  pair->add_option("--out", pair_out, "Output prefix: PREFIX_attacked.csv, PREFIX_free.csv");

  auto* detect_cmd = app.add_subcommand("detect", "Run the a_x consistency detector on a trajectory CSV");
  detect_cmd->add_option("csv,--csv", csv_path, "Trajectory CSV")->required();
  detect_cmd->add_option("--ay-quiet", det_cfg.ay_quiet_threshold, "a_y quiet level [m/s^2]");
  detect_cmd->add_option("--ax-alarm", det_cfg.ax_alarm_threshold, "a_x alarm level [m/s^2]");
  detect_cmd->add_option("--window", det_cfg.window, "Minimum dwell [s]");

  auto* sweep_cmd = app.add_subcommand("sweep", "Invariant zero across a parameter range (CSV)");
  sweep_src.attach(sweep_cmd);
  sweep_cmd->add_option("--param", sweep_param, "m, Iz, a, b, Cf, Cr or vx");
  sweep_cmd->add_option("--from", sweep_from, "Range start");
  sweep_cmd->add_option("--to", sweep_to, "Range end");
  sweep_cmd->add_option("--points", sweep_points, "Grid points, endpoints included");
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path (default: stdout)");

  auto* show = app.add_subcommand("scenario", "Print the resolved scenario file");
  show_src.attach(show);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_src, out);
    if (*simulate) return cmd_simulate(sim_src, sim_out, out, err);
    if (*pair) return cmd_pair(pair_src, pair_out, out);
    if (*detect_cmd) return cmd_detect(csv_path, det_cfg, out);
    if (*sweep_cmd) return cmd_sweep(sweep_src, sweep_param, sweep_from, sweep_to, sweep_points, sweep_out, out);
    if (*show) {
      out << format_scenario(show_src.load());
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace lzda::cli
