// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lzda/analysis.hpp"
#include "lzda/csv.hpp"
#include "lzda/findings.hpp"
#include "lzda/scenario_file.hpp"
#include "lzda/sim.hpp"
#include "oracles.hpp"

using namespace lzda;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string f(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

VehicleParams suv_front(double a) {
  VehicleParams p = kSuvParams;
  p.a = a;
  return p;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Least-squares slope of log|v| against t.
double log_slope(const std::vector<double>& t, const std::vector<double>& v) {
  const std::size_t n = t.size();
  double st = 0, sl = 0, stt = 0, stl = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double l = std::log(std::abs(v[k]));
    st += t[k];
    sl += l;
    stt += t[k] * t[k];
    stl += t[k] * l;
  }
  return (n * stl - st * sl) / (n * stt - st * st);
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("lzda_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Outcome ac1() {
  const double s0 = invariant_zeros(build_model(kSuvParams, 5.0), OutputCase::LateralAccel)[0].value.real();
  return {std::abs(s0 - (-775.3)) <= 0.1, "s0 = " + f(s0, 8) + " 1/s"};
}

Outcome ac2() {
  const auto z = invariant_zeros(build_model(suv_front(1.521), 5.0), OutputCase::LateralAccel)[0];
  return {std::abs(z.value.real() - 114.6) <= 0.1 && !z.stable, "s0 = " + f(z.value.real(), 8) + " 1/s, unstable"};
}

Outcome ac3() {
  const auto eig = eigenvalues_A(build_model(suv_front(1.521), 5.0));
  const bool ok = std::abs(eig[0].real() - (-27.6)) <= 0.1 && std::abs(eig[1].real() - (-23.5)) <= 0.1 &&
                  eig[0].imag() == 0.0 && eig[1].imag() == 0.0;
  return {ok, "eig = (" + f(eig[0].real()) + ", " + f(eig[1].real()) + ")"};
}

Outcome ac4() {
  const double xi = init_case2(build_model(kSuvParams, 5.0), 1.0).xi_vy();
  return {std::abs(xi - 6.4e-3) <= 0.1e-3, "xi_vy = " + f(xi) + " m/s"};
}

Outcome ac5() {
  const Scenario sc = to_scenario(preset("fig3"));
  const Trajectory traj = integrate(sc);
  const double max_r = max_abs(traj.r);
  const double oracle = 5.0 * std::exp(sc.model.a11() * 1.0);
  const double err = std::abs(traj.vy.back() - oracle);
  const bool ok = max_r <= 1e-9 && err <= 1e-4 && std::abs(traj.t.back() - 1.0) < 1e-12;
  return {ok, "max|r| = " + f(max_r) + ", |vy(1) - 5e^a11| = " + f(err)};
}

Outcome ac6() {
  const PairResult pair = run_pair(to_scenario(preset("fig4")));
  double r_gap = 0.0;
  const std::size_t n = std::min(pair.attacked.size(), pair.free.size());
  for (std::size_t k = 0; k < n; ++k) r_gap = std::max(r_gap, std::abs(pair.attacked.r[k] - pair.free.r[k]));
  const double dv0 = pair.attacked.vy[0] - pair.free.vy[0];
  bool monotone = true;
  for (std::size_t k = 1; k < n; ++k) {
    const double prev = std::abs(pair.attacked.vy[k - 1] - pair.free.vy[k - 1]);
    const double cur = std::abs(pair.attacked.vy[k] - pair.free.vy[k]);
    monotone = monotone && cur < prev;
  }
  const bool ok = r_gap <= 1e-6 && pair.max_output_gap <= 1e-6 && std::abs(std::abs(dv0) - 10.0) < 1e-12 && monotone;
  return {ok, "r gap = " + f(r_gap) + ", vy gap(0) = " + f(dv0) + ", monotone = " + (monotone ? "yes" : "no")};
}

Outcome ac7() {
  const Scenario sc = to_scenario(preset("fig5"));
  const Trajectory traj = integrate(sc);
  const double max_ay = max_abs(traj.ay);
  const double s0 = sc.attack->s0();
  const double horizon = 10.0 / std::abs(s0);
  const auto it = std::lower_bound(traj.t.begin(), traj.t.end(), horizon);
  if (it == traj.t.end()) return {false, "horizon shorter than 10/|s0|"};
  const auto k = static_cast<std::size_t>(it - traj.t.begin());
  const double vy_ratio = std::abs(traj.vy[k] / traj.vy[0]);
  const double r_ratio = std::abs(traj.r[k] / traj.r[0]);
  const bool ok = max_ay <= 1e-6 && vy_ratio <= std::exp(-10.0) && r_ratio <= std::exp(-10.0) &&
                  std::abs(traj.t.back() - 0.02) < 1e-12 && sc.dt == 1e-6;
  return {ok, "max|a_y| = " + f(max_ay) + ", decay at t=" + f(traj.t[k]) + ": vy " + f(vy_ratio) + ", r " +
                  f(r_ratio) + " (e^-10 = " + f(std::exp(-10.0)) + ")"};
}

Outcome ac8() {
  const Scenario sc = to_scenario(preset("fig6"));
  const Trajectory traj = integrate(sc);
  const double max_ay = max_abs(traj.ay);
  const double rate_vy = log_slope(traj.t, traj.vy);
  const double rate_r = log_slope(traj.t, traj.r);
  const bool ok = traj.diverged && max_ay <= 1e-6 && std::abs(rate_vy - 114.6) <= 0.01 * 114.6 &&
                  std::abs(rate_r - 114.6) <= 0.01 * 114.6;
  return {ok, std::string("diverged = ") + (traj.diverged ? "yes" : "no") + " at t = " + f(traj.t.back()) +
                  ", max|a_y| = " + f(max_ay) + ", growth rates vy " + f(rate_vy) + ", r " + f(rate_r)};
}

Outcome ac9() {
  struct Expected {
    const char* outputs;
    const char* condition;
    bool threat;
    bool disruptive;
  };
  const Expected table[] = {
      {"r", "-", true, false},
      {"a_y", "aCf-bCr>0", true, true},
      {"a_y", "aCf-bCr<0", true, false},
      {"a_y, a_x", "-", false, false},
      {"r, a_y", "-", false, false},
  };
  const auto rows = findings_table();
  if (rows.size() != 5) return {false, "expected 5 rows"};
  int matched = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    matched += rows[i].outputs == table[i].outputs && rows[i].condition == table[i].condition &&
               rows[i].threat == table[i].threat && rows[i].disruptive == table[i].disruptive;
  }
  return {matched == 5, std::to_string(matched) + "/5 rows match"};
}

Outcome ac10() {
  oracle::ParamGenerator gen(2024);
  int full = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = gen.next();
    full += rank_sweep_check(build_model(c.params, c.vx), OutputCase::Both, 100, 7000 + i);
  }
  return {full == 200, std::to_string(full) + "/200 parameter sets full rank at 100 random s"};
}

Outcome ac11() {
  auto error_at = [](double dt) {
    ScenarioFile file = preset("fig3");
    file.run.dt = dt;
    const Scenario sc = to_scenario(file);
    const Trajectory traj = integrate(sc);
    double err = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
      err = std::max(err, std::abs(traj.vy[k] - 5.0 * std::exp(sc.model.a11() * traj.t[k])));
    }
    return err;
  };
  const double e1 = error_at(0.02), e2 = error_at(0.01), e3 = error_at(0.005);
  const double q1 = e1 / e2, q2 = e2 / e3;
  const bool ok = std::abs(q1 - 16.0) <= 4.0 && std::abs(q2 - 16.0) <= 4.0;
  return {ok, "errors " + f(e1) + ", " + f(e2) + ", " + f(e3) + "; ratios " + f(q1, 4) + ", " + f(q2, 4)};
}

Outcome ac12() {
  const std::string fig5 = (workdir() / "fig5.csv").string();
  const std::string prefix = (workdir() / "fig4").string();
  if (cli({"simulate", "--preset", "fig5", "--out", fig5}) != 0) return {false, "simulate fig5 failed"};
  if (cli({"pair", "--preset", "fig4", "--out", prefix}) != 0) return {false, "pair fig4 failed"};
  const int attacked = cli({"detect", fig5});
  const int free = cli({"detect", prefix + "_free.csv"});
  return {attacked == cli::kExitAttackDetected && free == cli::kExitOk,
          "exit codes: fig5 " + std::to_string(attacked) + ", fig4 attack-free " + std::to_string(free)};
}

Outcome ac13() {
  const fs::path scen = workdir() / "sweep.ini";
  {
    std::ofstream(scen) << "[run]\nvx = 5\ncase = lateral_accel\n";
  }
  std::string csv;
  if (cli({"sweep", "--scenario", scen.string(), "--param", "a", "--from", "1.3", "--to", "1.6", "--points", "301"},
          &csv) != 0) {
    return {false, "sweep failed"};
  }
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::pair<double, double>> pts;  // (a, aCf - bCr)
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string a, zero, margin, cond;
    std::getline(row, a, ',');
    std::getline(row, zero, ',');
    std::getline(row, margin, ',');
    std::getline(row, cond, ',');
    pts.emplace_back(std::stod(a), std::stod(cond));
  }
  const double root = kSuvParams.b * kSuvParams.Cr / kSuvParams.Cf;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (std::signbit(pts[i - 1].second) != std::signbit(pts[i].second)) {
      const bool ok = pts[i - 1].first <= root && root <= pts[i].first;
      return {ok, "sign flip in [" + f(pts[i - 1].first) + ", " + f(pts[i].first) + "], oracle a = " + f(root)};
    }
  }
  return {false, "no sign flip found"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC-1  lateral-accel zero, stable SUV", ac1},
      {"AC-2  lateral-accel zero, a = 1.521", ac2},
      {"AC-3  plant poles, a = 1.521", ac3},
      {"AC-4  onset lateral velocity on manifold", ac4},
      {"AC-5  fig3 yaw-rate attack", ac5},
      {"AC-6  fig4 undetectable pair", ac6},
      {"AC-7  fig5 stable lateral-accel attack", ac7},
      {"AC-8  fig6 unstable lateral-accel attack", ac8},
      {"AC-9  sensor-set summary table", ac9},
      {"AC-10 no zeros with both outputs", ac10},
      {"AC-11 RK4 convergence order", ac11},
      {"AC-12 a_x detector exit codes", ac12},
      {"AC-13 disruptiveness boundary sweep", ac13},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  fs::remove_all(workdir());
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
