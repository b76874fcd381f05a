#include "lzda/sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lzda/errors.hpp"

namespace lzda {

SteeringProfile::SteeringProfile(Custom c) {
  if (c.samples.empty()) throw ValidationError("steering", "custom profile needs at least one sample");
  for (std::size_t i = 1; i < c.samples.size(); ++i) {
    if (!(c.samples[i].first > c.samples[i - 1].first)) {
      throw ValidationError("steering", "custom profile times must be strictly increasing");
    }
  }
  kind_ = std::move(c);
}

double SteeringProfile::operator()(double t) const {
  struct Visitor {
    double t;
    double operator()(const Zero&) const { return 0.0; }
    double operator()(const DelayedSine& s) const { return t <= s.t_on ? 0.0 : s.amplitude * std::sin(s.omega * t); }
    double operator()(const Custom& c) const {
      const auto& pts = c.samples;
      if (t <= pts.front().first) return pts.front().second;
      if (t >= pts.back().first) return pts.back().second;
      const auto hi = std::upper_bound(pts.begin(), pts.end(), t,
                                       [](double v, const std::pair<double, double>& p) { return v < p.first; });
      const auto lo = hi - 1;
      const double w = (t - lo->first) / (hi->first - lo->first);
      return lo->second + w * (hi->second - lo->second);
    }
  };
  return std::visit(Visitor{t}, kind_);
}

void Scenario::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive");
  if (!(duration >= dt)) throw ConfigError("duration must be at least one step (duration >= dt)");
  if (!(divergence_ceiling > 0.0)) throw ConfigError("divergence ceiling must be positive");
  if (attack && attack->output_case() == OutputCase::LateralAccel) {
    const double stiffness = std::abs(attack->s0()) * dt;
    if (stiffness > kStiffnessGuard) {
      throw ConfigError("stiff zero dynamics: |s0| dt = " + std::to_string(stiffness) + " exceeds " +
                        std::to_string(kStiffnessGuard) + "; use dt <= " +
                        std::to_string(kStiffnessGuard / std::abs(attack->s0())));
    }
  }
}

std::size_t Scenario::sample_count() const {
  return static_cast<std::size_t>(std::floor(duration / dt + 1e-9)) + 1;
}

void Trajectory::reserve(std::size_t n) {
  for (auto* v : {&t, &vy, &r, &ay, &ax, &delta, &mz_attack}) v->reserve(n);
  y.reserve(n);
}

void Trajectory::push(double time, const State& x, double steer, double mz, const Measurement& meas) {
  t.push_back(time);
  vy.push_back(x[0]);
  r.push_back(x[1]);
  ay.push_back(meas.ay);
  ax.push_back(meas.ax);
  delta.push_back(steer);
  mz_attack.push_back(mz);
  y.push_back(meas.y);
}

State derivative(const LateralModel& model, const State& x, double Mz, double delta) {
  return {model.a11() * x[0] + model.a12() * x[1] + model.e1() * delta,
          model.a21() * x[0] + model.a22() * x[1] + model.b2() * Mz + model.e2() * delta};
}

Measurement measure(const LateralModel& model, OutputCase c, const State& x, double delta) {
  Measurement meas;
  meas.ay = model.a11() * x[0] + (model.a12() + model.vx()) * x[1] + model.e1() * delta;
  meas.ax = -x[0] * x[1];
  switch (c) {
    case OutputCase::YawRate:
      meas.y = {x[1], 0.0};
      break;
    case OutputCase::LateralAccel:
      meas.y = {meas.ay, 0.0};
      break;
    case OutputCase::Both:
      meas.rows = 2;
      meas.y = {x[1], meas.ay};
      break;
  }
  return meas;
}

namespace {

State axpy(const State& x, double h, const State& k) { return {x[0] + h * k[0], x[1] + h * k[1]}; }

}  // namespace

Trajectory integrate(const Scenario& sc) {
  sc.validate();
  const LateralModel& model = sc.model;
  const std::size_t n = sc.sample_count();
  const double dt = sc.dt;

  auto moment = [&](double t) { return sc.attack ? sc.attack->signal(t) : 0.0; };
  auto rhs = [&](double t, const State& x) { return derivative(model, x, moment(t), sc.steering(t)); };

  Trajectory traj;
  traj.output_case = sc.output_case;
  traj.output_rows = sc.output_case == OutputCase::Both ? 2 : 1;
  traj.reserve(n);

  auto record = [&](double t, const State& x) {
    const double steer = sc.steering(t);
    traj.push(t, x, steer, moment(t), measure(model, sc.output_case, x, steer));
  };

  State x = sc.x0;
  record(0.0, x);
  for (std::size_t k = 1; k < n; ++k) {
    const double t = static_cast<double>(k - 1) * dt;
    const double half = 0.5 * dt;
    const State k1 = rhs(t, x);
    const State k2 = rhs(t + half, axpy(x, half, k1));
    const State k3 = rhs(t + half, axpy(x, half, k2));
    const State k4 = rhs(t + dt, axpy(x, dt, k3));
    for (int i = 0; i < 2; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    record(static_cast<double>(k) * dt, x);
    if (std::hypot(x[0], x[1]) > sc.divergence_ceiling) {
      traj.diverged = true;
      break;
    }
  }
  return traj;
}

PairResult run_pair(const Scenario& sc) {
  if (!sc.attack) throw ConfigError("pair run needs an attack");
  if (sc.attack->t0() != 0.0) throw ConfigError("pair run needs attack onset t0 = 0");

  Scenario free_sc = sc;
  free_sc.attack.reset();
  free_sc.x0 = {sc.x0[0] - sc.attack->xi_vy(), sc.x0[1] - sc.attack->xi_r()};

  PairResult result{integrate(sc), integrate(free_sc), 0.0};
  const std::size_t common = std::min(result.attacked.size(), result.free.size());
  const std::size_t rows = result.attacked.output_rows;
  for (std::size_t k = 0; k < common; ++k) {
    double sq = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double d = result.attacked.y[k][i] - result.free.y[k][i];
      sq += d * d;
    }
    result.max_output_gap = std::max(result.max_output_gap, std::sqrt(sq));
  }
  return result;
}

}  // namespace lzda
