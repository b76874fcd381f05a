#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lzda/attack.hpp"
#include "lzda/model.hpp"

namespace lzda {

using State = std::array<double, 2>;  // (vy [m/s], r [rad/s])

/// Driver steering angle delta(t) [rad].
class SteeringProfile {
 public:
  struct Zero {};
  /// 0 for t <= t_on, amplitude * sin(omega t) afterwards.
  struct DelayedSine {
    double t_on = 0.1;
    double omega = 10.0;
    double amplitude = 1.0;
  };
  /// Piecewise-linear through (t, delta) samples, held constant beyond the ends.
  struct Custom {
    std::vector<std::pair<double, double>> samples;
  };

  SteeringProfile() = default;
  SteeringProfile(Zero z) : kind_(z) {}
  SteeringProfile(DelayedSine s) : kind_(s) {}
  /// Throws ValidationError unless samples are nonempty with strictly increasing t.
  SteeringProfile(Custom c);

  static SteeringProfile zero() { return SteeringProfile(Zero{}); }
  static SteeringProfile delayed_sine(double t_on = 0.1, double omega = 10.0, double amplitude = 1.0) {
    return SteeringProfile(DelayedSine{t_on, omega, amplitude});
  }

  double operator()(double t) const;

  const std::variant<Zero, DelayedSine, Custom>& kind() const noexcept { return kind_; }

 private:
  std::variant<Zero, DelayedSine, Custom> kind_{Zero{}};
};

inline constexpr double kStiffnessGuard = 0.05;
inline constexpr double kDefaultDivergenceCeiling = 1e6;

struct Scenario {
  LateralModel model;
  OutputCase output_case = OutputCase::YawRate;
  SteeringProfile steering{};
  std::optional<AttackGenerator> attack{};
  State x0{0.0, 0.0};
  double duration = 1.0;
  double dt = 1e-4;
  double divergence_ceiling = kDefaultDivergenceCeiling;

  /// Throws ConfigError on dt <= 0, duration < dt, or an attacked lateral-acceleration
  /// run whose |s0| dt exceeds kStiffnessGuard.
  void validate() const;

  /// floor(duration / dt) + 1, tolerant of representation error in the quotient.
  std::size_t sample_count() const;
};

struct Measurement {
  std::array<double, 2> y{};
  std::size_t rows = 1;
  double ay = 0.0;  // a11 vy + (a12 + vx) r + e1 delta
  double ax = 0.0;  // -vy r at constant vx
};

struct Trajectory {
  OutputCase output_case = OutputCase::YawRate;
  std::vector<double> t, vy, r, ay, ax, delta, mz_attack;
  std::vector<std::array<double, 2>> y;
  std::size_t output_rows = 1;
  /// State norm crossed the ceiling; the series end at the first sample beyond it.
  bool diverged = false;

  std::size_t size() const noexcept { return t.size(); }
  void reserve(std::size_t n);
  void push(double time, const State& x, double steer, double mz, const Measurement& meas);
};

/// x' = A x + B Mz + E delta.
State derivative(const LateralModel& model, const State& x, double Mz, double delta);

Measurement measure(const LateralModel& model, OutputCase c, const State& x, double delta);

/// Classical fixed-step RK4. The attack moment and steering are evaluated at the
/// sub-stage times from their closed forms.
Trajectory integrate(const Scenario& scenario);

struct PairResult {
  Trajectory attacked;
  Trajectory free;
  double max_output_gap = 0.0;
};

/// Runs the attacked scenario and its attack-free twin started from
/// x0 - (xi_vy, xi_r), both under the same steering. Requires an attack with onset 0.
PairResult run_pair(const Scenario& scenario);

}  // namespace lzda
