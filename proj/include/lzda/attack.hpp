#pragma once

#include <array>

#include "lzda/model.hpp"

namespace lzda {

/// Open-loop generator of the zero-dynamics yaw-moment attack.
///
/// Holds the difference state (attacked minus attack-free) at onset and propagates it
/// in closed form, xi(t) = xi(t0) exp(s0 (t - t0)). The signal is the proposition's
/// feedback expression evaluated on xi(t), so the attacker never needs the plant's vy.
class AttackGenerator {
 public:
  /// Yaw-rate output: xi = (delta_vy0, 0), s0 = a11, M = -(a21 / b2) vy.
  static AttackGenerator case1(const LateralModel& model, double delta_vy0, double t0 = 0.0);

  /// Lateral-acceleration output: xi = (-(a12 + vx) r0 / a11, r0), s0 = a11 vx / (a12 + vx).
  /// Throws DegenerateGeometryError when aCf == bCr.
  static AttackGenerator case2(const LateralModel& model, double r0, double t0 = 0.0);

  OutputCase output_case() const noexcept { return case_; }
  const LateralModel& model() const noexcept { return model_; }
  double xi_vy() const noexcept { return xi_vy_; }
  double xi_r() const noexcept { return xi_r_; }
  double t0() const noexcept { return t0_; }
  double s0() const noexcept { return s0_; }
  bool divergent() const noexcept { return s0_ > 0.0; }

  /// Yaw moment to inject at time t [N m]; zero before onset.
  double signal(double t) const;

  /// Difference state (vy, r) at t >= t0. Throws std::domain_error for t < t0.
  std::array<double, 2> zero_dynamics(double t) const;

 private:
  AttackGenerator(const LateralModel& model, OutputCase c, double xi_vy, double xi_r, double t0, double s0);

  LateralModel model_;
  OutputCase case_;
  double xi_vy_;
  double xi_r_;
  double t0_;
  double s0_;
  // M = gain_vy * vy + gain_r * r on the zero-output manifold.
  double gain_vy_ = 0.0;
  double gain_r_ = 0.0;
};

AttackGenerator init_case1(const LateralModel& model, double delta_vy0, double t0 = 0.0);
AttackGenerator init_case2(const LateralModel& model, double r0, double t0 = 0.0);

}  // namespace lzda
