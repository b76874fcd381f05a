#include "lzda/attack.hpp"

#include <cmath>
#include <stdexcept>

#include "lzda/analysis.hpp"

namespace lzda {

AttackGenerator::AttackGenerator(const LateralModel& model, OutputCase c, double xi_vy, double xi_r, double t0,
                                 double s0)
    : model_(model), case_(c), xi_vy_(xi_vy), xi_r_(xi_r), t0_(t0), s0_(s0) {
  const double a11 = model.a11();
  const double a12 = model.a12();
  const double a21 = model.a21();
  const double a22 = model.a22();
  const double b2 = model.b2();
  if (c == OutputCase::YawRate) {
    gain_vy_ = -a21 / b2;
    gain_r_ = 0.0;
  } else {
    const double k = a12 + model.vx();
    gain_vy_ = -(a11 * a11 + a21 * k) / (b2 * k);
    gain_r_ = -(a11 * a12 + k * a22) / (b2 * k);
  }
}

AttackGenerator AttackGenerator::case1(const LateralModel& model, double delta_vy0, double t0) {
  return AttackGenerator(model, OutputCase::YawRate, delta_vy0, 0.0, t0, model.a11());
}

AttackGenerator AttackGenerator::case2(const LateralModel& model, double r0, double t0) {
  const double s0 = invariant_zeros(model, OutputCase::LateralAccel).front().value.real();
  const double xi_vy = -(model.a12() + model.vx()) * r0 / model.a11();
  return AttackGenerator(model, OutputCase::LateralAccel, xi_vy, r0, t0, s0);
}

std::array<double, 2> AttackGenerator::zero_dynamics(double t) const {
  if (t < t0_) throw std::domain_error("zero_dynamics: t precedes attack onset");
  const double g = std::exp(s0_ * (t - t0_));
  return {xi_vy_ * g, xi_r_ * g};
}

double AttackGenerator::signal(double t) const {
  if (t < t0_) return 0.0;
  const auto [vy, r] = zero_dynamics(t);
  return gain_vy_ * vy + gain_r_ * r;
}

AttackGenerator init_case1(const LateralModel& model, double delta_vy0, double t0) {
  return AttackGenerator::case1(model, delta_vy0, t0);
}

AttackGenerator init_case2(const LateralModel& model, double r0, double t0) {
  return AttackGenerator::case2(model, r0, t0);
}

}  // namespace lzda
