#include "lzda/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lzda/errors.hpp"

namespace lzda {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError(field, "must be a finite positive number, got " + std::to_string(value));
  }
}

}  // namespace

void VehicleParams::validate() const {
  require_positive(m, "m");
  require_positive(Iz, "Iz");
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(Cf, "Cf");
  require_positive(Cr, "Cr");
}

std::string_view to_string(OutputCase c) {
  switch (c) {
    case OutputCase::YawRate:
      return "yaw_rate";
    case OutputCase::LateralAccel:
      return "lateral_accel";
    case OutputCase::Both:
      return "both";
  }
  return "?";
}

OutputCase parse_output_case(std::string_view s) {
  if (s == "yaw_rate") return OutputCase::YawRate;
  if (s == "lateral_accel") return OutputCase::LateralAccel;
  if (s == "both") return OutputCase::Both;
  throw ValidationError("case", "expected yaw_rate, lateral_accel or both, got '" + std::string(s) + "'");
}

LateralModel::LateralModel(const VehicleParams& params, double vx) : params_(params), vx_(vx) {
  params.validate();
  require_positive(vx, "vx");

  const auto& [m, Iz, a, b, Cf, Cr] = params;
  a11_ = -2.0 * (Cf + Cr) / (vx * m);
  a12_ = 2.0 * (b * Cr - a * Cf) / (vx * m) - vx;
  a21_ = 2.0 * (b * Cr - a * Cf) / (vx * Iz);
  a22_ = -2.0 * (a * a * Cf + b * b * Cr) / (vx * Iz);
  b2_ = 1.0 / Iz;
  e1_ = 2.0 * Cf / m;
  e2_ = 2.0 * a * Cf / Iz;
}

LateralModel build_model(const VehicleParams& params, double vx) { return LateralModel(params, vx); }

OutputModel output_model(const LateralModel& model, OutputCase c) {
  const std::array<double, 2> yaw_row{0.0, 1.0};
  const std::array<double, 2> accel_row{model.a11(), model.a12() + model.vx()};

  OutputModel out{c, 1};
  switch (c) {
    case OutputCase::YawRate:
      out.C[0] = yaw_row;
      out.D_delta[0] = 0.0;
      break;
    case OutputCase::LateralAccel:
      out.C[0] = accel_row;
      out.D_delta[0] = model.e1();
      break;
    case OutputCase::Both:
      out.rows = 2;
      out.C = {yaw_row, accel_row};
      out.D_delta = {0.0, model.e1()};
      break;
  }
  return out;
}

double a_stability_margin(const LateralModel& model) {
  const auto& p = model.params();
  const double wheelbase = p.a + p.b;
  const double vx = model.vx();
  return wheelbase * wheelbase - p.m * (p.a * p.Cf - p.b * p.Cr) / (p.Cr * p.Cf) * vx * vx;
}

std::array<std::complex<double>, 2> eigenvalues_A(const LateralModel& model) {
  using cplx = std::complex<double>;
  const double half_trace = 0.5 * (model.a11() + model.a22());
  const double det = model.a11() * model.a22() - model.a12() * model.a21();
  const double disc = half_trace * half_trace - det;

  if (disc < 0.0) {
    const double im = std::sqrt(-disc);
    return {cplx(half_trace, -im), cplx(half_trace, im)};
  }
  // q is the larger-magnitude root; the other follows from det = q * other.
  const double q = half_trace + std::copysign(std::sqrt(disc), half_trace);
  const double other = q != 0.0 ? det / q : 0.0;
  return {cplx(std::min(q, other), 0.0), cplx(std::max(q, other), 0.0)};
}

}  // namespace lzda
