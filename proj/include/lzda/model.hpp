#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>

namespace lzda {

/// Physical constants of the single-track (bicycle) vehicle model.
struct VehicleParams {
  double m = 2270.0;    // mass [kg]
  double Iz = 4600.0;   // yaw moment of inertia [kg m^2]
  double a = 1.421;     // CG to front axle [m]
  double b = 1.438;     // CG to rear axle [m]
  double Cf = 69800.0;  // front cornering stiffness [N/rad]
  double Cr = 69600.0;  // rear cornering stiffness [N/rad]

  /// Throws ValidationError naming the first non-positive field.
  void validate() const;

  friend bool operator==(const VehicleParams&, const VehicleParams&) = default;
};

/// The SUV parameter set used throughout the reproduction scenarios.
inline constexpr VehicleParams kSuvParams{};

enum class OutputCase { YawRate, LateralAccel, Both };

std::string_view to_string(OutputCase c);
/// Parses "yaw_rate" | "lateral_accel" | "both".
OutputCase parse_output_case(std::string_view s);

/// State x = [vy, r]:  x' = A x + B Mz + E delta, with B = [0, b2], E = [e1, e2].
///
/// Coefficients are fixed at construction; vx is a scenario constant.
class LateralModel {
 public:
  /// Throws ValidationError for non-positive parameters or vx.
  LateralModel(const VehicleParams& params, double vx);

  double vx() const noexcept { return vx_; }
  double a11() const noexcept { return a11_; }
  double a12() const noexcept { return a12_; }
  double a21() const noexcept { return a21_; }
  double a22() const noexcept { return a22_; }
  double b2() const noexcept { return b2_; }
  double e1() const noexcept { return e1_; }
  double e2() const noexcept { return e2_; }
  const VehicleParams& params() const noexcept { return params_; }

 private:
  VehicleParams params_;
  double vx_;
  double a11_, a12_, a21_, a22_;
  double b2_, e1_, e2_;
};

LateralModel build_model(const VehicleParams& params, double vx);

/// y = C x + D_delta * delta. One row for YawRate/LateralAccel, two (r then a_y) for Both.
struct OutputModel {
  OutputCase output_case;
  std::size_t rows;
  std::array<std::array<double, 2>, 2> C{};
  std::array<double, 2> D_delta{};
};

OutputModel output_model(const LateralModel& model, OutputCase c);

/// (a+b)^2 - m (aCf - bCr) vx^2 / (Cr Cf). Positive means A is Hurwitz.
double a_stability_margin(const LateralModel& model);

/// Roots of s^2 - tr(A) s + det(A), sorted by real part ascending.
std::array<std::complex<double>, 2> eigenvalues_A(const LateralModel& model);

}  // namespace lzda
