#include "lzda/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "lzda/errors.hpp"

namespace lzda {

std::string_view to_string(ObservabilityClass c) {
  switch (c) {
    case ObservabilityClass::StronglyObservable:
      return "strongly observable";
    case ObservabilityClass::StronglyDetectableOnly:
      return "strongly detectable";
    case ObservabilityClass::NotStronglyDetectable:
      return "NOT strongly detectable";
  }
  return "?";
}

Eigen::MatrixXcd rosenbrock(const LateralModel& model, OutputCase c, std::complex<double> s) {
  const OutputModel out = output_model(model, c);
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(2 + static_cast<Eigen::Index>(out.rows), 3);
  P(0, 0) = s - model.a11();
  P(0, 1) = -model.a12();
  P(1, 0) = -model.a21();
  P(1, 1) = s - model.a22();
  P(1, 2) = -model.b2();
  for (std::size_t i = 0; i < out.rows; ++i) {
    P(2 + static_cast<Eigen::Index>(i), 0) = out.C[i][0];
    P(2 + static_cast<Eigen::Index>(i), 1) = out.C[i][1];
  }
  return P;
}

double disruptive_condition(const VehicleParams& params) {
  return params.a * params.Cf - params.b * params.Cr;
}

std::vector<InvariantZero> invariant_zeros(const LateralModel& model, OutputCase c) {
  switch (c) {
    case OutputCase::YawRate: {
      const double s0 = model.a11();
      return {InvariantZero{s0, s0 < 0.0}};
    }
    case OutputCase::LateralAccel: {
      const auto& p = model.params();
      const double denom = disruptive_condition(p);
      if (std::abs(denom) <= 1e-12 * (p.a * p.Cf + p.b * p.Cr)) {
        throw DegenerateGeometryError(
            "aCf == bCr: lateral-acceleration output loses its yaw-rate dependence and the "
            "invariant zero is undefined");
      }
      const double s0 = (p.Cf + p.Cr) * model.vx() / denom;
      return {InvariantZero{s0, s0 < 0.0}};
    }
    case OutputCase::Both:
      return {};
  }
  return {};
}

InvariantZeroReport classify_zeros(OutputCase c, std::vector<InvariantZero> zeros) {
  const bool any_unstable =
      std::any_of(zeros.begin(), zeros.end(), [](const InvariantZero& z) { return !(z.value.real() < 0.0); });

  InvariantZeroReport report{c, std::move(zeros), ObservabilityClass::StronglyObservable, false, false};
  report.attack_exists = !report.zeros.empty();
  report.disruptive = any_unstable;
  if (report.attack_exists) {
    report.classification =
        any_unstable ? ObservabilityClass::NotStronglyDetectable : ObservabilityClass::StronglyDetectableOnly;
  }
  return report;
}

InvariantZeroReport classify(const LateralModel& model, OutputCase c) {
  return classify_zeros(c, invariant_zeros(model, c));
}

int rosenbrock_rank(const LateralModel& model, OutputCase c, std::complex<double> s) {
  Eigen::MatrixXcd P = rosenbrock(model, c, s);
  // Column scaling preserves rank and removes the 1/Iz scale disparity.
  for (Eigen::Index j = 0; j < P.cols(); ++j) {
    const double n = P.col(j).norm();
    if (n > 0.0) P.col(j) /= n;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(P);
  const auto& sv = svd.singularValues();
  const double cutoff = kRankTolerance * sv(0);
  return static_cast<int>((sv.array() > cutoff).count());
}

bool rank_sweep_check(const LateralModel& model, OutputCase c, int samples, std::uint64_t seed) {
  if (samples < 1) throw ConfigError("rank_sweep_check: samples must be >= 1");

  std::vector<InvariantZero> zeros = invariant_zeros(model, c);

  for (const auto& z : zeros) {
    if (rosenbrock_rank(model, c, z.value) >= 3) return false;
  }

  double radius = 1.0;
  for (double v : {model.a11(), model.a12(), model.a21(), model.a22(), model.vx()}) {
    radius = std::max(radius, 2.0 * std::abs(v));
  }
  for (const auto& z : zeros) radius = std::max(radius, 2.0 * std::abs(z.value));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-radius, radius);
  for (int i = 0; i < samples; ++i) {
    const std::complex<double> s(coord(rng), coord(rng));
    const bool near_zero = std::any_of(zeros.begin(), zeros.end(), [&](const InvariantZero& z) {
      return std::abs(s - z.value) <= 1e-6 * std::max(1.0, std::abs(z.value));
    });
    if (near_zero) continue;
    if (rosenbrock_rank(model, c, s) != 3) return false;
  }
  return true;
}

}  // namespace lzda
