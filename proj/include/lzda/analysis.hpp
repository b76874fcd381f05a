#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lzda/model.hpp"

namespace lzda {

struct InvariantZero {
  std::complex<double> value;
  bool stable;  // Re(value) < 0
};

enum class ObservabilityClass { StronglyObservable, StronglyDetectableOnly, NotStronglyDetectable };

std::string_view to_string(ObservabilityClass c);

/// Invariant zeros and what they imply for one output configuration.
///
/// attack_exists iff zeros is nonempty; disruptive iff some zero is unstable.
/// classification follows the usual characterization: no zeros means strongly
/// observable, all-stable zeros means strongly detectable only.
struct InvariantZeroReport {
  OutputCase output_case;
  std::vector<InvariantZero> zeros;
  ObservabilityClass classification;
  bool attack_exists;
  bool disruptive;
};

/// [sI - A, -B; C, 0] for the yaw-moment attack channel (steering excluded).
/// 3x3 for the single-output cases, 4x3 for Both.
Eigen::MatrixXcd rosenbrock(const LateralModel& model, OutputCase c, std::complex<double> s);

/// Closed-form invariant zeros: YawRate -> {a11}; LateralAccel -> {(Cf+Cr) vx / (aCf - bCr)};
/// Both -> {}. Throws DegenerateGeometryError for LateralAccel when aCf == bCr.
std::vector<InvariantZero> invariant_zeros(const LateralModel& model, OutputCase c);

InvariantZeroReport classify(const LateralModel& model, OutputCase c);

/// Builds the report from an already computed zero list.
InvariantZeroReport classify_zeros(OutputCase c, std::vector<InvariantZero> zeros);

/// aCf - bCr [N m/rad]. Negative means the lateral-acceleration zero is stable.
double disruptive_condition(const VehicleParams& params);

/// Relative singular-value cutoff used by the numerical rank test.
inline constexpr double kRankTolerance = 1e-9;

/// Numerical rank of the column-equilibrated Rosenbrock matrix at s.
int rosenbrock_rank(const LateralModel& model, OutputCase c, std::complex<double> s);

/// Samples `samples` pseudo-random complex frequencies and checks that the Rosenbrock
/// matrix has full column rank (3) away from the closed-form zeros and loses rank at
/// each of them. Independent numerical confirmation of invariant_zeros.
bool rank_sweep_check(const LateralModel& model, OutputCase c, int samples, std::uint64_t seed = 0x5eed);

}  // namespace lzda
